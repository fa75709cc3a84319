#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fveg/field_io.hpp"

namespace fveg {

// Run configuration shared by the CLI subcommands. Values left at their
// sentinel defaults are resolved from the problem spec before running.
struct RunConfig {
    std::string problem;
    int nx = 0;                      // 0: use 64
    std::vector<int> grids;          // convergence ladder; empty: {32,64,128}
    double cfl = -1.0;               // <0: problem default
    double t_final = -1.0;           // <0: problem default
    std::string flux_mode;           // empty: problem default
    std::string out_dir = "out";
    int output_cadence = 0;          // write fields every N steps (0: final only)
    int ref_nx = 256;                // nested reference grid for Riemann ladders
    std::uint64_t seed = 42;         // verification campaigns
    long samples = 10000;            // verification campaigns

    void validate() const; // throws ConfigError
};

// Flat key = value file, '#' starts a comment, unknown keys are errors.
RunConfig load_config_file(const std::string& path);

// Apply one key=value override (CLI flags reuse the file keys).
void apply_config_value(RunConfig& config, const std::string& key, const std::string& value);

// Serialized verbatim into every output for provenance.
Provenance config_provenance(const RunConfig& config);

} // namespace fveg
