#include "fveg/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fveg/errors.hpp"
#include "fveg/flux.hpp"
#include "fveg/problems.hpp"

namespace fveg {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + value);
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + value);
    }
}

std::vector<int> parse_grid_list(const std::string& value) {
    std::vector<int> grids;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        grids.push_back(static_cast<int>(parse_long("grids", item)));
    }
    if (grids.empty()) throw ConfigError("config: empty grid list");
    return grids;
}

} // namespace

void apply_config_value(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "problem") config.problem = value;
    else if (key == "nx") config.nx = static_cast<int>(parse_long(key, value));
    else if (key == "grids") config.grids = parse_grid_list(value);
    else if (key == "cfl") config.cfl = parse_double(key, value);
    else if (key == "tfinal") config.t_final = parse_double(key, value);
    else if (key == "flux_mode") config.flux_mode = value;
    else if (key == "out_dir") config.out_dir = value;
    else if (key == "output_cadence") config.output_cadence = static_cast<int>(parse_long(key, value));
    else if (key == "ref_nx") config.ref_nx = static_cast<int>(parse_long(key, value));
    else if (key == "seed") config.seed = static_cast<std::uint64_t>(parse_long(key, value));
    else if (key == "samples") config.samples = parse_long(key, value);
    else throw ConfigError("config: unknown key '" + key + "'");
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    RunConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
        apply_config_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

void RunConfig::validate() const {
    if (!problem.empty()) make_problem(problem); // throws with the valid-name list
    if (nx < 0) throw ConfigError("config: nx must be positive");
    if (cfl >= 0.0 && !(cfl > 0.0 && cfl < 1.0)) throw ConfigError("config: cfl must lie in (0,1)");
    if (t_final >= 0.0 && !(t_final >= 0.0)) throw ConfigError("config: tfinal must be nonnegative");
    if (!flux_mode.empty()) flux_mode_from_name(flux_mode);
    for (int g : grids)
        if (g < 1) throw ConfigError("config: grid sizes must be positive");
    if (ref_nx < 1) throw ConfigError("config: ref_nx must be positive");
    if (samples < 1) throw ConfigError("config: samples must be positive");
    if (output_cadence < 0) throw ConfigError("config: output_cadence must be nonnegative");
}

Provenance config_provenance(const RunConfig& config) {
    Provenance p;
    p.emplace_back("problem", config.problem);
    p.emplace_back("nx", std::to_string(config.nx));
    if (!config.grids.empty()) {
        std::string g;
        for (int v : config.grids) g += (g.empty() ? "" : ",") + std::to_string(v);
        p.emplace_back("grids", g);
    }
    p.emplace_back("cfl", std::to_string(config.cfl));
    p.emplace_back("tfinal", std::to_string(config.t_final));
    p.emplace_back("flux_mode", config.flux_mode);
    p.emplace_back("out_dir", config.out_dir);
    p.emplace_back("output_cadence", std::to_string(config.output_cadence));
    p.emplace_back("ref_nx", std::to_string(config.ref_nx));
    p.emplace_back("seed", std::to_string(config.seed));
    p.emplace_back("samples", std::to_string(config.samples));
    return p;
}

} // namespace fveg
