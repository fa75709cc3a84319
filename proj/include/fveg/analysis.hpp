#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fveg/flux.hpp"
#include "fveg/grid.hpp"
#include "fveg/problems.hpp"

namespace fveg {

// Per-component absolute L1 error  sum_K |K| |U_K - U_K^ref|.
std::array<double, max_comp> l1_error(const CellField& numeric, const CellField& reference,
                                      const Grid& grid); // throws ConfigError on mismatch

// Experimental order of convergence under grid halving; NaN if an error vanishes.
double eoc(double e_coarse, double e_fine);

struct ErrorReport {
    int nx = 0;
    std::array<double, max_comp> l1{};
    std::array<double, max_comp> order{}; // NaN until the second row
    bool has_order = false;
    double seconds = 0.0;
    long steps = 0;
};

struct RunResult {
    AdvanceStats stats;
    CellField field;
    Grid grid;
};

// Run one problem instance to t_final.
RunResult run_single(const ProblemSpec& spec, int nx, double cfl, double t_final, FluxMode mode,
                     const AdvanceOptions* extra = nullptr);

// Exact block average onto a coarser grid; the refinement ratio must be a
// power of two (nested grids).
CellField restrict_field(const CellField& fine, const Grid& fine_grid, const Grid& coarse_grid);

struct ConvergenceConfig {
    ProblemSpec spec;
    std::vector<int> grids;
    double cfl = 0.45;
    double t_final = 1.0;
    FluxMode mode = FluxMode::EgWithFallback;
    int ref_nx = 256;          // self-convergence reference for problems without an exact solution
    std::string csv_path;      // empty: no file output
    std::string provenance;    // echoed into the CSV header
};

struct ConvergenceResult {
    std::vector<ErrorReport> rows;
    bool used_exact = false;
    int ref_nx = 0;
};

// Refinement ladder: runs every grid, compares against the exact solution or a
// nested reference run, computes EOC, optionally writes a CSV. A failing run
// aborts the ladder but the rows finished so far are still written/kept.
ConvergenceResult run_convergence(const ConvergenceConfig& config);

// Human-readable table.
std::string format_convergence_table(const ConvergenceResult& result,
                                     const std::vector<std::string>& comp_names);

std::vector<std::string> component_names(const ProblemSpec& spec);

} // namespace fveg
