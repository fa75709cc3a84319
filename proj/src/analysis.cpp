#include "fveg/analysis.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "fveg/version.hpp"

namespace fveg {

std::array<double, max_comp> l1_error(const CellField& numeric, const CellField& reference,
                                      const Grid& grid) {
    if (numeric.ncomp() != reference.ncomp() || numeric.cell_count() != reference.cell_count() ||
        numeric.cell_count() != grid.cell_count())
        throw ConfigError("l1_error: field/grid shape mismatch");
    std::array<double, max_comp> err{};
    for (int cell = 0; cell < grid.cell_count(); ++cell)
        for (int c = 0; c < numeric.ncomp(); ++c)
            err[c] += std::abs(numeric.at(cell, c) - reference.at(cell, c));
    for (int c = 0; c < numeric.ncomp(); ++c) err[c] *= grid.cell_measure();
    return err;
}

double eoc(double e_coarse, double e_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::log2(e_coarse / e_fine);
}

RunResult run_single(const ProblemSpec& spec, int nx, double cfl, double t_final, FluxMode mode,
                     const AdvanceOptions* extra) {
    const Grid grid = Grid::build(nx, nx, spec.domain);
    CellField field = initial_field(spec, grid);
    AdvanceOptions opt = extra ? *extra : AdvanceOptions{};
    opt.mode = mode;
    opt.cfl = cfl;
    AdvanceStats stats;
    if (spec.system == SystemKind::Wave)
        stats = advance_wave(grid, field, spec.wave, 0.0, t_final, opt);
    else
        stats = advance_euler(grid, field, spec.gas, 0.0, t_final, opt);
    return {stats, std::move(field), grid};
}

CellField restrict_field(const CellField& fine, const Grid& fine_grid, const Grid& coarse_grid) {
    const int ratio = fine_grid.nx() / coarse_grid.nx();
    if (ratio * coarse_grid.nx() != fine_grid.nx() || (ratio & (ratio - 1)) != 0 || ratio < 1 ||
        fine_grid.ny() != ratio * coarse_grid.ny())
        throw ConfigError("restrict_field: grids are not nested by a power-of-two factor");
    CellField out(fine.ncomp(), coarse_grid);
    const double w = 1.0 / (static_cast<double>(ratio) * ratio);
    for (int J = 0; J < coarse_grid.ny(); ++J)
        for (int I = 0; I < coarse_grid.nx(); ++I) {
            const int coarse = coarse_grid.cell_index(I, J);
            for (int j = 0; j < ratio; ++j)
                for (int i = 0; i < ratio; ++i) {
                    const int cell = fine_grid.cell_index(I * ratio + i, J * ratio + j);
                    for (int c = 0; c < fine.ncomp(); ++c) out.at(coarse, c) += w * fine.at(cell, c);
                }
        }
    return out;
}

std::vector<std::string> component_names(const ProblemSpec& spec) {
    if (spec.system == SystemKind::Wave) return {"phi", "u", "v"};
    return {"rho", "mx", "my", "E"};
}

namespace {

void write_convergence_csv(const ConvergenceConfig& config, const ConvergenceResult& result,
                           const std::vector<std::string>& names) {
    if (config.csv_path.empty()) return;
    std::ofstream out(config.csv_path);
    if (!out) throw IoError("cannot open " + config.csv_path);
    out << "# " << version_string << "\n";
    if (!config.provenance.empty()) out << "# " << config.provenance << "\n";
    out << "nx";
    for (const auto& n : names) out << ',' << n << "_l1," << n << "_eoc";
    out << ",seconds,steps\n";
    char buf[64];
    for (const auto& row : result.rows) {
        out << row.nx;
        for (size_t c = 0; c < names.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", row.l1[c]);
            out << ',' << buf;
            if (row.has_order && std::isfinite(row.order[c])) {
                std::snprintf(buf, sizeof buf, "%.6g", row.order[c]);
                out << ',' << buf;
            } else {
                out << ",";
            }
        }
        std::snprintf(buf, sizeof buf, "%.3f", row.seconds);
        out << ',' << buf << ',' << row.steps << "\n";
    }
}

} // namespace

ConvergenceResult run_convergence(const ConvergenceConfig& config) {
    const ProblemSpec& spec = config.spec;
    const auto names = component_names(spec);
    ConvergenceResult result;
    result.used_exact = spec.has_exact;

    std::optional<RunResult> reference;
    if (!spec.has_exact) {
        for (int nx : config.grids)
            if (config.ref_nx % nx != 0)
                throw ConfigError("run_convergence: reference grid " + std::to_string(config.ref_nx) +
                                  " is not nested with nx=" + std::to_string(nx));
        result.ref_nx = config.ref_nx;
        reference = run_single(spec, config.ref_nx, config.cfl, config.t_final, config.mode);
    }

    try {
        for (size_t k = 0; k < config.grids.size(); ++k) {
            const int nx = config.grids[k];
            const auto start = std::chrono::steady_clock::now();
            RunResult run = run_single(spec, nx, config.cfl, config.t_final, config.mode);
            const auto stop = std::chrono::steady_clock::now();

            ErrorReport row;
            row.nx = nx;
            row.seconds = std::chrono::duration<double>(stop - start).count();
            row.steps = run.stats.steps;
            if (spec.has_exact) {
                const CellField ref = exact_solution(spec, run.grid, config.t_final);
                row.l1 = l1_error(run.field, ref, run.grid);
            } else {
                const Grid coarse = run.grid;
                const CellField ref = restrict_field(reference->field, reference->grid, coarse);
                row.l1 = l1_error(run.field, ref, coarse);
            }
            if (k > 0) {
                row.has_order = true;
                for (size_t c = 0; c < names.size(); ++c)
                    row.order[c] = eoc(result.rows.back().l1[c], row.l1[c]);
            }
            result.rows.push_back(row);
        }
    } catch (...) {
        write_convergence_csv(config, result, names); // keep partial results
        throw;
    }
    write_convergence_csv(config, result, names);
    return result;
}

std::string format_convergence_table(const ConvergenceResult& result,
                                     const std::vector<std::string>& comp_names) {
    std::ostringstream os;
    os << "  nx";
    for (const auto& n : comp_names) os << "  " << n << "(L1)      EOC   ";
    os << "  seconds\n";
    char buf[64];
    for (const auto& row : result.rows) {
        std::snprintf(buf, sizeof buf, "%4d", row.nx);
        os << buf;
        for (size_t c = 0; c < comp_names.size(); ++c) {
            std::snprintf(buf, sizeof buf, "  %10.4e", row.l1[c]);
            os << buf;
            if (row.has_order && std::isfinite(row.order[c]))
                std::snprintf(buf, sizeof buf, " %6.4f ", row.order[c]);
            else
                std::snprintf(buf, sizeof buf, "   --   ");
            os << buf;
        }
        std::snprintf(buf, sizeof buf, "  %7.2f", row.seconds);
        os << buf << "\n";
    }
    return os.str();
}

} // namespace fveg
