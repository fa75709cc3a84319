#pragma once

#include <functional>

#include "fveg/eigen.hpp"
#include "fveg/euler.hpp"
#include "fveg/grid.hpp"
#include "fveg/wave.hpp"

namespace fveg {

enum class FluxMode {
    EgSimpson,     // Simpson evolution-Galerkin flux everywhere
    EntropyStable, // 1D entropy-stable flux everywhere, direction by direction
    EgWithFallback // EG flux, entropy-stable on edges where prediction fails
};

const char* flux_mode_name(FluxMode mode);
FluxMode flux_mode_from_name(const std::string& name); // throws ConfigError

struct StepDiagnostics {
    long fallback_edges = 0;      // edges routed to the entropy-stable flux
    long supersonic_edges = 0;    // due to supersonic local linearization
    long prediction_failures = 0; // due to inadmissible predicted values
    long floored_predictions = 0; // EgSimpson-mode admissibility floor hits
};

// Wave-strength decomposition and stabilized viscosities q~_j at one interface,
// x-direction. q~_j = |lambda_j| + 1/4 [lambda_j]^+ + c~ |alpha_j|^2, with the
// eigenvalue increment [lambda_j] taken between consecutive intermediate path
// states (endpoint states if an intermediate is inadmissible).
struct DissipationInfo {
    EigenDecomp ed;
    std::array<double, max_comp> alpha{};
    std::array<double, max_comp> lambda_jump_pos{};
    std::array<double, max_comp> qtilde{};
    double ctilde = 0.0;
};

DissipationInfo wave_es_dissipation(const StateVec& L, const StateVec& R, WaveParams params);
DissipationInfo euler_es_dissipation(const EulerCons& L, const EulerCons& R, GasParams gas);

// One-dimensional entropy-stable flux (x-direction): <F> - 1/2 sum q~_j alpha_j r_j.
// The y-direction is obtained by conjugating with the coordinate swap.
StateVec wave_es_flux_x(const StateVec& L, const StateVec& R, WaveParams params);
StateVec euler_es_flux_x(const EulerCons& L, const EulerCons& R, GasParams gas);

// Simpson EG flux across a single edge (1/6, 4/6, 1/6 at corner/midpoint/corner
// predictions). For Euler this throws SupersonicError when a local linearization
// is supersonic and PredictionError when a predicted state is inadmissible; the
// stepping drivers apply the configured fallback policy instead of throwing.
StateVec wave_eg_edge_flux(const Grid& grid, const CellField& field, const Edge& edge, WaveParams params);
StateVec euler_eg_edge_flux(const Grid& grid, const CellField& field, const Edge& edge, GasParams gas);

// CFL-limited time step.
double compute_dt_wave(const Grid& grid, WaveParams params, double cfl);
double compute_dt_euler(const Grid& grid, const CellField& field, GasParams gas, double cfl);

// One conservative finite-volume step. Throws StepError if the updated field
// is inadmissible (caller may retry with a smaller dt).
CellField fv_step_wave(const Grid& grid, const CellField& field, WaveParams params, double dt,
                       FluxMode mode, StepDiagnostics* diag = nullptr);
CellField fv_step_euler(const Grid& grid, const CellField& field, GasParams gas, double dt,
                        FluxMode mode, StepDiagnostics* diag = nullptr);

struct AdvanceOptions {
    FluxMode mode = FluxMode::EgSimpson;
    double cfl = 0.45;
    bool track_entropy = false;
    std::function<void(long step, double t, double dt, const CellField&)> on_step;
};

struct AdvanceStats {
    long steps = 0;
    int retries = 0;
    StepDiagnostics diag;
    double final_time = 0.0;
    // min over steps of (S_total_after - S_total_before) / max(1, |S_total_before|)
    double min_scaled_entropy_production = 0.0;
};

AdvanceStats advance_wave(const Grid& grid, CellField& field, WaveParams params,
                          double t0, double t_final, const AdvanceOptions& opt);
AdvanceStats advance_euler(const Grid& grid, CellField& field, GasParams gas,
                           double t0, double t_final, const AdvanceOptions& opt);

} // namespace fveg
