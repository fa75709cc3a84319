#include "fveg/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fveg/entropy.hpp"

namespace fveg {

const char* flux_mode_name(FluxMode mode) {
    switch (mode) {
        case FluxMode::EgSimpson: return "eg-simpson";
        case FluxMode::EntropyStable: return "entropy-stable";
        case FluxMode::EgWithFallback: return "eg-with-fallback";
    }
    return "?";
}

FluxMode flux_mode_from_name(const std::string& name) {
    if (name == "eg-simpson") return FluxMode::EgSimpson;
    if (name == "entropy-stable") return FluxMode::EntropyStable;
    if (name == "eg-with-fallback") return FluxMode::EgWithFallback;
    throw ConfigError("unknown flux mode '" + name +
                      "' (expected eg-simpson | entropy-stable | eg-with-fallback)");
}

namespace {

constexpr double prediction_floor = 1e-12;

inline StateVec swap12(StateVec f) {
    std::swap(f[1], f[2]);
    return f;
}

inline WaveState wave_at(const CellField& f, int cell) {
    return {f.at(cell, 0), f.at(cell, 1), f.at(cell, 2)};
}

inline WaveState wave_swap(const WaveState& s) { return {s.phi, s.v, s.u}; }

inline EulerPrim prim_swap(const EulerPrim& w) { return {w.rho, w.v, w.u, w.p}; }

inline EulerCons cons_at(const CellField& f, int cell) {
    return {f.at(cell, 0), f.at(cell, 1), f.at(cell, 2), f.at(cell, 3)};
}

inline EulerCons cons_swap(const EulerCons& U) { return {U.rho, U.my, U.mx, U.E}; }

inline StateVec vec_from_cons(const EulerCons& U) { return {U.rho, U.mx, U.my, U.E}; }

inline EulerCons cons_from_vec(const StateVec& v) { return {v[0], v[1], v[2], v[3]}; }

inline StateVec simpson(const StateVec& fA, const StateVec& fS, const StateVec& fB, int n) {
    StateVec out{};
    for (int c = 0; c < n; ++c) out[c] = (fA[c] + 4.0 * fS[c] + fB[c]) / 6.0;
    return out;
}

// ---------------------------------------------------------------------------
// Entropy-stable dissipation
// ---------------------------------------------------------------------------

// c~ from the bound c1^2 c2 (1/36 + 1/16), with c1 = max_j |dr^j/dU| estimated
// by central differences of the unit eigenvectors at the mean state and
// c2 = max spectral radius of the endpoint Jacobians; 10% above the threshold.
double euler_ctilde(const EulerCons& L, const EulerCons& R, GasParams gas, double jump_norm) {
    if (jump_norm == 0.0) return 0.0;

    EulerCons mid{0.5 * (L.rho + R.rho), 0.5 * (L.mx + R.mx), 0.5 * (L.my + R.my), 0.5 * (L.E + R.E)};
    EigenDecomp base;
    try {
        base = euler_eigen_x(mid, gas);
    } catch (const StateError&) {
        return 0.0; // degenerate mean state; quadratic term dropped
    }

    double delta = 1e-4 * jump_norm;
    const StateVec mid_v = vec_from_cons(mid);
    EigenDecomp plus[4], minus[4];
    for (int k = 0; k < 4; ++k) {
        for (int attempt = 0;; ++attempt) {
            try {
                StateVec up = mid_v, um = mid_v;
                up[k] += delta;
                um[k] -= delta;
                plus[k] = euler_eigen_x(cons_from_vec(up), gas);
                minus[k] = euler_eigen_x(cons_from_vec(um), gas);
                break;
            } catch (const StateError&) {
                if (attempt >= 8) return 0.0;
                delta *= 0.5;
            }
        }
    }

    double c1 = 0.0;
    for (int j = 0; j < 4; ++j) {
        double fro2 = 0.0;
        for (int k = 0; k < 4; ++k) {
            StateVec rp = plus[k].r[j];
            StateVec rm = minus[k].r[j];
            double sp = 0.0, sm = 0.0;
            for (int m = 0; m < 4; ++m) {
                sp += rp[m] * base.r[j][m];
                sm += rm[m] * base.r[j][m];
            }
            for (int m = 0; m < 4; ++m) {
                const double dp = sp < 0.0 ? -rp[m] : rp[m];
                const double dm = sm < 0.0 ? -rm[m] : rm[m];
                const double d = (dp - dm) / (2.0 * delta);
                fro2 += d * d;
            }
        }
        c1 = std::max(c1, std::sqrt(fro2));
    }

    const double c2 = std::max(euler_specrad_x(L, gas), euler_specrad_x(R, gas));
    return 1.1 * c1 * c1 * c2 * (1.0 / 36.0 + 1.0 / 16.0);
}

} // namespace

DissipationInfo wave_es_dissipation(const StateVec& L, const StateVec& R, WaveParams params) {
    DissipationInfo info;
    info.ed = wave_eigen_x(params);
    StateVec jump{};
    for (int c = 0; c < 3; ++c) jump[c] = R[c] - L[c];
    info.alpha = info.ed.strengths(jump);
    // Linear system: eigenvectors are constant and the eigenvalues carry no
    // jump, so q~ reduces to |lambda|.
    for (int j = 0; j < 3; ++j) info.qtilde[j] = std::abs(info.ed.lambda[j]);
    return info;
}

DissipationInfo euler_es_dissipation(const EulerCons& L, const EulerCons& R, GasParams gas) {
    DissipationInfo info;
    info.ed = euler_roe_eigen_x(L, R, gas);
    const StateVec jump = {R.rho - L.rho, R.mx - L.mx, R.my - L.my, R.E - L.E};
    info.alpha = info.ed.strengths(jump);

    double jump_norm = 0.0;
    for (int c = 0; c < 4; ++c) jump_norm += jump[c] * jump[c];
    jump_norm = std::sqrt(jump_norm);
    info.ctilde = euler_ctilde(L, R, gas, jump_norm);

    // Eigenvalue increments between consecutive intermediate path states
    // U^{j+1} = U^j + alpha_j r_j; fall back to the (L,R) endpoint increment
    // if an intermediate state leaves the admissible set.
    std::array<EulerCons, 5> path;
    path[0] = L;
    bool path_ok = true;
    for (int j = 0; j < 4; ++j) {
        StateVec next = vec_from_cons(path[j]);
        for (int c = 0; c < 4; ++c) next[c] += info.alpha[j] * info.ed.r[j][c];
        path[j + 1] = cons_from_vec(next);
        const EulerCons& s = path[j + 1];
        if (!(s.rho > 0.0) || !(s.E - 0.5 * (s.mx * s.mx + s.my * s.my) / s.rho > 0.0)) {
            path_ok = false;
            break;
        }
    }
    if (path_ok) {
        std::array<std::array<double, max_comp>, 5> lam;
        for (int k = 0; k < 5; ++k) lam[k] = euler_eigenvalues_x(path[k], gas);
        for (int j = 0; j < 4; ++j) info.lambda_jump_pos[j] = std::max(lam[j + 1][j] - lam[j][j], 0.0);
    } else {
        const auto lamL = euler_eigenvalues_x(L, gas);
        const auto lamR = euler_eigenvalues_x(R, gas);
        for (int j = 0; j < 4; ++j) info.lambda_jump_pos[j] = std::max(lamR[j] - lamL[j], 0.0);
    }

    for (int j = 0; j < 4; ++j)
        info.qtilde[j] = std::abs(info.ed.lambda[j]) + 0.25 * info.lambda_jump_pos[j] +
                         info.ctilde * info.alpha[j] * info.alpha[j];
    return info;
}

StateVec wave_es_flux_x(const StateVec& L, const StateVec& R, WaveParams params) {
    const DissipationInfo info = wave_es_dissipation(L, R, params);
    const WaveState wL{L[0], L[1], L[2]};
    const WaveState wR{R[0], R[1], R[2]};
    StateVec fL{}, fR{}, out{};
    wave_flux_x(wL, params.c, fL.data());
    wave_flux_x(wR, params.c, fR.data());
    for (int c = 0; c < 3; ++c) {
        double diss = 0.0;
        for (int j = 0; j < 3; ++j) diss += info.qtilde[j] * info.alpha[j] * info.ed.r[j][c];
        out[c] = 0.5 * (fL[c] + fR[c]) - 0.5 * diss;
    }
    return out;
}

StateVec euler_es_flux_x(const EulerCons& L, const EulerCons& R, GasParams gas) {
    const DissipationInfo info = euler_es_dissipation(L, R, gas);
    StateVec fL{}, fR{}, out{};
    euler_flux_x(cons_to_prim(L, gas), gas, fL.data());
    euler_flux_x(cons_to_prim(R, gas), gas, fR.data());
    for (int c = 0; c < 4; ++c) {
        double diss = 0.0;
        for (int j = 0; j < 4; ++j) diss += info.qtilde[j] * info.alpha[j] * info.ed.r[j][c];
        out[c] = 0.5 * (fL[c] + fR[c]) - 0.5 * diss;
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// EG Simpson edge fluxes
// ---------------------------------------------------------------------------

StateVec wave_eg_flux_core(const WaveState& L, const WaveState& R,
                           const WaveState& UL, const WaveState& UR,
                           const WaveState& BL, const WaveState& BR, double c) {
    const WaveState tA = wave_evolve_A(L, R, UL, UR);
    const WaveState tS = wave_evolve_S(L, R);
    const WaveState tB = wave_evolve_B(L, R, BL, BR);
    StateVec fA{}, fS{}, fB{};
    wave_flux_x(tA, c, fA.data());
    wave_flux_x(tS, c, fS.data());
    wave_flux_x(tB, c, fB.data());
    return simpson(fA, fS, fB, 3);
}

enum class EgStatus { Ok, Supersonic, Inadmissible };

struct EulerEgResult {
    EgStatus status = EgStatus::Ok;
    bool floored = false;
    StateVec flux{};
};

EulerEgResult euler_eg_flux_core(const EulerPrim& L, const EulerPrim& R,
                                 const EulerPrim& UL, const EulerPrim& UR,
                                 const EulerPrim& BL, const EulerPrim& BR,
                                 GasParams gas, bool floor_inadmissible) {
    EulerEgResult res;
    const EulerPrim mid_cells[2] = {L, R};
    const EulerPrim up_cells[4] = {L, R, UL, UR};
    const EulerPrim down_cells[4] = {L, R, BL, BR};
    const LinState lin_S = lin_average({mid_cells, 2}, gas);
    const LinState lin_A = lin_average({up_cells, 4}, gas);
    const LinState lin_B = lin_average({down_cells, 4}, gas);
    if (!lin_S.subsonic() || !lin_A.subsonic() || !lin_B.subsonic()) {
        res.status = EgStatus::Supersonic;
        return res;
    }

    EulerPrim tS = euler_evolve_S(L, R, lin_S);
    EulerPrim tA = euler_evolve_corner(L, R, UL, UR, lin_A, true);
    EulerPrim tB = euler_evolve_corner(L, R, BL, BR, lin_B, false);
    for (EulerPrim* t : {&tS, &tA, &tB}) {
        if (!prim_admissible(*t)) {
            if (!floor_inadmissible || !std::isfinite(t->rho) || !std::isfinite(t->p)) {
                res.status = EgStatus::Inadmissible;
                return res;
            }
            t->rho = std::max(t->rho, prediction_floor);
            t->p = std::max(t->p, prediction_floor);
            res.floored = true;
        }
    }

    StateVec fA{}, fS{}, fB{};
    euler_flux_x(tA, gas, fA.data());
    euler_flux_x(tS, gas, fS.data());
    euler_flux_x(tB, gas, fB.data());
    res.flux = simpson(fA, fS, fB, 4);
    return res;
}

// Stencil cells of a vertical edge (i,j): L,R plus the rows above and below.
struct Stencil {
    int L, R, UL, UR, BL, BR;
};

Stencil vertical_stencil(const Grid& g, int i, int j) {
    return {g.cell_index(i, j),     g.cell_index(i + 1, j),
            g.cell_index(i, j + 1), g.cell_index(i + 1, j + 1),
            g.cell_index(i, j - 1), g.cell_index(i + 1, j - 1)};
}

// Horizontal edge (i,j) mapped onto the vertical formulas by swapping the
// coordinates: bottom->L, top->R, east neighbours->upper corners.
Stencil horizontal_stencil(const Grid& g, int i, int j) {
    return {g.cell_index(i, j),     g.cell_index(i, j + 1),
            g.cell_index(i + 1, j), g.cell_index(i + 1, j + 1),
            g.cell_index(i - 1, j), g.cell_index(i - 1, j + 1)};
}

} // namespace

StateVec wave_eg_edge_flux(const Grid& grid, const CellField& field, const Edge& edge, WaveParams params) {
    if (edge.orientation == EdgeOrientation::Vertical) {
        const Stencil s = vertical_stencil(grid, edge.i, edge.j);
        return wave_eg_flux_core(wave_at(field, s.L), wave_at(field, s.R),
                                 wave_at(field, s.UL), wave_at(field, s.UR),
                                 wave_at(field, s.BL), wave_at(field, s.BR), params.c);
    }
    const Stencil s = horizontal_stencil(grid, edge.i, edge.j);
    const StateVec f = wave_eg_flux_core(wave_swap(wave_at(field, s.L)), wave_swap(wave_at(field, s.R)),
                                         wave_swap(wave_at(field, s.UL)), wave_swap(wave_at(field, s.UR)),
                                         wave_swap(wave_at(field, s.BL)), wave_swap(wave_at(field, s.BR)),
                                         params.c);
    return swap12(f);
}

StateVec euler_eg_edge_flux(const Grid& grid, const CellField& field, const Edge& edge, GasParams gas) {
    const bool vertical = edge.orientation == EdgeOrientation::Vertical;
    const Stencil s = vertical ? vertical_stencil(grid, edge.i, edge.j)
                               : horizontal_stencil(grid, edge.i, edge.j);
    auto prim = [&](int cell) {
        const EulerPrim w = cons_to_prim(cons_at(field, cell), gas);
        return vertical ? w : prim_swap(w);
    };
    const EulerEgResult res = euler_eg_flux_core(prim(s.L), prim(s.R), prim(s.UL), prim(s.UR),
                                                 prim(s.BL), prim(s.BR), gas, false);
    if (res.status == EgStatus::Supersonic)
        throw SupersonicError("eg flux: supersonic local linearization at edge " + std::to_string(edge.id));
    if (res.status == EgStatus::Inadmissible)
        throw PredictionError("eg flux: inadmissible predicted state at edge " + std::to_string(edge.id),
                              edge.id);
    return vertical ? res.flux : swap12(res.flux);
}

double compute_dt_wave(const Grid& grid, WaveParams params, double cfl) {
    if (!(cfl > 0.0) || !(cfl < 1.0)) throw ConfigError("compute_dt: cfl must lie in (0,1)");
    if (!(params.c > 0.0) || !std::isfinite(params.c)) throw StateError("compute_dt: invalid wave speed");
    return cfl * grid.h() / params.c;
}

double compute_dt_euler(const Grid& grid, const CellField& field, GasParams gas, double cfl) {
    if (!(cfl > 0.0) || !(cfl < 1.0)) throw ConfigError("compute_dt: cfl must lie in (0,1)");
    const int nx = grid.nx(), ny = grid.ny();
    std::vector<EulerPrim> prim(grid.cell_count());
    for (int cell = 0; cell < grid.cell_count(); ++cell) prim[cell] = cons_to_prim(cons_at(field, cell), gas);

    double speed = 0.0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const EulerPrim cells_x[2] = {prim[grid.cell_index(i, j)], prim[grid.cell_index(i + 1, j)]};
            const EulerPrim cells_y[2] = {prim[grid.cell_index(i, j)], prim[grid.cell_index(i, j + 1)]};
            const LinState lx = lin_average({cells_x, 2}, gas);
            const LinState ly = lin_average({cells_y, 2}, gas);
            speed = std::max({speed, std::abs(lx.u) + lx.c, std::abs(lx.v) + lx.c,
                              std::abs(ly.u) + ly.c, std::abs(ly.v) + ly.c});
        }
    }
    if (!std::isfinite(speed) || !(speed > 0.0))
        throw StateError("compute_dt: non-finite signal speed");
    return cfl * grid.h() / speed;
}

namespace {

template <class FluxX, class FluxY>
CellField conservative_update(const Grid& grid, const CellField& field, double dt,
                              FluxX&& fx_of, FluxY&& fy_of) {
    const int nx = grid.nx(), ny = grid.ny();
    const int ncomp = field.ncomp();
    std::vector<StateVec> fx(grid.cell_count()), fy(grid.cell_count());
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            fx[grid.cell_index(i, j)] = fx_of(i, j);
            fy[grid.cell_index(i, j)] = fy_of(i, j);
        }
    }
    const double lam = dt / grid.h();
    CellField out(ncomp, grid);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int cell = grid.cell_index(i, j);
            const int left = grid.cell_index(i - 1, j);
            const int below = grid.cell_index(i, j - 1);
            for (int c = 0; c < ncomp; ++c)
                out.at(cell, c) = field.at(cell, c) -
                                  lam * (fx[cell][c] - fx[left][c] + fy[cell][c] - fy[below][c]);
        }
    }
    return out;
}

} // namespace

CellField fv_step_wave(const Grid& grid, const CellField& field, WaveParams params, double dt,
                       FluxMode mode, StepDiagnostics* diag) {
    if (field.ncomp() != 3) throw ConfigError("fv_step_wave: field must have 3 components");
    (void)diag;
    const bool es = mode == FluxMode::EntropyStable;

    auto fx_of = [&](int i, int j) {
        const Stencil s = vertical_stencil(grid, i, j);
        if (es) return wave_es_flux_x(field.state(s.L), field.state(s.R), params);
        return wave_eg_flux_core(wave_at(field, s.L), wave_at(field, s.R),
                                 wave_at(field, s.UL), wave_at(field, s.UR),
                                 wave_at(field, s.BL), wave_at(field, s.BR), params.c);
    };
    auto fy_of = [&](int i, int j) {
        const Stencil s = horizontal_stencil(grid, i, j);
        if (es) {
            StateVec sl = field.state(s.L), sr = field.state(s.R);
            return swap12(wave_es_flux_x(swap12(sl), swap12(sr), params));
        }
        return swap12(wave_eg_flux_core(wave_swap(wave_at(field, s.L)), wave_swap(wave_at(field, s.R)),
                                        wave_swap(wave_at(field, s.UL)), wave_swap(wave_at(field, s.UR)),
                                        wave_swap(wave_at(field, s.BL)), wave_swap(wave_at(field, s.BR)),
                                        params.c));
    };

    CellField out = conservative_update(grid, field, dt, fx_of, fy_of);
    if (!out.all_finite()) throw StepError("fv_step_wave: non-finite state after update");
    return out;
}

CellField fv_step_euler(const Grid& grid, const CellField& field, GasParams gas, double dt,
                        FluxMode mode, StepDiagnostics* diag) {
    if (field.ncomp() != 4) throw ConfigError("fv_step_euler: field must have 4 components");
    const int nx = grid.nx(), ny = grid.ny();

    std::vector<EulerPrim> prim(grid.cell_count());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int cell = grid.cell_index(i, j);
            try {
                prim[cell] = cons_to_prim(cons_at(field, cell), gas);
            } catch (const StateError& e) {
                throw StateError(std::string(e.what()) + " in cell (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            }
        }

    auto es_flux = [&](int a, int b, bool vertical) {
        const EulerCons Ua = cons_at(field, a), Ub = cons_at(field, b);
        if (vertical) return euler_es_flux_x(Ua, Ub, gas);
        return swap12(euler_es_flux_x(cons_swap(Ua), cons_swap(Ub), gas));
    };

    auto eg_or_fallback = [&](const Stencil& s, bool vertical, long edge_id) -> StateVec {
        if (mode == FluxMode::EntropyStable) return es_flux(s.L, s.R, vertical);
        auto pick = [&](int cell) { return vertical ? prim[cell] : prim_swap(prim[cell]); };
        const bool floor = mode == FluxMode::EgSimpson;
        const EulerEgResult res = euler_eg_flux_core(pick(s.L), pick(s.R), pick(s.UL), pick(s.UR),
                                                     pick(s.BL), pick(s.BR), gas, floor);
        if (res.status == EgStatus::Ok) {
            if (diag && res.floored) ++diag->floored_predictions;
            return vertical ? res.flux : swap12(res.flux);
        }
        if (diag) {
            ++diag->fallback_edges;
            if (res.status == EgStatus::Supersonic) ++diag->supersonic_edges;
            else ++diag->prediction_failures;
        }
        if (mode == FluxMode::EgSimpson) // only supersonic reaches here with flooring on
            throw SupersonicError("fv_step: supersonic local linearization at edge " +
                                  std::to_string(edge_id) + " (no fallback in eg-simpson mode)");
        return es_flux(s.L, s.R, vertical);
    };

    auto fx_of = [&](int i, int j) {
        return eg_or_fallback(vertical_stencil(grid, i, j), true, grid.vertical_edge(i, j).id);
    };
    auto fy_of = [&](int i, int j) {
        return eg_or_fallback(horizontal_stencil(grid, i, j), false, grid.horizontal_edge(i, j).id);
    };

    CellField out = conservative_update(grid, field, dt, fx_of, fy_of);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int cell = grid.cell_index(i, j);
            const EulerCons U = cons_at(out, cell);
            const double eint = U.E - 0.5 * (U.mx * U.mx + U.my * U.my) / U.rho;
            if (!std::isfinite(U.rho) || !std::isfinite(U.E) || !(U.rho > 0.0) || !(eint > 0.0))
                throw StepError("fv_step_euler: inadmissible state in cell (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
        }
    return out;
}

namespace {

template <class StepFn, class EntropyFn>
AdvanceStats advance_impl(CellField& field, double t0, double t_final,
                          const AdvanceOptions& opt, StepFn&& step, EntropyFn&& total_S,
                          const std::function<double()>& dt_of) {
    AdvanceStats st;
    st.min_scaled_entropy_production = std::numeric_limits<double>::infinity();
    double t = t0;
    double s_prev = opt.track_entropy ? total_S(field) : 0.0;
    const double t_eps = 1e-14 * std::max(1.0, std::abs(t_final));
    constexpr long max_steps = 50'000'000;

    while (t_final - t > t_eps) {
        double dt = dt_of();
        if (dt >= t_final - t) dt = t_final - t;
        int tries = 0;
        for (;;) {
            try {
                CellField next = step(field, dt);
                field = std::move(next);
                break;
            } catch (const StepError&) {
                if (++tries > 5) throw;
                dt *= 0.5;
                ++st.retries;
            }
        }
        t += dt;
        ++st.steps;
        if (st.steps > max_steps) throw Error("advance: step limit exceeded");
        if (opt.track_entropy) {
            const double s_now = total_S(field);
            const double scaled = (s_now - s_prev) / std::max(1.0, std::abs(s_prev));
            st.min_scaled_entropy_production = std::min(st.min_scaled_entropy_production, scaled);
            s_prev = s_now;
        }
        if (opt.on_step) opt.on_step(st.steps, t, dt, field);
    }
    if (!opt.track_entropy) st.min_scaled_entropy_production = 0.0;
    st.final_time = t;
    return st;
}

} // namespace

AdvanceStats advance_wave(const Grid& grid, CellField& field, WaveParams params,
                          double t0, double t_final, const AdvanceOptions& opt) {
    StepDiagnostics diag;
    auto step = [&](const CellField& f, double dt) {
        return fv_step_wave(grid, f, params, dt, opt.mode, &diag);
    };
    auto entropy = [&](const CellField& f) { return total_entropy_wave(f, grid); };
    auto dt_of = [&]() { return compute_dt_wave(grid, params, opt.cfl); };
    AdvanceStats st = advance_impl(field, t0, t_final, opt, step, entropy, dt_of);
    st.diag = diag;
    return st;
}

AdvanceStats advance_euler(const Grid& grid, CellField& field, GasParams gas,
                           double t0, double t_final, const AdvanceOptions& opt) {
    StepDiagnostics diag;
    auto step = [&](const CellField& f, double dt) {
        return fv_step_euler(grid, f, gas, dt, opt.mode, &diag);
    };
    auto entropy = [&](const CellField& f) { return total_entropy_euler(f, grid, gas); };
    auto dt_of = [&]() { return compute_dt_euler(grid, field, gas, opt.cfl); };
    AdvanceStats st = advance_impl(field, t0, t_final, opt, step, entropy, dt_of);
    st.diag = diag;
    return st;
}

} // namespace fveg
