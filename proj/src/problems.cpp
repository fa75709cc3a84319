#include "fveg/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadrature.hpp"

namespace fveg {

namespace {

constexpr double pi = std::numbers::pi;

// --- traveling vortex ------------------------------------------------------

constexpr double vortex_R = 0.4;
constexpr double vortex_rho_c = 0.5;
constexpr double vortex_u_c = 1.0;
constexpr double vortex_v_c = 1.0;
constexpr double vortex_p_c = 0.1;

double vortex_u_theta(double r) {
    const double a = 1.0 - r;
    return 1024.0 * a * a * a * a * a * a * r * r * r * r * r * r;
}

double vortex_rho(double r) {
    if (r >= 1.0) return vortex_rho_c;
    const double b = 1.0 - r * r;
    return vortex_rho_c + 0.5 * b * b * b * b * b * b;
}

// Integral of the centrifugal balance from 0 to r (smooth polynomial integrand).
double vortex_pressure_raw(double r) {
    auto integrand = [](double s) {
        const double ut = vortex_u_theta(s);
        return s == 0.0 ? 0.0 : vortex_rho(s) * ut * ut / s;
    };
    return detail::integrate_adaptive(integrand, 0.0, r, 1e-12);
}

double vortex_pressure_offset() {
    static const double p1 = vortex_pressure_raw(1.0);
    return p1;
}

EulerPrim vortex_prim(double x, double y, GasParams /*gas*/) {
    const double dx = x - 0.5, dy = y - 0.5;
    const double dist = std::sqrt(dx * dx + dy * dy);
    const double r = dist / vortex_R;
    EulerPrim w;
    if (r >= 1.0) {
        w = {vortex_rho_c, vortex_u_c, vortex_v_c, vortex_p_c};
        return w;
    }
    w.rho = vortex_rho(r);
    const double ut = vortex_u_theta(r);
    if (dist > 0.0) {
        const double sin_t = dy / dist;
        const double cos_t = dx / dist;
        w.u = vortex_u_c - ut * sin_t;
        w.v = vortex_v_c + ut * cos_t;
    } else {
        w.u = vortex_u_c;
        w.v = vortex_v_c;
    }
    w.p = vortex_pressure(r);
    return w;
}

// --- Gresho vortex ---------------------------------------------------------

EulerPrim gresho_prim(double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    EulerPrim w;
    w.rho = 1.0;
    double ut_over_r; // u_theta / r, finite at the origin
    double p;
    if (r <= 0.2) {
        ut_over_r = 5.0;
        p = 5.0 + 12.5 * r * r;
    } else if (r <= 0.4) {
        ut_over_r = 2.0 / r - 5.0;
        p = 9.0 - 4.0 * std::log(0.2) + 12.5 * r * r - 20.0 * r + 4.0 * std::log(r);
    } else {
        ut_over_r = 0.0;
        p = 3.0 + 4.0 * std::log(2.0);
    }
    w.u = -ut_over_r * y;
    w.v = ut_over_r * x;
    w.p = p;
    return w;
}

// --- helpers ----------------------------------------------------------------

void cons_out(const EulerPrim& w, GasParams gas, double* out) {
    const EulerCons U = prim_to_cons(w, gas);
    out[0] = U.rho;
    out[1] = U.mx;
    out[2] = U.my;
    out[3] = U.E;
}

StateVec quadrant_cons(double rho, double u, double v, double p, GasParams gas) {
    const EulerCons U = prim_to_cons({rho, u, v, p}, gas);
    return {U.rho, U.mx, U.my, U.E};
}

} // namespace

double vortex_pressure(double r) {
    if (r >= 1.0) return vortex_p_c;
    return vortex_p_c + (vortex_pressure_raw(r) - vortex_pressure_offset());
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {"wave-sine", "gresho", "traveling-vortex",
                                                   "riemann-4shock", "riemann-spiral"};
    return names;
}

ProblemSpec make_problem(const std::string& name) {
    ProblemSpec spec;
    spec.name = name;
    if (name == "wave-sine") {
        spec.system = SystemKind::Wave;
        spec.domain = {-1.0, 1.0, -1.0, 1.0};
        spec.wave = {1.0};
        spec.t_final_default = 0.1;
        spec.cfl_default = 0.267;
        spec.default_mode = FluxMode::EgSimpson;
        spec.has_exact = true;
        const double c = spec.wave.c;
        spec.state_fn = [c](double x, double y, double t, double* out) {
            out[0] = -(1.0 / c) * std::cos(2.0 * pi * c * t) * (std::sin(2.0 * pi * x) + std::sin(2.0 * pi * y));
            out[1] = (1.0 / c) * std::sin(2.0 * pi * c * t) * std::cos(2.0 * pi * x);
            out[2] = (1.0 / c) * std::sin(2.0 * pi * c * t) * std::cos(2.0 * pi * y);
        };
        return spec;
    }
    if (name == "gresho") {
        spec.system = SystemKind::Euler;
        spec.domain = {-0.75, 0.75, -0.75, 0.75};
        spec.gas = {1.4};
        spec.t_final_default = 1.0;
        spec.cfl_default = 0.45;
        const GasParams gas = spec.gas;
        spec.state_fn = [gas](double x, double y, double /*t*/, double* out) {
            cons_out(gresho_prim(x, y), gas, out);
        };
        return spec;
    }
    if (name == "traveling-vortex") {
        spec.system = SystemKind::Euler;
        spec.domain = {0.0, 1.0, 0.0, 1.0};
        spec.gas = {1.4};
        spec.t_final_default = 1.0;
        spec.cfl_default = 0.45;
        spec.has_exact = true;
        spec.exact_integer_times_only = true; // drift speed (1,1) on the unit torus
        const GasParams gas = spec.gas;
        spec.state_fn = [gas](double x, double y, double /*t*/, double* out) {
            cons_out(vortex_prim(x, y, gas), gas, out);
        };
        return spec;
    }
    if (name == "riemann-4shock") {
        spec.system = SystemKind::Euler;
        spec.domain = {0.0, 1.0, 0.0, 1.0};
        spec.gas = {1.4};
        spec.t_final_default = 0.15;
        spec.cfl_default = 0.45;
        spec.quadrant_data = true;
        spec.quadrant_states = {quadrant_cons(0.5313, 0.0, 0.0, 0.4, spec.gas),   // NE
                                quadrant_cons(1.0, 0.7276, 0.0, 1.0, spec.gas),   // NW
                                quadrant_cons(0.8, 0.0, 0.0, 1.0, spec.gas),      // SW
                                quadrant_cons(1.0, 0.0, 0.7276, 1.0, spec.gas)};  // SE
        return spec;
    }
    if (name == "riemann-spiral") {
        spec.system = SystemKind::Euler;
        spec.domain = {0.0, 1.0, 0.0, 1.0};
        spec.gas = {1.4};
        spec.t_final_default = 0.2;
        spec.cfl_default = 0.45;
        spec.quadrant_data = true;
        spec.quadrant_states = {quadrant_cons(0.5, 0.5, -0.5, 5.0, spec.gas),     // NE
                                quadrant_cons(1.0, 0.5, 0.5, 5.0, spec.gas),      // NW
                                quadrant_cons(2.0, -0.5, 0.5, 5.0, spec.gas),     // SW
                                quadrant_cons(1.5, -0.5, -0.5, 5.0, spec.gas)};   // SE
        return spec;
    }
    std::string all;
    for (const auto& n : problem_names()) all += (all.empty() ? "" : ", ") + n;
    throw ConfigError("unknown problem '" + name + "' (valid: " + all + ")");
}

namespace {

CellField project_quadrants(const ProblemSpec& spec, const Grid& grid) {
    CellField out(spec.ncomp(), grid);
    const double h = grid.h();
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            const double x0 = grid.domain().x0 + i * h;
            const double y0 = grid.domain().y0 + j * h;
            // Fraction of the cell east of split_x / north of split_y.
            const double fe = std::clamp((x0 + h - spec.split_x) / h, 0.0, 1.0);
            const double fn = std::clamp((y0 + h - spec.split_y) / h, 0.0, 1.0);
            const double w[4] = {fe * fn, (1.0 - fe) * fn, (1.0 - fe) * (1.0 - fn), fe * (1.0 - fn)};
            const int cell = grid.cell_index(i, j);
            for (int c = 0; c < spec.ncomp(); ++c) {
                double acc = 0.0;
                for (int q = 0; q < 4; ++q) acc += w[q] * spec.quadrant_states[q][c];
                out.at(cell, c) = acc;
            }
        }
    }
    return out;
}

} // namespace

CellField initial_field(const ProblemSpec& spec, const Grid& grid) {
    if (spec.quadrant_data) return project_quadrants(spec, grid);
    return project(grid, spec.ncomp(), [&](double x, double y, double* out) {
        spec.state_fn(x, y, 0.0, out);
    });
}

CellField exact_solution(const ProblemSpec& spec, const Grid& grid, double t) {
    if (!spec.has_exact)
        throw CapabilityError("problem '" + spec.name + "' has no exact solution");
    if (spec.exact_integer_times_only) {
        if (std::abs(t - std::round(t)) > 1e-9)
            throw CapabilityError("problem '" + spec.name + "' has an exact solution only at integer times");
        t = 0.0; // periodic return to the initial state
    }
    return project(grid, spec.ncomp(), [&](double x, double y, double* out) {
        spec.state_fn(x, y, t, out);
    });
}

} // namespace fveg
