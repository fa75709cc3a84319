#pragma once

#include <cmath>
#include <span>

#include "fveg/errors.hpp"

namespace fveg {

struct GasParams {
    double gamma = 1.4; // adiabatic exponent, > 1
};

// Primitive variables.
struct EulerPrim {
    double rho = 0.0;
    double u = 0.0;
    double v = 0.0;
    double p = 0.0;
};

// Conserved variables.
struct EulerCons {
    double rho = 0.0;
    double mx = 0.0;
    double my = 0.0;
    double E = 0.0;
};

inline bool prim_admissible(const EulerPrim& w) {
    return std::isfinite(w.rho) && std::isfinite(w.u) && std::isfinite(w.v) && std::isfinite(w.p) &&
           w.rho > 0.0 && w.p > 0.0;
}

EulerPrim cons_to_prim(const EulerCons& U, GasParams gas); // throws StateError
EulerCons prim_to_cons(const EulerPrim& w, GasParams gas); // throws StateError

inline double sound_speed(const EulerPrim& w, GasParams gas) {
    return std::sqrt(gas.gamma * w.p / w.rho);
}

// Entropy S = C_v rho ln(p / rho^gamma), C_v = 1/(gamma-1).
inline double euler_entropy(const EulerPrim& w, GasParams gas) {
    return w.rho * std::log(w.p / std::pow(w.rho, gas.gamma)) / (gas.gamma - 1.0);
}

// Physical flux in the +x direction, conserved components.
inline void euler_flux_x(const EulerPrim& w, GasParams gas, double* out) {
    const double E = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
    out[0] = w.rho * w.u;
    out[1] = w.rho * w.u * w.u + w.p;
    out[2] = w.rho * w.u * w.v;
    out[3] = w.u * (E + w.p);
}

// Frozen local linearization around a prediction point: arithmetic mean of the
// neighboring cell primitives plus the derived sound speed and sonic-circle
// arc angles. Angles are only meaningful when the drift is componentwise
// subsonic; they are NaN otherwise.
struct LinState {
    double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
    double c = 0.0;
    double alpha1 = 0.0; // arcsin(v/c)
    double alpha2 = 0.0; // arccos(u/c); also the midpoint-case angle alpha

    bool subsonic_x() const { return std::abs(u) <= c; }
    bool subsonic_y() const { return std::abs(v) <= c; }
    bool subsonic() const { return subsonic_x() && subsonic_y(); }

    // Mirror across a horizontal line: v and alpha1 negate, all else unchanged.
    LinState mirrored_y() const {
        LinState m = *this;
        m.v = -m.v;
        m.alpha1 = -m.alpha1;
        return m;
    }
};

// Mean without the subsonic requirement (used by the flux assembly to decide
// whether the evolution operator applies at all).
LinState lin_average(std::span<const EulerPrim> neighbors, GasParams gas);

// Spec'd operation: as lin_average but rejects supersonic drift.
LinState linearize(std::span<const EulerPrim> neighbors, GasParams gas); // throws SupersonicError

// EG2 approximate evolution operator for the locally linearized Euler
// equations, vertical-edge orientation (normal +x). Closed forms follow the
// sonic-circle arc integrals; the foot point P' = X - (u',v') dt/2 contributes
// the host cell's rho and p, upwinded by the drift sign (averaged on a tie).
EulerPrim euler_evolve_S(const EulerPrim& L, const EulerPrim& R, const LinState& lin);

// Corner operator. For upper=true the inputs are the cells (L, R, UL, UR)
// around the upper corner of the edge; for upper=false they are (L, R, BL, BR)
// around the lower corner, handled by mirror symmetry.
EulerPrim euler_evolve_corner(const EulerPrim& L, const EulerPrim& R,
                              const EulerPrim& C0, const EulerPrim& C1,
                              const LinState& lin, bool upper);

// Exact Jacobian of the x-flux at a conserved state, row-major 4x4.
void euler_jacobian_x(const EulerCons& U, GasParams gas, double A[4][4]);

} // namespace fveg
