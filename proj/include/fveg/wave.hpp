#pragma once

#include <cmath>
#include <numbers>

#include "fveg/errors.hpp"

namespace fveg {

// State of the linear wave equation system: wave pressure and velocity.
struct WaveState {
    double phi = 0.0;
    double u = 0.0;
    double v = 0.0;
};

struct WaveParams {
    double c = 1.0; // wave speed, > 0
};

// Predicted point values at the two corners and the midpoint of an interface.
template <class State>
struct EdgeTrace {
    State at_A; // corner in the +tangent direction
    State at_S; // barycenter
    State at_B; // corner in the -tangent direction
};

// Second-order approximate evolution operator (EG2) for the wave system,
// stated for a vertical edge sigma = L|R with normal +x. The closed forms
// are independent of c and dt: only the arc membership of the sonic circle
// matters for piecewise-constant data under the CFL condition. The value at
// the foot point P' (which sits on the interface) is the arithmetic average
// of the adjacent cells.

inline WaveState wave_evolve_S(const WaveState& L, const WaveState& R) {
    constexpr double two_over_pi = 2.0 / std::numbers::pi;
    WaveState s;
    s.phi = 0.5 * (L.phi + R.phi) - two_over_pi * (R.u - L.u);
    s.u = -two_over_pi * (R.phi - L.phi) + 0.5 * (L.u + R.u);
    s.v = 0.5 * (L.v + R.v);
    return s;
}

// Upper corner: the four cells around it are L, R below and UL, UR above.
inline WaveState wave_evolve_A(const WaveState& L, const WaveState& R,
                               const WaveState& UL, const WaveState& UR) {
    constexpr double inv_pi = 1.0 / std::numbers::pi;
    WaveState a;
    a.phi = 0.25 * (L.phi + R.phi + UL.phi + UR.phi)
          - inv_pi * (R.u + UR.u - UL.u - L.u)
          + inv_pi * (R.v - UR.v - UL.v + L.v);
    a.u = -inv_pi * (R.phi + UR.phi - UL.phi - L.phi)
        + 0.25 * (L.u + R.u + UL.u + UR.u)
        + inv_pi * (-R.v + UR.v - UL.v + L.v);
    a.v = inv_pi * (R.phi - UR.phi - UL.phi + L.phi)
        + inv_pi * (-R.u + UR.u - UL.u + L.u)
        + 0.25 * (L.v + R.v + UL.v + UR.v);
    return a;
}

// Lower corner, by mirror symmetry across the edge midline: reflect y (negate v),
// apply the upper-corner operator with BL, BR playing UL, UR, reflect back.
inline WaveState wave_evolve_B(const WaveState& L, const WaveState& R,
                               const WaveState& BL, const WaveState& BR) {
    auto flip = [](WaveState s) { s.v = -s.v; return s; };
    WaveState b = wave_evolve_A(flip(L), flip(R), flip(BL), flip(BR));
    b.v = -b.v;
    return b;
}

// Physical flux in the +x direction: F(U) = c (u, phi, 0).
inline void wave_flux_x(const WaveState& s, double c, double* out) {
    out[0] = c * s.u;
    out[1] = c * s.phi;
    out[2] = 0.0;
}

// Entropy S = -1/2 |U|^2 (sign convention: nondecreasing for entropy-stable fluxes).
inline double wave_entropy(const WaveState& s) {
    return -0.5 * (s.phi * s.phi + s.u * s.u + s.v * s.v);
}

} // namespace fveg
