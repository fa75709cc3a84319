#pragma once

#include <array>
#include <cmath>

#include "fveg/euler.hpp"
#include "fveg/grid.hpp"
#include "fveg/wave.hpp"

namespace fveg {

// Eigenstructure of a (possibly Roe-averaged) x-direction Jacobian, waves in
// increasing-eigenvalue order. Right eigenvectors are unit vectors, left ones
// the dual system: <l_j, r_k> = delta_jk.
struct EigenDecomp {
    int n = 0;
    std::array<double, max_comp> lambda{};
    std::array<StateVec, max_comp> r{};
    std::array<StateVec, max_comp> l{};

    std::array<double, max_comp> strengths(const StateVec& jump) const {
        std::array<double, max_comp> a{};
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += l[j][k] * jump[k];
            a[j] = s;
        }
        return a;
    }
};

// Wave system, x-direction: constant Jacobian c [[0,1,0],[1,0,0],[0,0,0]].
// The acoustic eigenvectors are orthonormal, so l = r.
inline EigenDecomp wave_eigen_x(WaveParams params) {
    const double s = 1.0 / std::sqrt(2.0);
    EigenDecomp ed;
    ed.n = 3;
    ed.lambda = {-params.c, 0.0, params.c, 0.0};
    ed.r[0] = {s, -s, 0.0, 0.0};
    ed.r[1] = {0.0, 0.0, 1.0, 0.0};
    ed.r[2] = {s, s, 0.0, 0.0};
    ed.l = ed.r;
    return ed;
}

namespace detail {

// Eigensystem of the Euler x-Jacobian built from an averaged primitive-like
// state (u, v, H). Throws StateError if the implied sound speed is imaginary.
EigenDecomp euler_eigen_from_uvH(double u, double v, double H, GasParams gas);

} // namespace detail

// Eigensystem of A(U) at a single admissible state.
EigenDecomp euler_eigen_x(const EulerCons& U, GasParams gas);

// Roe-average eigensystem of the pair (U_L, U_R).
EigenDecomp euler_roe_eigen_x(const EulerCons& L, const EulerCons& R, GasParams gas);

// Eigenvalues only (cheap), increasing order.
std::array<double, max_comp> euler_eigenvalues_x(const EulerCons& U, GasParams gas);

// Spectral radius of the x-Jacobian.
double euler_specrad_x(const EulerCons& U, GasParams gas);

} // namespace fveg
