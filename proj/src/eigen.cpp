#include "fveg/eigen.hpp"

#include <string>

namespace fveg {

namespace detail {

EigenDecomp euler_eigen_from_uvH(double u, double v, double H, GasParams gas) {
    const double q2 = u * u + v * v;
    const double c2 = (gas.gamma - 1.0) * (H - 0.5 * q2);
    if (!(c2 > 0.0))
        throw StateError("euler eigen: nonpositive averaged sound speed squared " + std::to_string(c2));
    const double c = std::sqrt(c2);
    const double b1 = (gas.gamma - 1.0) / c2;
    const double b2 = 0.5 * b1 * q2;

    EigenDecomp ed;
    ed.n = 4;
    ed.lambda = {u - c, u, u, u + c};

    // Classic unnormalized pairs; waves: acoustic-, entropy, shear, acoustic+.
    const StateVec r_raw[4] = {
        {1.0, u - c, v, H - u * c},
        {1.0, u, v, 0.5 * q2},
        {0.0, 0.0, 1.0, v},
        {1.0, u + c, v, H + u * c},
    };
    const StateVec l_raw[4] = {
        {0.5 * (b2 + u / c), 0.5 * (-b1 * u - 1.0 / c), 0.5 * (-b1 * v), 0.5 * b1},
        {1.0 - b2, b1 * u, b1 * v, -b1},
        {-v, 0.0, 1.0, 0.0},
        {0.5 * (b2 - u / c), 0.5 * (-b1 * u + 1.0 / c), 0.5 * (-b1 * v), 0.5 * b1},
    };

    for (int j = 0; j < 4; ++j) {
        double norm2 = 0.0;
        for (int k = 0; k < 4; ++k) norm2 += r_raw[j][k] * r_raw[j][k];
        const double norm = std::sqrt(norm2);
        for (int k = 0; k < 4; ++k) {
            ed.r[j][k] = r_raw[j][k] / norm;
            ed.l[j][k] = l_raw[j][k] * norm;
        }
    }
    return ed;
}

} // namespace detail

EigenDecomp euler_eigen_x(const EulerCons& U, GasParams gas) {
    const EulerPrim w = cons_to_prim(U, gas);
    const double H = (U.E + w.p) / U.rho;
    return detail::euler_eigen_from_uvH(w.u, w.v, H, gas);
}

EigenDecomp euler_roe_eigen_x(const EulerCons& L, const EulerCons& R, GasParams gas) {
    const EulerPrim wL = cons_to_prim(L, gas);
    const EulerPrim wR = cons_to_prim(R, gas);
    const double HL = (L.E + wL.p) / L.rho;
    const double HR = (R.E + wR.p) / R.rho;
    const double w = std::sqrt(R.rho / L.rho);
    const double inv = 1.0 / (1.0 + w);
    const double u = (wL.u + w * wR.u) * inv;
    const double v = (wL.v + w * wR.v) * inv;
    const double H = (HL + w * HR) * inv;
    return detail::euler_eigen_from_uvH(u, v, H, gas);
}

std::array<double, max_comp> euler_eigenvalues_x(const EulerCons& U, GasParams gas) {
    const EulerPrim w = cons_to_prim(U, gas);
    const double c = sound_speed(w, gas);
    return {w.u - c, w.u, w.u, w.u + c};
}

double euler_specrad_x(const EulerCons& U, GasParams gas) {
    const EulerPrim w = cons_to_prim(U, gas);
    return std::abs(w.u) + sound_speed(w, gas);
}

} // namespace fveg
