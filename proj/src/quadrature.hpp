#pragma once

#include <cmath>
#include <cstdlib>

#include "fveg/errors.hpp"

namespace fveg::detail {

// Gauss-Kronrod 7-15 nodes on [-1,1] (positive half; symmetric).
inline constexpr double gk_nodes[8] = {
    0.0,
    0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
    0.9914553711208126};
inline constexpr double gk_wk[8] = {
    0.2094821410847278,
    0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299786,
    0.0229353220105292};
inline constexpr double gk_wg[4] = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767, 0.1294849661688697};

template <class F>
void gk15(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fk = 0.0, fg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = gk_nodes[i] * half;
        const double fv = (i == 0) ? f(c) : f(c - x) + f(c + x);
        fk += gk_wk[i] * fv;
        if (i % 2 == 0) fg += gk_wg[i / 2] * fv;
    }
    kronrod = fk * half;
    err = std::abs((fk - fg) * half);
}

// Adaptive bisection to an absolute tolerance.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double tol, int depth = 0) {
    double val, err;
    gk15(f, a, b, val, err);
    if (err <= tol || depth >= 48) return val;
    const double m = 0.5 * (a + b);
    return integrate_adaptive(f, a, m, 0.5 * tol, depth + 1) +
           integrate_adaptive(f, m, b, 0.5 * tol, depth + 1);
}

} // namespace fveg::detail
