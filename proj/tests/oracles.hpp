// Test-only oracles, kept independent of the library's numerical paths:
// a plain adaptive-Simpson integrator, Gauss-Legendre segment quadrature, and
// direct circle-integral ("theta-quadrature") evaluations of the approximate
// evolution operators with geometric cell lookup.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "fveg/euler.hpp"
#include "fveg/wave.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// --- adaptive Simpson (independent of the library's Gauss-Kronrod) ----------

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth > 60 || std::abs(left + right - whole) < 15.0 * tol) return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

// --- Gauss-Legendre 20-point on a segment ------------------------------------

inline double gauss_segment(const std::function<double(double)>& f, double a, double b) {
    static const double x[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
                                 0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
                                 0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
                                 0.9931285991850949};
    static const double w[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
                                 0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                                 0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
                                 0.0176140071391521};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 10; ++i) acc += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
    return acc * h;
}

// Integrate over [0, 2pi) split at the given break angles (any representatives;
// normalized mod 2pi), Gauss-Legendre per smooth piece.
inline double integrate_circle(const std::function<double(double)>& f,
                               std::vector<double> breaks) {
    for (double& b : breaks) {
        b = std::fmod(b, 2.0 * pi);
        if (b < 0.0) b += 2.0 * pi;
    }
    breaks.push_back(0.0);
    breaks.push_back(2.0 * pi);
    std::sort(breaks.begin(), breaks.end());
    double acc = 0.0;
    for (size_t k = 0; k + 1 < breaks.size(); ++k) {
        if (breaks[k + 1] - breaks[k] < 1e-14) continue;
        acc += gauss_segment(f, breaks[k], breaks[k + 1]);
    }
    return acc;
}

// --- wave EG2 oracle ---------------------------------------------------------

// Predicted state at an edge midpoint: directions with cos(theta) > 0 see R.
inline fveg::WaveState wave_oracle_S(const fveg::WaveState& L, const fveg::WaveState& R) {
    auto pick = [&](double th) -> const fveg::WaveState& { return std::cos(th) > 0.0 ? R : L; };
    auto term = [&](const std::function<double(const fveg::WaveState&, double)>& g) {
        return integrate_circle([&](double th) { return g(pick(th), th); },
                                {0.5 * pi, 1.5 * pi}) / pi;
    };
    fveg::WaveState out;
    const double phi_foot = 0.5 * (L.phi + R.phi);
    out.phi = term([](const fveg::WaveState& q, double th) {
                 return q.phi - q.u * std::cos(th) - q.v * std::sin(th);
             }) - phi_foot;
    out.u = term([](const fveg::WaveState& q, double th) {
        return -q.phi * std::cos(th) + q.u * (2.0 * std::cos(th) * std::cos(th) - 0.5) +
               2.0 * q.v * std::sin(th) * std::cos(th);
    });
    out.v = term([](const fveg::WaveState& q, double th) {
        return -q.phi * std::sin(th) + 2.0 * q.u * std::sin(th) * std::cos(th) +
               q.v * (2.0 * std::sin(th) * std::sin(th) - 0.5);
    });
    return out;
}

// Predicted state at a corner; quadrant states in (SE, NE, NW, SW) order.
inline fveg::WaveState wave_oracle_corner(const fveg::WaveState& SE, const fveg::WaveState& NE,
                                          const fveg::WaveState& NW, const fveg::WaveState& SW) {
    auto pick = [&](double th) -> const fveg::WaveState& {
        const bool east = std::cos(th) > 0.0;
        const bool north = std::sin(th) > 0.0;
        return east ? (north ? NE : SE) : (north ? NW : SW);
    };
    auto term = [&](const std::function<double(const fveg::WaveState&, double)>& g) {
        return integrate_circle([&](double th) { return g(pick(th), th); },
                                {0.0, 0.5 * pi, pi, 1.5 * pi}) / pi;
    };
    fveg::WaveState out;
    const double phi_foot = 0.25 * (SE.phi + NE.phi + NW.phi + SW.phi);
    out.phi = term([](const fveg::WaveState& q, double th) {
                 return q.phi - q.u * std::cos(th) - q.v * std::sin(th);
             }) - phi_foot;
    out.u = term([](const fveg::WaveState& q, double th) {
        return -q.phi * std::cos(th) + q.u * (2.0 * std::cos(th) * std::cos(th) - 0.5) +
               2.0 * q.v * std::sin(th) * std::cos(th);
    });
    out.v = term([](const fveg::WaveState& q, double th) {
        return -q.phi * std::sin(th) + 2.0 * q.u * std::sin(th) * std::cos(th) +
               q.v * (2.0 * std::sin(th) * std::sin(th) - 0.5);
    });
    return out;
}

// --- Euler EG2 oracle --------------------------------------------------------

// Midpoint case: directions with c' cos(theta) - u' > 0 land in R; the foot
// point P' lands by the sign of u' (average on a tie).
inline fveg::EulerPrim euler_oracle_S(const fveg::EulerPrim& L, const fveg::EulerPrim& R,
                                      const fveg::LinState& lin) {
    auto pick = [&](double th) -> const fveg::EulerPrim& {
        return lin.c * std::cos(th) - lin.u > 0.0 ? R : L;
    };
    const double brk = std::acos(std::clamp(lin.u / lin.c, -1.0, 1.0));
    std::vector<double> breaks = {brk, -brk};
    auto term = [&](const std::function<double(const fveg::EulerPrim&, double)>& g) {
        return integrate_circle([&](double th) { return g(pick(th), th); }, breaks) / pi;
    };
    const double wL = lin.u > 0.0 ? 1.0 : (lin.u < 0.0 ? 0.0 : 0.5);
    const double rho_h = wL * L.rho + (1.0 - wL) * R.rho;
    const double p_h = wL * L.p + (1.0 - wL) * R.p;
    const double c2 = lin.c * lin.c, rc = lin.rho * lin.c;

    fveg::EulerPrim out;
    out.rho = rho_h - 2.0 * p_h / c2 + term([&](const fveg::EulerPrim& q, double th) {
                  return q.p / c2 - (lin.rho / lin.c) * (q.u * std::cos(th) + q.v * std::sin(th));
              });
    out.u = term([&](const fveg::EulerPrim& q, double th) {
        return -q.p / rc * std::cos(th) + q.u * (2.0 * std::cos(th) * std::cos(th) - 0.5) +
               2.0 * q.v * std::sin(th) * std::cos(th);
    });
    out.v = term([&](const fveg::EulerPrim& q, double th) {
        return -q.p / rc * std::sin(th) + 2.0 * q.u * std::sin(th) * std::cos(th) +
               q.v * (2.0 * std::sin(th) * std::sin(th) - 0.5);
    });
    out.p = -p_h + term([&](const fveg::EulerPrim& q, double th) {
                return q.p - rc * (q.u * std::cos(th) + q.v * std::sin(th));
            });
    return out;
}

// Corner case with geometric quadrant lookup; states in (SE, NE, NW, SW) order.
inline fveg::EulerPrim euler_oracle_corner(const fveg::EulerPrim& SE, const fveg::EulerPrim& NE,
                                           const fveg::EulerPrim& NW, const fveg::EulerPrim& SW,
                                           const fveg::LinState& lin) {
    auto pick = [&](double th) -> const fveg::EulerPrim& {
        const bool east = lin.c * std::cos(th) - lin.u > 0.0;
        const bool north = lin.c * std::sin(th) - lin.v > 0.0;
        return east ? (north ? NE : SE) : (north ? NW : SW);
    };
    const double bx = std::acos(std::clamp(lin.u / lin.c, -1.0, 1.0));
    const double by = std::asin(std::clamp(lin.v / lin.c, -1.0, 1.0));
    std::vector<double> breaks = {bx, -bx, by, pi - by};
    auto term = [&](const std::function<double(const fveg::EulerPrim&, double)>& g) {
        return integrate_circle([&](double th) { return g(pick(th), th); }, breaks) / pi;
    };
    const double wx = lin.u > 0.0 ? 1.0 : (lin.u < 0.0 ? 0.0 : 0.5); // west share
    const double wy = lin.v > 0.0 ? 1.0 : (lin.v < 0.0 ? 0.0 : 0.5); // south share
    const double rho_h = wy * (wx * SW.rho + (1.0 - wx) * SE.rho) +
                         (1.0 - wy) * (wx * NW.rho + (1.0 - wx) * NE.rho);
    const double p_h = wy * (wx * SW.p + (1.0 - wx) * SE.p) +
                       (1.0 - wy) * (wx * NW.p + (1.0 - wx) * NE.p);
    const double c2 = lin.c * lin.c, rc = lin.rho * lin.c;

    fveg::EulerPrim out;
    out.rho = rho_h - 2.0 * p_h / c2 + term([&](const fveg::EulerPrim& q, double th) {
                  return q.p / c2 - (lin.rho / lin.c) * (q.u * std::cos(th) + q.v * std::sin(th));
              });
    out.u = term([&](const fveg::EulerPrim& q, double th) {
        return -q.p / rc * std::cos(th) + q.u * (2.0 * std::cos(th) * std::cos(th) - 0.5) +
               2.0 * q.v * std::sin(th) * std::cos(th);
    });
    out.v = term([&](const fveg::EulerPrim& q, double th) {
        return -q.p / rc * std::sin(th) + 2.0 * q.u * std::sin(th) * std::cos(th) +
               q.v * (2.0 * std::sin(th) * std::sin(th) - 0.5);
    });
    out.p = -p_h + term([&](const fveg::EulerPrim& q, double th) {
                return q.p - rc * (q.u * std::cos(th) + q.v * std::sin(th));
            });
    return out;
}

} // namespace oracle
