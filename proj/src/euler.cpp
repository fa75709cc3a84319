#include "fveg/euler.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

namespace fveg {

namespace {
constexpr double pi = std::numbers::pi;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Upwind weight of the low-coordinate side for drift speed s:
// P' = X - s*dt/2 lies on the low side for s > 0; ties are averaged.
double upwind_weight(double s) {
    if (s > 0.0) return 1.0;
    if (s < 0.0) return 0.0;
    return 0.5;
}
} // namespace

EulerPrim cons_to_prim(const EulerCons& U, GasParams gas) {
    if (!(U.rho > 0.0))
        throw StateError("cons_to_prim: nonpositive density " + std::to_string(U.rho));
    EulerPrim w;
    w.rho = U.rho;
    w.u = U.mx / U.rho;
    w.v = U.my / U.rho;
    const double ekin = 0.5 * (U.mx * U.mx + U.my * U.my) / U.rho;
    const double eint = U.E - ekin;
    if (!(eint > 0.0))
        throw StateError("cons_to_prim: nonpositive internal energy " + std::to_string(eint));
    w.p = (gas.gamma - 1.0) * eint;
    return w;
}

EulerCons prim_to_cons(const EulerPrim& w, GasParams gas) {
    if (!prim_admissible(w))
        throw StateError("prim_to_cons: inadmissible state rho=" + std::to_string(w.rho) +
                         " p=" + std::to_string(w.p));
    EulerCons U;
    U.rho = w.rho;
    U.mx = w.rho * w.u;
    U.my = w.rho * w.v;
    U.E = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
    return U;
}

LinState lin_average(std::span<const EulerPrim> neighbors, GasParams gas) {
    LinState lin;
    const double inv_n = 1.0 / static_cast<double>(neighbors.size());
    for (const EulerPrim& w : neighbors) {
        lin.rho += w.rho;
        lin.u += w.u;
        lin.v += w.v;
        lin.p += w.p;
    }
    lin.rho *= inv_n;
    lin.u *= inv_n;
    lin.v *= inv_n;
    lin.p *= inv_n;
    if (!(lin.rho > 0.0) || !(lin.p > 0.0))
        throw StateError("lin_average: inadmissible mean state");
    lin.c = std::sqrt(gas.gamma * lin.p / lin.rho);
    lin.alpha1 = lin.subsonic_y() ? std::asin(clamp_unit(lin.v / lin.c))
                                  : std::numeric_limits<double>::quiet_NaN();
    lin.alpha2 = lin.subsonic_x() ? std::acos(clamp_unit(lin.u / lin.c))
                                  : std::numeric_limits<double>::quiet_NaN();
    return lin;
}

LinState linearize(std::span<const EulerPrim> neighbors, GasParams gas) {
    LinState lin = lin_average(neighbors, gas);
    if (!lin.subsonic_x() || !lin.subsonic_y())
        throw SupersonicError("linearize: supersonic drift |u'|=" + std::to_string(std::abs(lin.u)) +
                              " |v'|=" + std::to_string(std::abs(lin.v)) +
                              " vs c'=" + std::to_string(lin.c));
    return lin;
}

EulerPrim euler_evolve_S(const EulerPrim& L, const EulerPrim& R, const LinState& lin) {
    const double a = lin.alpha2;
    const double ca = clamp_unit(lin.u / lin.c); // cos(alpha)
    const double sa = std::sqrt(std::max(0.0, 1.0 - ca * ca));
    const double s2a = 2.0 * sa * ca;
    const double c2 = lin.c * lin.c;
    const double rc = lin.rho * lin.c;

    const double wL = upwind_weight(lin.u);
    const double rho_h = wL * L.rho + (1.0 - wL) * R.rho;
    const double p_h = wL * L.p + (1.0 - wL) * R.p;

    const double dp = R.p - L.p;
    const double du = R.u - L.u;
    const double dv = R.v - L.v;

    EulerPrim s;
    s.rho = rho_h - 2.0 * p_h / c2 + ((2.0 * a / pi) * dp + 2.0 * L.p) / c2 -
            (2.0 * lin.rho * sa / (pi * lin.c)) * du;
    s.u = L.u - (2.0 * sa / (pi * rc)) * dp + ((a + s2a) / pi) * du;
    s.v = L.v + ((a - s2a) / pi) * dv;
    s.p = -p_h + (2.0 * a / pi) * dp + 2.0 * L.p - (2.0 * rc * sa / pi) * du;
    return s;
}

namespace {

// Primitive arc integrals over [a, b] of the six trig weights appearing in the
// circle integrals: 1, cos, sin, (2cos^2 - 1/2), 2 sin cos, (2sin^2 - 1/2).
struct ArcIntegrals {
    double one, cos_, sin_, cc, sc, ss;
};

ArcIntegrals arc_integrals(double a, double b) {
    ArcIntegrals I;
    I.one = b - a;
    I.cos_ = std::sin(b) - std::sin(a);
    I.sin_ = std::cos(a) - std::cos(b);
    const double s2 = std::sin(2.0 * b) - std::sin(2.0 * a);
    const double c2 = std::cos(2.0 * a) - std::cos(2.0 * b);
    I.cc = 0.5 * (b - a) + 0.5 * s2;
    I.sc = 0.5 * c2;
    I.ss = 0.5 * (b - a) - 0.5 * s2;
    return I;
}

EulerPrim evolve_upper_corner(const EulerPrim& L, const EulerPrim& R,
                              const EulerPrim& UL, const EulerPrim& UR,
                              const LinState& lin) {
    const double a1 = lin.alpha1;
    const double a2 = lin.alpha2;

    // Quadrant arcs of the sonic circle seen from the corner; the drift shifts
    // the boundaries away from the coordinate axes.
    const EulerPrim* cells[4] = {&R, &UR, &UL, &L};
    const ArcIntegrals arcs[4] = {
        arc_integrals(-a2, a1),              // south-east -> R
        arc_integrals(a1, a2),               // north-east -> UR
        arc_integrals(a2, pi - a1),          // north-west -> UL
        arc_integrals(pi - a1, 2.0 * pi - a2) // south-west -> L
    };

    const double wx = upwind_weight(lin.u); // weight of the west side
    const double wy = upwind_weight(lin.v); // weight of the south side
    const double rho_h = wy * (wx * L.rho + (1.0 - wx) * R.rho) +
                         (1.0 - wy) * (wx * UL.rho + (1.0 - wx) * UR.rho);
    const double p_h = wy * (wx * L.p + (1.0 - wx) * R.p) +
                       (1.0 - wy) * (wx * UL.p + (1.0 - wx) * UR.p);

    const double c2 = lin.c * lin.c;
    const double rc = lin.rho * lin.c;

    double sp = 0.0, spc = 0.0, sps = 0.0;       // p, p cos, p sin
    double suc = 0.0, succ = 0.0, susc = 0.0;    // u cos, u (2cos^2-1/2), u 2sincos
    double svs = 0.0, svsc = 0.0, svss = 0.0;    // v sin, v 2sincos, v (2sin^2-1/2)
    for (int k = 0; k < 4; ++k) {
        const EulerPrim& w = *cells[k];
        const ArcIntegrals& I = arcs[k];
        sp += w.p * I.one;
        spc += w.p * I.cos_;
        sps += w.p * I.sin_;
        suc += w.u * I.cos_;
        succ += w.u * I.cc;
        susc += w.u * I.sc;
        svs += w.v * I.sin_;
        svsc += w.v * I.sc;
        svss += w.v * I.ss;
    }

    EulerPrim out;
    out.rho = rho_h - 2.0 * p_h / c2 + (sp / c2 - (lin.rho / lin.c) * (suc + svs)) / pi;
    out.u = (-spc / rc + succ + svsc) / pi;
    out.v = (-sps / rc + susc + svss) / pi;
    out.p = -p_h + (sp - rc * (suc + svs)) / pi;
    return out;
}

} // namespace

EulerPrim euler_evolve_corner(const EulerPrim& L, const EulerPrim& R,
                              const EulerPrim& C0, const EulerPrim& C1,
                              const LinState& lin, bool upper) {
    if (upper) return evolve_upper_corner(L, R, C0, C1, lin);
    auto flip = [](EulerPrim w) { w.v = -w.v; return w; };
    EulerPrim out = evolve_upper_corner(flip(L), flip(R), flip(C0), flip(C1), lin.mirrored_y());
    out.v = -out.v;
    return out;
}

void euler_jacobian_x(const EulerCons& U, GasParams gas, double A[4][4]) {
    const double g1 = gas.gamma - 1.0;
    const double u = U.mx / U.rho;
    const double v = U.my / U.rho;
    const double q2 = u * u + v * v;
    const double p = g1 * (U.E - 0.5 * U.rho * q2);
    const double H = (U.E + p) / U.rho;

    A[0][0] = 0.0;            A[0][1] = 1.0;               A[0][2] = 0.0;      A[0][3] = 0.0;
    A[1][0] = 0.5 * g1 * q2 - u * u; A[1][1] = (3.0 - gas.gamma) * u; A[1][2] = -g1 * v; A[1][3] = g1;
    A[2][0] = -u * v;         A[2][1] = v;                 A[2][2] = u;        A[2][3] = 0.0;
    A[3][0] = u * (0.5 * g1 * q2 - H); A[3][1] = H - g1 * u * u; A[3][2] = -g1 * u * v; A[3][3] = gas.gamma * u;
}

} // namespace fveg
