#include "fveg/consistency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace fveg {

namespace {

constexpr double pi = std::numbers::pi;

struct Check {
    long* checks;
    long* violations;
    double* worst;

    void operator()(double lhs, double rhs) const {
        ++*checks;
        if (lhs > rhs) ++*violations;
        if (rhs > 0.0) *worst = std::max(*worst, lhs / rhs);
    }
};

// Interface jumps around a vertical edge sigma = L|R with the row above (U*)
// and below (B*). Signs follow the +x / +y normals.
struct WaveJumps {
    double s, up, lo, lplus, rplus, lminus, rminus;
};

WaveJumps jumps_of(double L, double R, double UL, double UR, double BL, double BR) {
    return {R - L, UR - UL, BR - BL, UL - L, UR - R, L - BL, R - BR};
}

void check_wave_stencil(const std::array<WaveState, 6>& w, const Check& chk) {
    const WaveState &L = w[0], &R = w[1], &UL = w[2], &UR = w[3], &BL = w[4], &BR = w[5];
    const WaveJumps jp = jumps_of(L.phi, R.phi, UL.phi, UR.phi, BL.phi, BR.phi);
    const WaveJumps ju = jumps_of(L.u, R.u, UL.u, UR.u, BL.u, BR.u);
    const WaveJumps jv = jumps_of(L.v, R.v, UL.v, UR.v, BL.v, BR.v);

    const WaveState S = wave_evolve_S(L, R);
    const WaveState A = wave_evolve_A(L, R, UL, UR);
    const WaveState B = wave_evolve_B(L, R, BL, BR);

    // Midpoint: 2/pi envelopes in the edge jumps alone.
    chk(std::abs(L.phi - S.phi), (2.0 / pi) * (std::abs(jp.s) + std::abs(ju.s)));
    chk(std::abs(L.u - S.u), (2.0 / pi) * (std::abs(jp.s) + std::abs(ju.s)));
    chk(std::abs(L.v - S.v), 0.5 * std::abs(jv.s));

    // Upper corner: 1/2 envelopes over the surrounding interfaces.
    chk(std::abs(L.phi - A.phi),
        0.5 * (std::abs(jp.s) + std::abs(jp.lplus) + std::abs(jp.rplus) + std::abs(ju.s) +
               std::abs(ju.up) + std::abs(jv.rplus) + std::abs(jv.lplus)));
    chk(std::abs(L.u - A.u),
        0.5 * (std::abs(jp.s) + std::abs(jp.up) + std::abs(ju.s) + std::abs(ju.lplus) +
               std::abs(ju.rplus) + std::abs(jv.rplus) + std::abs(jv.lplus)));
    chk(std::abs(L.v - A.v),
        0.5 * (std::abs(jp.rplus) + std::abs(jp.lplus) + std::abs(ju.rplus) + std::abs(ju.lplus) +
               std::abs(jv.s) + std::abs(jv.lplus) + std::abs(jv.rplus)));

    // Lower corner: the mirrored envelopes.
    chk(std::abs(L.phi - B.phi),
        0.5 * (std::abs(jp.s) + std::abs(jp.lminus) + std::abs(jp.rminus) + std::abs(ju.s) +
               std::abs(ju.lo) + std::abs(jv.rminus) + std::abs(jv.lminus)));
    chk(std::abs(L.u - B.u),
        0.5 * (std::abs(jp.s) + std::abs(jp.lo) + std::abs(ju.s) + std::abs(ju.lminus) +
               std::abs(ju.rminus) + std::abs(jv.rminus) + std::abs(jv.lminus)));
    chk(std::abs(L.v - B.v),
        0.5 * (std::abs(jp.rminus) + std::abs(jp.lminus) + std::abs(ju.rminus) + std::abs(ju.lminus) +
               std::abs(jv.s) + std::abs(jv.lminus) + std::abs(jv.rminus)));
}

} // namespace

JumpBoundCampaign run_wave_jump_bound_campaign(long n_samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    JumpBoundCampaign res;
    Check chk{&res.checks, &res.violations, &res.worst_ratio};
    for (long s = 0; s < n_samples; ++s) {
        std::array<WaveState, 6> w;
        for (auto& st : w) st = {d(rng), d(rng), d(rng)};
        check_wave_stencil(w, chk);
        ++res.samples;
    }
    return res;
}

namespace {

// |integral of cos| and |integral of sin| over the four arcs of the corner
// partition; used for the coefficient envelope.
void arc_abs_sums(double a1, double a2, double& sum_abs_cos, double& sum_abs_sin) {
    const double bounds[5] = {-a2, a1, a2, pi - a1, 2.0 * pi - a2};
    sum_abs_cos = 0.0;
    sum_abs_sin = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double a = bounds[k], b = bounds[k + 1];
        sum_abs_cos += std::abs(std::sin(b) - std::sin(a));
        sum_abs_sin += std::abs(std::cos(a) - std::cos(b));
    }
}

void check_euler_stencil(const std::array<EulerPrim, 6>& w, GasParams gas, const Check& chk) {
    const EulerPrim &L = w[0], &R = w[1], &UL = w[2], &UR = w[3], &BL = w[4], &BR = w[5];

    // Midpoint bound with the exact closed-form coefficients.
    {
        const EulerPrim cells[2] = {L, R};
        const LinState lin = lin_average({cells, 2}, gas);
        if (lin.subsonic()) {
            const EulerPrim S = euler_evolve_S(L, R, lin);
            const double host_rho = lin.u >= 0.0 ? L.rho : R.rho; // random draws never tie
            const double a = lin.alpha2;
            const double sa = std::sqrt(std::max(0.0, 1.0 - (lin.u / lin.c) * (lin.u / lin.c)));
            const double coef_p = lin.u >= 0.0 ? 2.0 * a / (pi * lin.c * lin.c)
                                               : std::abs(2.0 * a / pi - 2.0) / (lin.c * lin.c);
            const double coef_u = 2.0 * lin.rho * sa / (pi * lin.c);
            const double c_s = std::max(coef_p, coef_u);
            chk(std::abs(host_rho - S.rho), c_s * (std::abs(R.p - L.p) + std::abs(R.u - L.u)));
        }
    }

    // Corner bounds with the arc-integral coefficient envelope
    // C = max(2/c'^2, rho'/(pi c') * sum|Ic|, rho'/(pi c') * sum|Is|).
    auto corner_check = [&](const EulerPrim& C0, const EulerPrim& C1, bool upper) {
        const EulerPrim cells[4] = {L, R, C0, C1};
        const LinState lin0 = lin_average({cells, 4}, gas);
        const LinState lin = upper ? lin0 : lin0.mirrored_y();
        if (!lin0.subsonic()) return;
        double sum_c = 0.0, sum_s = 0.0;
        arc_abs_sums(lin.alpha1, lin.alpha2, sum_c, sum_s);
        const double C = std::max({2.0 / (lin.c * lin.c), lin.rho / (pi * lin.c) * sum_c,
                                   lin.rho / (pi * lin.c) * sum_s});
        const EulerPrim pred = euler_evolve_corner(L, R, C0, C1, lin0, upper);
        // Host cell by the drift signs (west when u'>0, south when v'>0). For
        // the upper corner the south row is (L,R); for the lower it is (BL,BR).
        const bool west = lin0.u >= 0.0;
        const bool south = lin0.v >= 0.0;
        const EulerPrim* host;
        if (upper) host = west ? (south ? &L : &C0) : (south ? &R : &C1);
        else host = west ? (south ? &C0 : &L) : (south ? &C1 : &R);

        auto j3 = [](const EulerPrim& a, const EulerPrim& b) {
            return std::abs(b.p - a.p) + std::abs(b.u - a.u) + std::abs(b.v - a.v);
        };
        const double jumps = j3(L, R) + j3(C0, C1) + j3(L, C0) + j3(R, C1);
        chk(std::abs(host->rho - pred.rho), C * jumps);
    };
    corner_check(UL, UR, true);
    corner_check(BL, BR, false);
}

} // namespace

JumpBoundCampaign run_euler_jump_bound_campaign(long n_samples, std::uint64_t seed, GasParams gas) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rho_d(0.5, 2.0);
    std::uniform_real_distribution<double> p_d(0.5, 2.0);
    std::uniform_real_distribution<double> vel_d(-0.2, 0.2);
    JumpBoundCampaign res;
    Check chk{&res.checks, &res.violations, &res.worst_ratio};
    for (long s = 0; s < n_samples; ++s) {
        std::array<EulerPrim, 6> w;
        for (auto& st : w) st = {rho_d(rng), vel_d(rng), vel_d(rng), p_d(rng)};
        check_euler_stencil(w, gas, chk);
        ++res.samples;
    }
    return res;
}

} // namespace fveg
