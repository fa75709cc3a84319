#include "doctest.h"

#include <cmath>
#include <random>

#include "fveg/consistency.hpp"
#include "fveg/wave.hpp"
#include "oracles.hpp"

using namespace fveg;

namespace {

WaveState random_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return {d(rng), d(rng), d(rng)};
}

void check_close(const WaveState& a, const WaveState& b, double tol) {
    CHECK(std::abs(a.phi - b.phi) < tol);
    CHECK(std::abs(a.u - b.u) < tol);
    CHECK(std::abs(a.v - b.v) < tol);
}

} // namespace

TEST_SUITE_BEGIN("wave-evolve");

TEST_CASE("constant states are reproduced exactly") {
    const WaveState s{0.7, -0.3, 1.9};
    check_close(wave_evolve_S(s, s), s, 1e-15);
    check_close(wave_evolve_A(s, s, s, s), s, 1e-15);
    check_close(wave_evolve_B(s, s, s, s), s, 1e-15);
}

TEST_CASE("midpoint closed form on a unit left state") {
    const WaveState L{1.0, 0.0, 0.0}, R{0.0, 0.0, 0.0};
    const WaveState s = wave_evolve_S(L, R);
    CHECK(s.phi == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.u == doctest::Approx(2.0 / oracle::pi).epsilon(1e-15));
    CHECK(s.v == doctest::Approx(0.0));
}

TEST_CASE("corner closed form with velocity jumps on the east side") {
    WaveState L{1, 0, 0}, R{1, 0, 0}, UL{1, 0, 0}, UR{1, 0, 0};
    R.u = 1.0;
    UR.u = 1.0;
    const WaveState a = wave_evolve_A(L, R, UL, UR);
    CHECK(a.phi == doctest::Approx(1.0 - 2.0 / oracle::pi).epsilon(1e-14));
}

TEST_CASE("midpoint prediction matches the circle-integral oracle") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 100; ++k) {
        const WaveState L = random_state(rng), R = random_state(rng);
        check_close(wave_evolve_S(L, R), oracle::wave_oracle_S(L, R), 1e-10);
    }
}

TEST_CASE("corner predictions match the circle-integral oracle") {
    std::mt19937_64 rng(2025);
    for (int k = 0; k < 100; ++k) {
        const WaveState L = random_state(rng), R = random_state(rng);
        const WaveState UL = random_state(rng), UR = random_state(rng);
        const WaveState BL = random_state(rng), BR = random_state(rng);
        // Upper corner: quadrants (SE,NE,NW,SW) = (R,UR,UL,L).
        check_close(wave_evolve_A(L, R, UL, UR), oracle::wave_oracle_corner(R, UR, UL, L), 1e-10);
        // Lower corner: quadrants (SE,NE,NW,SW) = (BR,R,L,BL).
        check_close(wave_evolve_B(L, R, BL, BR), oracle::wave_oracle_corner(BR, R, L, BL), 1e-10);
    }
}

TEST_CASE("operators are linear in their inputs") {
    std::mt19937_64 rng(7);
    auto add = [](const WaveState& a, const WaveState& b, double t) {
        return WaveState{a.phi + t * b.phi, a.u + t * b.u, a.v + t * b.v};
    };
    for (int k = 0; k < 50; ++k) {
        const WaveState a1 = random_state(rng), a2 = random_state(rng);
        const WaveState b1 = random_state(rng), b2 = random_state(rng);
        const double t = 0.37;
        const WaveState lhs = wave_evolve_S(add(a1, b1, t), add(a2, b2, t));
        const WaveState rhs = add(wave_evolve_S(a1, a2), wave_evolve_S(b1, b2), t);
        check_close(lhs, rhs, 1e-14);
    }
}

TEST_CASE("mirror-symmetric data collapses the two corner operators") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        WaveState L = random_state(rng), R = random_state(rng);
        WaveState UL = random_state(rng), UR = random_state(rng);
        L.v = R.v = UL.v = UR.v = 0.0;
        const WaveState a = wave_evolve_A(L, R, UL, UR);
        const WaveState b = wave_evolve_B(L, R, UL, UR); // BL=UL, BR=UR
        CHECK(a.phi == doctest::Approx(b.phi).epsilon(1e-14));
        CHECK(a.u == doctest::Approx(b.u).epsilon(1e-14));
        CHECK(std::abs(a.v + b.v) < 1e-14);
    }
}

TEST_CASE("predicted values stay inside the neighbor-jump envelopes") {
    const JumpBoundCampaign res = run_wave_jump_bound_campaign(10000, 42);
    CHECK(res.samples == 10000);
    CHECK(res.violations == 0);
    CHECK(res.worst_ratio <= 1.0);
}

TEST_SUITE_END();
