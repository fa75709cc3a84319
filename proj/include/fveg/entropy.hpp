#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fveg/eigen.hpp"
#include "fveg/euler.hpp"
#include "fveg/grid.hpp"
#include "fveg/wave.hpp"

namespace fveg {

// Entropy-conservative viscosity q*_j: the path integral of 2 xi <A(U(xi)) r_j, r_j>
// over the straight-line sub-path of wave family j (Roe decomposition, x-direction),
// by adaptive quadrature to 1e-10 absolute. Throws PathError if a path state
// leaves the admissible set.
double ec_viscosity_euler(const EulerCons& L, const EulerCons& R, int j, GasParams gas);

// Same construction for the wave system; zero for every family since the
// Jacobian is constant.
double ec_viscosity_wave(const StateVec& L, const StateVec& R, int j, WaveParams params);

// Comparison of the entropy-conservative viscosity against the stabilized
// viscosity actually used by the flux.
struct ViscosityBound {
    double lambda = 0.0;
    double q_star = 0.0;
    double q_tilde = 0.0;
    double margin = 0.0; // q_tilde - q_star
    bool ok = false;     // q_star <= q_tilde + 1e-10
};

std::array<ViscosityBound, max_comp> check_viscosity_domination(const EulerCons& L,
                                                                const EulerCons& R,
                                                                GasParams gas);

// Interface-jump functional  sum_sigma |sigma| * ||[[U]]||_2^2  (conserved variables).
double bv_functional(const CellField& field, const Grid& grid);

// Total entropy  sum_K |K| S(U_K).
double total_entropy_wave(const CellField& field, const Grid& grid);
double total_entropy_euler(const CellField& field, const Grid& grid, GasParams gas);

// Per-step entropy bookkeeping for a run.
struct EntropyReport {
    double total_entropy = 0.0;
    double production = 0.0;    // vs previous step
    double bv = 0.0;            // interface-jump functional
    double bv_time_integral = 0.0; // dt-weighted accumulation
};

// Randomized verification campaign over small-jump Euler pairs
// (||[[U]]|| <= 0.1 ||<U>||). Writes one CSV row per (sample, wave family):
// sample id, j, lambda, q_star, q_tilde, margin, ok.
struct CampaignResult {
    long samples = 0;
    long checks = 0;
    long violations = 0;
    double min_margin = 0.0;
};

CampaignResult run_viscosity_campaign(long n_samples, std::uint64_t seed, GasParams gas,
                                      const std::string& csv_path = "");

} // namespace fveg
