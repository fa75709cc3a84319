#pragma once

#include <cstdint>

#include "fveg/euler.hpp"
#include "fveg/wave.hpp"

namespace fveg {

// Randomized verification that predicted interface values stay within the
// coefficient-weighted neighbor-jump envelopes of the evolution operators
// (the bounds that drive the scheme's consistency estimate).
struct JumpBoundCampaign {
    long samples = 0;
    long checks = 0;
    long violations = 0;
    double worst_ratio = 0.0; // max |deviation| / bound over all checks
};

JumpBoundCampaign run_wave_jump_bound_campaign(long n_samples, std::uint64_t seed);
JumpBoundCampaign run_euler_jump_bound_campaign(long n_samples, std::uint64_t seed, GasParams gas);

} // namespace fveg
