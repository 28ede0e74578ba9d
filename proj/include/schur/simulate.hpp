#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schur/inference.hpp"
#include "schur/numeric.hpp"

namespace schur {

enum class SimMode { kExactSampled, kStatevector };

enum class SimTask { kWeight, kThreshold, kParity };

struct ScenarioConfig {
    int n = 0;
    int k = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    SimMode mode = SimMode::kExactSampled;
    SimTask task = SimTask::kWeight;
    int threshold_t = 1;  // only read for kThreshold

    void validate() const;
};

struct TrialReport {
    int n = 0;
    int k = 0;
    long trials = 0;
    long successes = 0;
    double empirical_rate = 0.0;
    Rational theoretical;
    double standard_error = 0.0;
    double z_score = 0.0;
};

// Runs one Monte Carlo scenario. Exact-sampled mode draws the outcome l
// directly from the exact outcome distribution with a 128-bit exact
// uniform; statevector mode scrambles |1...10...0> with a fresh Haar
// unitary and random qubit permutation per trial and measures via the
// dense projectors (n <= 6).
TrialReport run_scenario(const ScenarioConfig& cfg);

// run_scenario for every k in {0, ..., n/2}; the per-k generator is
// SplitMix64::derive(cfg.seed, k), so reports are independent of ordering.
std::vector<TrialReport> sweep(const ScenarioConfig& base);

std::string to_string(SimMode mode);
std::string to_string(SimTask task);

}  // namespace schur
