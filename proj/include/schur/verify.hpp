#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schur {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;  // worst deviation seen (0 for exact checks)
    double tolerance = 0.0;
    std::string detail;
};

// Dense-operator checks at a single n: projector idempotence, mutual
// orthogonality, completeness, trace values, commutation with random
// scrambles, and outcome-distribution invariance. Tolerances are 1e-10
// element-wise and 1e-9 for aggregates.
std::vector<CheckResult> verify_projectors(int n, int random_scrambles, std::uint64_t seed);

// Exact checks: character-sum oracle vs the closed form, and the group-sum
// multiplicity vs Pieri, for all k and two-row outcomes up to max_n.
std::vector<CheckResult> verify_characters(int max_n);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace schur
