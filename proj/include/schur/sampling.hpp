#pragma once

#include <map>

#include "schur/numeric.hpp"

namespace schur {

// Exact distribution of the two-row outcome l (the partition (n-l, l))
// under weak Schur sampling. Partitions with more than two rows carry zero
// probability on qubits, so indexing by l is lossless.
struct OutcomeDistribution {
    int n = 0;
    std::map<int, Rational> probs;  // l in {0, ..., n/2}

    Rational at(int l) const {
        auto it = probs.find(l);
        return it == probs.end() ? Rational(0) : it->second;
    }
};

// Pr[l | k] = (C(n,l) - C(n,l-1)) / C(n,k) for l <= k, 0 above.
// Requires 0 <= k <= n/2.
OutcomeDistribution weight_outcome_distribution(int n, int k);

// Sum over l of |p(l) - q(l)|, exact. Distributions must share n.
Rational l1_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

// Closed form 2(n-2k-1)/(n-k) for ||p_k - p_{k+1}||_1; defined for
// 0 <= k <= n/2 - 1 (and at the n = 2k+1 boundary, where it is 0).
Rational l1_closed_form(int n, int k);

// Upper bound 1 - (k+1)/(2(n-k)) on the worst-case success of any
// procedure distinguishing weights k and k+1; equals 1/2 + l1/4.
Rational distinguish_bound(int n, int k);

// Success probability 1 - k/(n-k+1) of guessing k = l (equals Pr[k|k]).
Rational success_standard(int n, int k);

// Exact average of success_standard over uniform k in {0, ..., n/2}.
Rational average_success_uniform(int n);

// Large-n limit of average_success_uniform, for comparison only.
inline constexpr double kAverageSuccessLimit = 0.6137056388801094;  // 2(1 - ln 2)

}  // namespace schur
