#pragma once

#include <optional>
#include <vector>

#include "schur/sampling.hpp"

namespace schur {

// Column-stochastic inference matrix: entries[k][l] = Pr[output k | outcome l],
// k, l in {0, ..., n/2}.
struct StrategyMatrix {
    int n = 0;
    std::vector<std::vector<Rational>> entries;

    int size() const { return n / 2 + 1; }
    void validate() const;  // throws unless column-stochastic with entries in [0,1]
};

// Prior over the weight k, exact and normalized.
struct Prior {
    std::vector<Rational> p;  // index k in {0, ..., n/2}

    static Prior uniform(int n);
    static Prior point_mass(int n, int k);
    void validate() const;
};

// Boolean function of the weight, defined on the full range {0, ..., n/2}.
// Constant functions are rejected: they need no measurement at all.
struct SymmetricBooleanFunction {
    int n = 0;
    std::vector<int> values;  // f(k) in {0,1}

    static SymmetricBooleanFunction threshold(int n, int t);  // f(k) = [k >= t]
    static SymmetricBooleanFunction parity(int n);            // f(k) = k mod 2
    int operator()(int k) const { return values[k]; }
};

// Randomized relabeling that turns a one-sided test into a balanced
// two-sided one: output 0 with probability q0 when the raw guess is 0 and
// q1 when it is 1.
struct TwoSidedPostprocess {
    Rational q0;
    Rational q1;
    Rational worst_case_success;
};

// The standard algorithm "guess k = l" as a strategy matrix (identity).
StrategyMatrix standard_strategy(int n);

// min over k of sum_l O[k][l] Pr[l|k], exact.
Rational worst_case_success(const StrategyMatrix& o, int n);

// Exact LP: maximize t s.t. every row's success is >= t, columns stochastic.
// Returns an optimal vertex and the optimum.
std::pair<StrategyMatrix, Rational> optimal_worst_case_strategy(int n);

// Bayes-optimal deterministic strategy: column l puts its mass on the
// k in {l, ..., n/2} maximizing p_k / C(n,k), ties to the smallest k.
StrategyMatrix bayes_optimal_strategy(int n, const Prior& prior);

// sum_k p_k sum_{l<=k} O[k][l] Pr[l|k], exact.
Rational bayes_success(const StrategyMatrix& o, const Prior& prior, int n);

struct OneSidedThreshold {
    std::vector<Rational> failure;  // per k in {0, ..., n/2}
    Rational worst_failure;         // t/(n-t+1), attained at k = t
};

// Guess-then-threshold: fails only for k >= t, with probability
// C(n,t-1)/C(n,k). Requires 1 <= t <= n/2.
OneSidedThreshold threshold_one_sided(int n, int t);

// Balanced conversion for p_i = Pr[raw guess reads 0 | truth is i],
// assuming p0 >= p1 (callers relabel outputs first when needed).
TwoSidedPostprocess two_sided_postprocess(const Rational& p0, const Rational& p1);

// Two-sided threshold computation; worst-case success (n-t+1)/(n+1).
TwoSidedPostprocess threshold_two_sided(int n, int t);

// Pr[the standard guess is even | weight k]: 1 - k/n for even k, k/n for
// odd k; cross-checked against the alternating outcome-distribution sum.
Rational parity_even_probability(int n, int k);

struct ParityAlgorithm {
    TwoSidedPostprocess post;
    bool relabeled;                 // raw even/odd reading flipped so that p0 >= p1
    std::vector<Rational> profile;  // per-k probability of outputting parity(k)
};

// Two-sided parity computation; worst-case success >= 1/2 + 1/(2(n+1)).
ParityAlgorithm parity_algorithm(int n);

// Per-k probability of outputting f(k) when guessing via O and optionally
// applying a two-sided postprocess to f(guess).
std::vector<Rational> function_success_profile(
    const SymmetricBooleanFunction& f, const StrategyMatrix& o,
    const std::optional<TwoSidedPostprocess>& post);

}  // namespace schur
