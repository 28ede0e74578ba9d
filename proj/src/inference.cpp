#include "schur/inference.hpp"

#include <algorithm>
#include <stdexcept>

#include "schur/lp.hpp"

namespace schur {

void StrategyMatrix::validate() const {
    const int m = size();
    if (static_cast<int>(entries.size()) != m) {
        throw std::invalid_argument("strategy matrix has wrong row count");
    }
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != m) {
            throw std::invalid_argument("strategy matrix has wrong column count");
        }
        for (const auto& v : row) {
            if (v < 0 || v > 1) throw std::invalid_argument("strategy entry outside [0,1]");
        }
    }
    for (int l = 0; l < m; ++l) {
        Rational col = 0;
        for (int k = 0; k < m; ++k) col += entries[k][l];
        if (col != 1) throw std::invalid_argument("strategy column does not sum to 1");
    }
}

Prior Prior::uniform(int n) {
    const int m = n / 2 + 1;
    Prior pr;
    pr.p.assign(m, Rational(1, m));
    return pr;
}

Prior Prior::point_mass(int n, int k) {
    const int m = n / 2 + 1;
    if (k < 0 || k >= m) throw std::domain_error("point mass outside {0,...,n/2}");
    Prior pr;
    pr.p.assign(m, Rational(0));
    pr.p[k] = 1;
    return pr;
}

void Prior::validate() const {
    Rational total = 0;
    for (const auto& v : p) {
        if (v < 0) throw std::invalid_argument("negative prior weight");
        total += v;
    }
    if (total != 1) throw std::invalid_argument("prior does not sum to 1");
}

SymmetricBooleanFunction SymmetricBooleanFunction::threshold(int n, int t) {
    const int m = n / 2 + 1;
    if (t < 1 || t >= m) {
        throw std::domain_error("threshold requires 1 <= t <= n/2 (otherwise f is constant)");
    }
    SymmetricBooleanFunction f;
    f.n = n;
    f.values.resize(m);
    for (int k = 0; k < m; ++k) f.values[k] = k >= t ? 1 : 0;
    return f;
}

SymmetricBooleanFunction SymmetricBooleanFunction::parity(int n) {
    const int m = n / 2 + 1;
    if (n < 2) throw std::domain_error("parity requires n >= 2 (otherwise f is constant)");
    SymmetricBooleanFunction f;
    f.n = n;
    f.values.resize(m);
    for (int k = 0; k < m; ++k) f.values[k] = k % 2;
    return f;
}

StrategyMatrix standard_strategy(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    const int m = n / 2 + 1;
    StrategyMatrix o;
    o.n = n;
    o.entries.assign(m, std::vector<Rational>(m, Rational(0)));
    for (int k = 0; k < m; ++k) o.entries[k][k] = 1;
    return o;
}

Rational worst_case_success(const StrategyMatrix& o, int n) {
    o.validate();
    const int m = n / 2 + 1;
    Rational worst;
    for (int k = 0; k < m; ++k) {
        const auto dist = weight_outcome_distribution(n, k);
        Rational s = 0;
        for (int l = 0; l < m; ++l) s += o.entries[k][l] * dist.at(l);
        if (k == 0 || s < worst) worst = s;
    }
    return worst;
}

std::pair<StrategyMatrix, Rational> optimal_worst_case_strategy(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    const int m = n / 2 + 1;
    // Variables: O[k][l] flattened row-major, then the epigraph variable t.
    LinearProgram lp;
    lp.num_vars = m * m + 1;
    lp.objective.assign(lp.num_vars, Rational(0));
    lp.objective[m * m] = 1;
    // For each k: t - sum_l O[k][l] Pr[l|k] <= 0.
    for (int k = 0; k < m; ++k) {
        const auto dist = weight_outcome_distribution(n, k);
        std::vector<Rational> row(lp.num_vars, Rational(0));
        for (int l = 0; l < m; ++l) row[k * m + l] = -dist.at(l);
        row[m * m] = 1;
        lp.a_ub.push_back(std::move(row));
        lp.b_ub.emplace_back(0);
    }
    // Column sums equal 1.
    for (int l = 0; l < m; ++l) {
        std::vector<Rational> row(lp.num_vars, Rational(0));
        for (int k = 0; k < m; ++k) row[k * m + l] = 1;
        lp.a_eq.push_back(std::move(row));
        lp.b_eq.emplace_back(1);
    }
    const LpSolution sol = solve_max(lp);
    StrategyMatrix o;
    o.n = n;
    o.entries.assign(m, std::vector<Rational>(m));
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) o.entries[k][l] = sol.x[k * m + l];
    }
    o.validate();
    return {std::move(o), sol.value};
}

StrategyMatrix bayes_optimal_strategy(int n, const Prior& prior) {
    prior.validate();
    const int m = n / 2 + 1;
    if (static_cast<int>(prior.p.size()) != m) {
        throw std::invalid_argument("prior has wrong length");
    }
    StrategyMatrix o;
    o.n = n;
    o.entries.assign(m, std::vector<Rational>(m, Rational(0)));
    for (int l = 0; l < m; ++l) {
        // Mass on k < l is never rewarded (Pr[l|k] = 0 there), so the
        // argmax of p_k / C(n,k) is taken over k >= l only.
        int best = l;
        Rational best_score = prior.p[l] / Rational(binomial(static_cast<unsigned>(n), l));
        for (int k = l + 1; k < m; ++k) {
            Rational score = prior.p[k] / Rational(binomial(static_cast<unsigned>(n), k));
            if (score > best_score) {
                best = k;
                best_score = score;
            }
        }
        o.entries[best][l] = 1;
    }
    return o;
}

Rational bayes_success(const StrategyMatrix& o, const Prior& prior, int n) {
    o.validate();
    prior.validate();
    const int m = n / 2 + 1;
    Rational total = 0;
    for (int k = 0; k < m; ++k) {
        const auto dist = weight_outcome_distribution(n, k);
        Rational s = 0;
        for (int l = 0; l <= k; ++l) s += o.entries[k][l] * dist.at(l);
        total += prior.p[k] * s;
    }
    return total;
}

OneSidedThreshold threshold_one_sided(int n, int t) {
    const int m = n / 2 + 1;
    if (t < 1 || t >= m) throw std::domain_error("threshold_one_sided requires 1 <= t <= n/2");
    OneSidedThreshold out;
    out.failure.resize(m);
    for (int k = 0; k < m; ++k) {
        if (k < t) {
            out.failure[k] = 0;
        } else {
            Rational f(binomial(static_cast<unsigned>(n), t - 1),
                       binomial(static_cast<unsigned>(n), k));
            f.canonicalize();
            out.failure[k] = f;
        }
    }
    out.worst_failure = Rational(t, n - t + 1);
    out.worst_failure.canonicalize();
    if (out.failure[t] != out.worst_failure) {
        throw std::logic_error("worst one-sided failure is not attained at k = t");
    }
    return out;
}

TwoSidedPostprocess two_sided_postprocess(const Rational& p0, const Rational& p1) {
    if (p1 > p0 || p0 > 1 || p1 < 0) {
        throw std::domain_error("two_sided_postprocess requires 0 <= p1 <= p0 <= 1");
    }
    TwoSidedPostprocess out;
    const Rational sum = p0 + p1;
    if (sum >= 1) {
        out.q0 = Rational(1) / sum;
        out.q1 = 0;
        out.worst_case_success = p0 / sum;
    } else {
        out.q0 = 1;
        out.q1 = (Rational(1) - sum) / (Rational(2) - sum);
        out.worst_case_success = (Rational(1) - p1) / (Rational(2) - sum);
    }
    out.q0.canonicalize();
    out.q1.canonicalize();
    out.worst_case_success.canonicalize();
    return out;
}

TwoSidedPostprocess threshold_two_sided(int n, int t) {
    const auto one_sided = threshold_one_sided(n, t);
    auto post = two_sided_postprocess(Rational(1), one_sided.worst_failure);
    Rational expected(n - t + 1, n + 1);
    expected.canonicalize();
    if (post.worst_case_success != expected) {
        throw std::logic_error("two-sided threshold success mismatch");
    }
    return post;
}

Rational parity_even_probability(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n) {
        throw std::domain_error("parity_even_probability requires 0 <= k <= n/2");
    }
    Rational closed = (k % 2 == 0) ? Rational(n - k, n) : Rational(k, n);
    closed.canonicalize();
    // Direct alternating summation of the outcome distribution as a cross-check.
    const auto dist = weight_outcome_distribution(n, k);
    Rational direct = 0;
    for (int l = 0; l <= n / 2; l += 2) direct += dist.at(l);
    if (direct != closed) throw std::logic_error("parity closed form disagrees with alternating outcome sum");
    return closed;
}

ParityAlgorithm parity_algorithm(int n) {
    if (n < 2) throw std::domain_error("parity_algorithm requires n >= 2");
    const int m = n / 2 + 1;
    std::vector<Rational> even(m);
    for (int k = 0; k < m; ++k) even[k] = parity_even_probability(n, k);

    // p_i = Pr[raw reading says "even" | parity(k) = i], worst case over k.
    Rational p0, p1;
    bool have0 = false, have1 = false;
    for (int k = 0; k < m; ++k) {
        if (k % 2 == 0) {
            if (!have0 || even[k] < p0) { p0 = even[k]; have0 = true; }
        } else {
            if (!have1 || even[k] > p1) { p1 = even[k]; have1 = true; }
        }
    }

    ParityAlgorithm alg;
    // If p0 < p1, flip the raw even/odd reading; the flipped worst-case
    // probabilities then satisfy the p0 >= p1 precondition.
    alg.relabeled = p0 < p1;
    auto reading = [&](int k) {
        return alg.relabeled ? Rational(1) - even[k] : even[k];
    };
    Rational r0, r1;
    bool h0 = false, h1 = false;
    for (int k = 0; k < m; ++k) {
        if (k % 2 == 0) {
            if (!h0 || reading(k) < r0) { r0 = reading(k); h0 = true; }
        } else {
            if (!h1 || reading(k) > r1) { r1 = reading(k); h1 = true; }
        }
    }
    alg.post = two_sided_postprocess(r0, r1);

    alg.profile.resize(m);
    for (int k = 0; k < m; ++k) {
        const Rational e = reading(k);
        if (k % 2 == 0) {
            alg.profile[k] = alg.post.q0 * e + alg.post.q1 * (Rational(1) - e);
        } else {
            alg.profile[k] = (Rational(1) - alg.post.q0) * e +
                             (Rational(1) - alg.post.q1) * (Rational(1) - e);
        }
        alg.profile[k].canonicalize();
    }
    return alg;
}

std::vector<Rational> function_success_profile(
    const SymmetricBooleanFunction& f, const StrategyMatrix& o,
    const std::optional<TwoSidedPostprocess>& post) {
    o.validate();
    const int n = f.n;
    if (o.n != n) throw std::invalid_argument("function and strategy disagree on n");
    const int m = n / 2 + 1;
    std::vector<Rational> profile(m);
    for (int k = 0; k < m; ++k) {
        const auto dist = weight_outcome_distribution(n, k);
        // e = Pr[f(guess) = 0 | k]
        Rational e = 0;
        for (int l = 0; l < m; ++l) {
            for (int kk = 0; kk < m; ++kk) {
                if (f(kk) == 0) e += dist.at(l) * o.entries[kk][l];
            }
        }
        if (!post) {
            profile[k] = f(k) == 0 ? e : Rational(1) - e;
        } else if (f(k) == 0) {
            profile[k] = post->q0 * e + post->q1 * (Rational(1) - e);
        } else {
            profile[k] = (Rational(1) - post->q0) * e +
                         (Rational(1) - post->q1) * (Rational(1) - e);
        }
        profile[k].canonicalize();
    }
    return profile;
}

}  // namespace schur
