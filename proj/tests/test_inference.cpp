#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "schur/inference.hpp"
#include "schur/lp.hpp"
#include "schur/rng.hpp"
#include "schur/sampling.hpp"

using namespace schur;

namespace {

// Best Bayes success over every deterministic strategy (each outcome l
// mapped to some guess), by exhaustive enumeration.
Rational best_deterministic_bayes(int n, const Prior& prior) {
    const int m = n / 2 + 1;
    std::vector<int> choice(m, 0);
    Rational best = -1;
    std::function<void(int)> rec = [&](int l) {
        if (l == m) {
            StrategyMatrix o;
            o.n = n;
            o.entries.assign(m, std::vector<Rational>(m, Rational(0)));
            for (int j = 0; j < m; ++j) o.entries[choice[j]][j] = 1;
            const Rational s = bayes_success(o, prior, n);
            if (s > best) best = s;
            return;
        }
        for (int k = 0; k < m; ++k) {
            choice[l] = k;
            rec(l + 1);
        }
    };
    rec(0);
    return best;
}

}  // namespace

TEST_CASE("exact simplex on small known programs") {
    SUBCASE("max x+y, x<=2, y<=3") {
        LinearProgram lp;
        lp.num_vars = 2;
        lp.objective = {1, 1};
        lp.a_ub = {{1, 0}, {0, 1}};
        lp.b_ub = {2, 3};
        const auto sol = solve_max(lp);
        CHECK(sol.value == 5);
        CHECK(sol.x[0] == 2);
        CHECK(sol.x[1] == 3);
    }
    SUBCASE("equality constraints") {
        LinearProgram lp;
        lp.num_vars = 2;
        lp.objective = {Rational(1, 3), 1};
        lp.a_eq = {{1, 1}};
        lp.b_eq = {1};
        const auto sol = solve_max(lp);
        CHECK(sol.value == 1);
        CHECK(sol.x[1] == 1);
    }
    SUBCASE("infeasible") {
        LinearProgram lp;
        lp.num_vars = 1;
        lp.objective = {1};
        lp.a_ub = {{1}};
        lp.b_ub = {-1};
        lp.a_eq = {{1}};
        lp.b_eq = {1};
        CHECK_THROWS_AS(solve_max(lp), std::domain_error);
    }
    SUBCASE("unbounded") {
        LinearProgram lp;
        lp.num_vars = 1;
        lp.objective = {1};
        CHECK_THROWS_AS(solve_max(lp), std::logic_error);
    }
}

TEST_CASE("standard strategy") {
    const auto o = standard_strategy(4);
    o.validate();
    for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) CHECK(o.entries[k][l] == (k == l ? 1 : 0));
    }
    CHECK(worst_case_success(o, 4) == Rational(1, 3));
    CHECK(bayes_success(o, Prior::uniform(4), 4) == Rational(25, 36));
    CHECK(bayes_success(o, Prior::uniform(4), 4) == average_success_uniform(4));
}

TEST_CASE("worst-case success") {
    SUBCASE("uniform guessing on n=4 succeeds with probability 1/3 at every k") {
        StrategyMatrix o;
        o.n = 4;
        o.entries.assign(3, std::vector<Rational>(3, Rational(1, 3)));
        CHECK(worst_case_success(o, 4) == Rational(1, 3));
    }
    SUBCASE("n=1 trivial") {
        CHECK(worst_case_success(standard_strategy(1), 1) == 1);
    }
    SUBCASE("invalid matrices rejected") {
        StrategyMatrix o;
        o.n = 4;
        o.entries.assign(3, std::vector<Rational>(3, Rational(1, 2)));
        CHECK_THROWS_AS(worst_case_success(o, 4), std::invalid_argument);
    }
}

TEST_CASE("optimal worst-case strategy (LP)") {
    SUBCASE("n=1") {
        const auto [o, value] = optimal_worst_case_strategy(1);
        CHECK(value == 1);
    }
    SUBCASE("sandwich bounds for n = 2..20") {
        for (int n = 2; n <= 20; ++n) {
            const auto [o, value] = optimal_worst_case_strategy(n);
            CHECK(worst_case_success(o, n) == value);
            CHECK(value >= worst_case_success(standard_strategy(n), n));
            if (n >= 4) {
                Rational upper = 2;
                for (int k = 0; k < n / 2; ++k) {
                    const Rational b = distinguish_bound(n, k);
                    if (b < upper) upper = b;
                }
                CHECK(value <= upper);
            }
        }
    }
}

TEST_CASE("Bayes-optimal strategy") {
    SUBCASE("uniform prior reduces to the standard algorithm, n <= 40") {
        for (int n = 1; n <= 40; ++n) {
            const auto o = bayes_optimal_strategy(n, Prior::uniform(n));
            const auto std_o = standard_strategy(n);
            CHECK(o.entries == std_o.entries);
            CHECK(bayes_success(o, Prior::uniform(n), n) ==
                  bayes_success(std_o, Prior::uniform(n), n));
        }
    }
    SUBCASE("point-mass prior selects k0 in every feasible column") {
        const int n = 8, k0 = 3;
        const auto o = bayes_optimal_strategy(n, Prior::point_mass(n, k0));
        for (int l = 0; l <= k0; ++l) CHECK(o.entries[k0][l] == 1);
    }
    SUBCASE("matches exhaustive deterministic search, n=4 skewed prior") {
        Prior prior;
        prior.p = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
        const auto o = bayes_optimal_strategy(4, prior);
        CHECK(bayes_success(o, prior, 4) == best_deterministic_bayes(4, prior));
    }
    SUBCASE("matches exhaustive deterministic search on random priors, n <= 8") {
        SplitMix64 rng(5);
        for (int n = 2; n <= 8; ++n) {
            for (int rep = 0; rep < 3; ++rep) {
                const int m = n / 2 + 1;
                Prior prior;
                Rational total = 0;
                for (int k = 0; k < m; ++k) {
                    Rational w(static_cast<long>(rng.below(7)) + 1, 1);
                    prior.p.push_back(w);
                    total += w;
                }
                for (auto& w : prior.p) w /= total;
                const auto o = bayes_optimal_strategy(n, prior);
                CHECK(bayes_success(o, prior, n) == best_deterministic_bayes(n, prior));
            }
        }
    }
    SUBCASE("bayes success with point mass at 0 reads O_00") {
        StrategyMatrix o;
        o.n = 4;
        o.entries.assign(3, std::vector<Rational>(3, Rational(1, 3)));
        CHECK(bayes_success(o, Prior::point_mass(4, 0), 4) == Rational(1, 3));
    }
}

TEST_CASE("one-sided threshold") {
    SUBCASE("n=4, t=1") {
        const auto r = threshold_one_sided(4, 1);
        CHECK(r.worst_failure == Rational(1, 4));
        CHECK(r.failure[0] == 0);
        CHECK(r.failure[1] == Rational(1, 4));
        CHECK(r.failure[2] == Rational(1, 6));
    }
    SUBCASE("certainty below the threshold") {
        const auto r = threshold_one_sided(20, 7);
        for (int k = 0; k < 7; ++k) CHECK(r.failure[k] == 0);
    }
    SUBCASE("hard regime near n/2") {
        CHECK(threshold_one_sided(20, 10).worst_failure == Rational(10, 11));
    }
    SUBCASE("t out of range") {
        CHECK_THROWS_AS(threshold_one_sided(4, 0), std::domain_error);
        CHECK_THROWS_AS(threshold_one_sided(4, 3), std::domain_error);
    }
}

TEST_CASE("two-sided postprocess") {
    SUBCASE("threshold instance p0=1, p1=1/4") {
        const auto r = two_sided_postprocess(1, Rational(1, 4));
        CHECK(r.q0 == Rational(4, 5));
        CHECK(r.q1 == 0);
        CHECK(r.worst_case_success == Rational(4, 5));
    }
    SUBCASE("indistinguishable") {
        const auto r = two_sided_postprocess(Rational(1, 2), Rational(1, 2));
        CHECK(r.worst_case_success == Rational(1, 2));
    }
    SUBCASE("perfect one-sided test") {
        const auto r = two_sided_postprocess(1, 0);
        CHECK(r.q0 == 1);
        CHECK(r.q1 == 0);
        CHECK(r.worst_case_success == 1);
    }
    SUBCASE("requires p0 >= p1") {
        CHECK_THROWS_AS(two_sided_postprocess(Rational(1, 4), Rational(1, 2)),
                        std::domain_error);
    }
    SUBCASE("success always at least 1/2") {
        SplitMix64 rng(17);
        for (int rep = 0; rep < 200; ++rep) {
            Rational a(static_cast<long>(rng.below(100)), 100);
            Rational b(static_cast<long>(rng.below(100)), 100);
            a.canonicalize();
            b.canonicalize();
            if (a < b) std::swap(a, b);
            CHECK(two_sided_postprocess(a, b).worst_case_success >= Rational(1, 2));
        }
    }
    SUBCASE("invariant under (p0,p1) -> (1-p1,1-p0) with relabeled outputs") {
        SplitMix64 rng(23);
        for (int rep = 0; rep < 200; ++rep) {
            Rational a(static_cast<long>(rng.below(100)), 100);
            Rational b(static_cast<long>(rng.below(100)), 100);
            a.canonicalize();
            b.canonicalize();
            if (a < b) std::swap(a, b);
            const auto direct = two_sided_postprocess(a, b);
            const auto flipped =
                two_sided_postprocess(Rational(1) - b, Rational(1) - a);
            CHECK(direct.worst_case_success == flipped.worst_case_success);
        }
    }
}

TEST_CASE("two-sided threshold") {
    CHECK(threshold_two_sided(4, 1).worst_case_success == Rational(4, 5));
    CHECK(threshold_two_sided(4, 2).worst_case_success == Rational(3, 5));
    CHECK_THROWS_AS(threshold_two_sided(4, 0), std::domain_error);

    SUBCASE("worst-case success (n-t+1)/(n+1) >= 1 - t/(n+1), n <= 50") {
        for (int n = 2; n <= 50; ++n) {
            for (int t = 1; t <= n / 2; ++t) {
                const Rational s = threshold_two_sided(n, t).worst_case_success;
                Rational expected(n - t + 1, n + 1);
                expected.canonicalize();
                CHECK(s == expected);
                Rational bound(t, n + 1);
                bound.canonicalize();
                CHECK(s >= Rational(1) - bound);
            }
        }
    }
}

TEST_CASE("parity even probability") {
    CHECK(parity_even_probability(4, 1) == Rational(1, 4));
    CHECK(parity_even_probability(4, 0) == 1);
    CHECK(parity_even_probability(4, 2) == Rational(1, 2));
    CHECK_THROWS_AS(parity_even_probability(4, 3), std::domain_error);
}

TEST_CASE("parity algorithm") {
    SUBCASE("n=4") {
        const auto alg = parity_algorithm(4);
        CHECK(alg.post.worst_case_success >= Rational(3, 5));
        CHECK(alg.post.worst_case_success >= Rational(1, 2) + Rational(1, 10));
    }
    SUBCASE("n=2") {
        CHECK(parity_algorithm(2).post.worst_case_success >= Rational(2, 3));
    }
    SUBCASE("success bound for 2 <= n <= 50, every parity of n and n/2") {
        for (int n = 2; n <= 50; ++n) {
            const auto alg = parity_algorithm(n);
            const Rational bound = Rational(1, 2) + Rational(1, 2 * (n + 1));
            CHECK(alg.post.worst_case_success >= bound);
            // The profile's minimum is the claimed worst case.
            Rational worst = 2;
            for (const auto& s : alg.profile) worst = std::min(worst, s);
            CHECK(worst == alg.post.worst_case_success);
        }
    }
    SUBCASE("degenerate n rejected") {
        CHECK_THROWS_AS(parity_algorithm(1), std::domain_error);
    }
}

TEST_CASE("function success profile") {
    const auto std_o = standard_strategy(4);
    SUBCASE("threshold without postprocess") {
        const auto f = SymmetricBooleanFunction::threshold(4, 1);
        const auto prof = function_success_profile(f, std_o, std::nullopt);
        CHECK(prof[0] == 1);
        CHECK(prof[1] == Rational(3, 4));
        CHECK(prof[2] == Rational(5, 6));
    }
    SUBCASE("parity without postprocess") {
        const auto f = SymmetricBooleanFunction::parity(4);
        const auto prof = function_success_profile(f, std_o, std::nullopt);
        CHECK(prof[0] == 1);
        CHECK(prof[1] == Rational(3, 4));
        CHECK(prof[2] == Rational(1, 2));
    }
    SUBCASE("constant functions are rejected at construction") {
        CHECK_THROWS_AS(SymmetricBooleanFunction::threshold(4, 0), std::domain_error);
        CHECK_THROWS_AS(SymmetricBooleanFunction::parity(1), std::domain_error);
    }
}
