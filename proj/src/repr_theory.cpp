#include "schur/repr_theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace schur {

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int rows = lambda.rows();
    std::vector<std::vector<int>> hooks(rows);
    for (int i = 0; i < rows; ++i) {
        hooks[i].resize(parts[i]);
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = 0;
            for (int ii = i + 1; ii < rows; ++ii) {
                if (parts[ii] > j) ++leg;
            }
            hooks[i][j] = arm + leg + 1;
        }
    }
    return hooks;
}

BigInt dim_irrep(const Partition& lambda) {
    BigInt prod = 1;
    for (const auto& row : hook_lengths(lambda)) {
        for (int h : row) prod *= h;
    }
    BigInt nfact = factorial(static_cast<unsigned>(lambda.n()));
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), nfact.get_mpz_t(), prod.get_mpz_t());
    if (r != 0) throw std::logic_error("hook-length product does not divide n!");
    return q;
}

BigInt dim_two_row(int n, int l) {
    if (l < 0 || 2 * l > n) throw std::domain_error("dim_two_row requires 0 <= l <= n/2");
    return binomial(static_cast<unsigned>(n), l) - binomial(static_cast<unsigned>(n), l - 1);
}

namespace {

// Murnaghan-Nakayama on beta numbers: removing a border strip of length r
// is subtracting r from one beta number, with sign (-1)^(entries jumped).
BigInt mn_character(const std::vector<int>& lambda, const std::vector<int>& rho_rest) {
    if (lambda.empty()) return 1;
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    auto key = std::make_pair(lambda, rho_rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = rho_rest.front();
    std::vector<int> rho_next(rho_rest.begin() + 1, rho_rest.end());
    const int m = static_cast<int>(lambda.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < m; ++i) {
        const int c = beta[i] - r;
        if (c < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < m; ++j) {
            if (beta[j] == c) { occupied = true; break; }
            if (beta[j] > c && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = c;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nlambda;
        for (int j = 0; j < m; ++j) {
            int part = nbeta[j] - (m - 1 - j);
            if (part > 0) nlambda.push_back(part);
        }
        BigInt sub = mn_character(nlambda, rho_next);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

BigInt character(const Partition& lambda, const CycleType& rho) {
    if (lambda.n() != rho.n()) {
        throw std::domain_error("character: lambda and rho must partition the same n");
    }
    return mn_character(lambda.parts(), rho.parts());
}

int pieri_multiplicity(const Partition& lambda, int r, const Partition& nu) {
    if (r < 0 || lambda.n() + r != nu.n()) {
        throw std::domain_error("pieri_multiplicity: |lambda| + r must equal |nu|");
    }
    auto row = [](const Partition& p, int i) { return i < p.rows() ? p.part(i) : 0; };
    const int rows = std::max(lambda.rows(), nu.rows());
    for (int i = 0; i < rows; ++i) {
        if (row(lambda, i) > row(nu, i)) return 0;        // nu must contain lambda
        if (row(nu, i + 1) > row(lambda, i)) return 0;    // no column gains two boxes
    }
    return 1;
}

int trivial_restriction_multiplicity(int n, int k, const Partition& nu) {
    if (nu.n() != n) throw std::domain_error("nu must be a partition of n");
    if (k < 0 || k > n) throw std::domain_error("k out of range");
    if (nu.rows() > 2) return 0;
    const int l = nu.rows() == 2 ? nu.part(1) : 0;
    return l <= std::min(k, n - k) ? 1 : 0;
}

}  // namespace schur
