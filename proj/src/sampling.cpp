#include "schur/sampling.hpp"

#include <stdexcept>

namespace schur {

OutcomeDistribution weight_outcome_distribution(int n, int k) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (k < 0 || 2 * k > n) {
        throw std::domain_error("weight_outcome_distribution requires 0 <= k <= n/2");
    }
    OutcomeDistribution dist;
    dist.n = n;
    const BigInt denom = binomial(static_cast<unsigned>(n), k);
    Rational total = 0;
    for (int l = 0; l <= n / 2; ++l) {
        Rational p = 0;
        if (l <= k) {
            BigInt num = binomial(static_cast<unsigned>(n), l) -
                         binomial(static_cast<unsigned>(n), l - 1);
            p = Rational(num, denom);
            p.canonicalize();
        }
        dist.probs[l] = p;
        total += p;
    }
    if (total != 1) throw std::logic_error("outcome distribution does not sum to 1");
    return dist;
}

Rational l1_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    if (p.n != q.n) throw std::domain_error("l1_distance requires matching n");
    Rational total = 0;
    for (int l = 0; l <= p.n / 2; ++l) {
        Rational d = p.at(l) - q.at(l);
        total += d < 0 ? Rational(-d) : d;
    }
    return total;
}

Rational l1_closed_form(int n, int k) {
    if (k < 0 || 2 * k + 1 > n) {
        throw std::domain_error("l1_closed_form requires 0 <= k and 2k+1 <= n");
    }
    Rational r(2 * (n - 2 * k - 1), n - k);
    r.canonicalize();
    return r;
}

Rational distinguish_bound(int n, int k) {
    if (k < 0 || k >= n / 2) {
        throw std::domain_error("distinguish_bound requires 0 <= k < n/2");
    }
    Rational r(k + 1, 2 * (n - k));
    r.canonicalize();
    return Rational(1) - r;
}

Rational success_standard(int n, int k) {
    if (k < 0 || 2 * k > n) {
        throw std::domain_error("success_standard requires 0 <= k <= n/2");
    }
    Rational r(k, n - k + 1);
    r.canonicalize();
    return Rational(1) - r;
}

Rational average_success_uniform(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    Rational sum = 0;
    for (int k = 0; k <= n / 2; ++k) sum += success_standard(n, k);
    Rational avg = sum / Rational(n / 2 + 1);
    avg.canonicalize();
    return avg;
}

}  // namespace schur
