#include "schur/verify.hpp"

#include <algorithm>
#include <numeric>

#include "schur/oracle.hpp"
#include "schur/repr_theory.hpp"
#include "schur/rng.hpp"
#include "schur/sampling.hpp"

namespace schur {

namespace {

constexpr double kElementTol = 1e-10;
constexpr double kAggregateTol = 1e-9;

Partition two_row(int n, int l) {
    return Partition(l == 0 ? std::vector<int>{n} : std::vector<int>{n - l, l});
}

double max_abs(const DenseOperator& m) { return m.cwiseAbs().maxCoeff(); }

CheckResult make(const std::string& name, double observed, double tol) {
    return CheckResult{name, observed <= tol, observed, tol, ""};
}

QubitPermutation random_permutation(int n, SplitMix64& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(img[i], img[rng.below(static_cast<std::uint64_t>(i + 1))]);
    }
    return QubitPermutation(std::move(img));
}

DenseOperator tensor_unitary(const LocalUnitary& u, int n) {
    DenseOperator full = DenseOperator::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        DenseOperator next(full.rows() * 2, full.cols() * 2);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                next.block(r * full.rows(), c * full.cols(), full.rows(), full.cols()) =
                    u(r, c) * full;
            }
        }
        full = std::move(next);
    }
    return full;
}

}  // namespace

std::vector<CheckResult> verify_projectors(int n, int random_scrambles, std::uint64_t seed) {
    std::vector<CheckResult> out;
    const Eigen::Index dim = Eigen::Index{1} << n;
    const std::string tag = "n=" + std::to_string(n) + " ";

    std::vector<DenseOperator> projectors;
    for (int l = 0; l <= n / 2; ++l) projectors.push_back(build_projector(n, two_row(n, l)));

    double idem = 0, orth = 0, trace_dev = 0;
    DenseOperator total = DenseOperator::Zero(dim, dim);
    for (int l = 0; l <= n / 2; ++l) {
        const auto& p = projectors[l];
        idem = std::max(idem, max_abs(p * p - p));
        for (int l2 = l + 1; l2 <= n / 2; ++l2) {
            orth = std::max(orth, max_abs(p * projectors[l2]));
        }
        total += p;
        // tr P_(n-l,l) = (C(n,l) - C(n,l-1)) (n - 2l + 1)
        const double expected = dim_two_row(n, l).get_d() * (n - 2 * l + 1);
        trace_dev = std::max(trace_dev, std::abs(p.trace().real() - expected));
    }
    out.push_back(make(tag + "projector idempotence", idem, kElementTol));
    out.push_back(make(tag + "projector orthogonality", orth, kElementTol));
    out.push_back(make(tag + "projector completeness",
                       max_abs(total - DenseOperator::Identity(dim, dim)), kElementTol));
    out.push_back(make(tag + "projector traces", trace_dev, kAggregateTol));

    // More than two rows carries nothing on qubits.
    double extra = 0;
    for (const auto& lambda : partitions_of(n)) {
        if (lambda.rows() > 2) extra = std::max(extra, max_abs(build_projector(n, lambda)));
    }
    out.push_back(make(tag + "projectors beyond two rows vanish", extra, kElementTol));

    SplitMix64 rng(seed);
    double commute = 0;
    for (int trial = 0; trial < random_scrambles; ++trial) {
        const LocalUnitary u = haar_local_unitary(rng);
        const DenseOperator scramble =
            defining_rep(random_permutation(n, rng)) * tensor_unitary(u, n);
        for (const auto& p : projectors) {
            commute = std::max(commute, max_abs(p * scramble - scramble * p));
        }
    }
    out.push_back(make(tag + "commutation with random scrambles", commute, kAggregateTol));

    double invariance = 0;
    for (int k = 0; k <= n / 2; ++k) {
        const auto expected = weight_outcome_distribution(n, k);
        const StateVector input = basis_state(BitString::weight_string(n, k));
        for (int trial = 0; trial < random_scrambles; ++trial) {
            const LocalUnitary u = haar_local_unitary(rng);
            const StateVector psi = apply_scramble(input, u, random_permutation(n, rng));
            for (int l = 0; l <= n / 2; ++l) {
                const double p = (psi.adjoint() * projectors[l] * psi).value().real();
                invariance = std::max(invariance, std::abs(p - expected.at(l).get_d()));
            }
        }
    }
    out.push_back(make(tag + "outcome invariance under scrambles", invariance, kAggregateTol));
    return out;
}

std::vector<CheckResult> verify_characters(int max_n) {
    std::vector<CheckResult> out;

    bool closed_ok = true;
    std::string closed_detail;
    for (int n = 1; n <= max_n && closed_ok; ++n) {
        for (int k = 0; k <= n && closed_ok; ++k) {
            for (int l = 0; l <= n / 2; ++l) {
                Rational expected = 0;
                if (l <= std::min(k, n - k)) {
                    expected = Rational(dim_two_row(n, l), binomial(static_cast<unsigned>(n), k));
                    expected.canonicalize();
                }
                if (trace_prob_fixedpoint(n, k, l) != expected) {
                    closed_ok = false;
                    closed_detail = "first mismatch at n=" + std::to_string(n) +
                                   " k=" + std::to_string(k) + " l=" + std::to_string(l);
                    break;
                }
            }
        }
    }
    out.push_back({"character-sum oracle equals closed form (exact, n<=" +
                       std::to_string(max_n) + ")",
                   closed_ok, 0.0, 0.0, closed_detail});

    bool mult_ok = true;
    std::string mult_detail;
    for (int n = 1; n <= max_n && mult_ok; ++n) {
        for (int k = 0; k <= n && mult_ok; ++k) {
            for (const auto& lambda : partitions_of(n)) {
                const BigInt group_sum = multiplicity_trivial_restriction(n, k, lambda);
                const int pieri = trivial_restriction_multiplicity(n, k, lambda);
                if (group_sum != pieri) {
                    mult_ok = false;
                    mult_detail = "first mismatch at n=" + std::to_string(n) +
                                  " k=" + std::to_string(k) + " lambda=" + lambda.to_string();
                    break;
                }
            }
        }
    }
    out.push_back({"group-sum multiplicity equals Pieri (exact, n<=" + std::to_string(max_n) + ")",
                   mult_ok, 0.0, 0.0, mult_detail});
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace schur
