#include "schur/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schur/repr_theory.hpp"

namespace schur {

namespace {

constexpr int kMaxDenseQubits = 6;
constexpr double kNormTolerance = 1e-10;

int qubit_count(const StateVector& psi) {
    const auto dim = psi.size();
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if ((Eigen::Index{1} << n) != dim) {
        throw std::domain_error("state dimension is not a power of two");
    }
    return n;
}

void check_normalized(const StateVector& psi) {
    if (std::abs(psi.squaredNorm() - 1.0) > kNormTolerance) {
        throw std::domain_error("state is not normalized");
    }
}

}  // namespace

QubitPermutation::QubitPermutation(std::vector<int> img) : image(std::move(img)) {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        if (v < 0 || v >= static_cast<int>(image.size()) || seen[v]) {
            throw std::invalid_argument("not a bijection on {1,...,n}");
        }
        seen[v] = true;
    }
}

QubitPermutation QubitPermutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return QubitPermutation(std::move(img));
}

CycleType QubitPermutation::cycle_type() const {
    std::vector<bool> seen(image.size(), false);
    std::vector<int> lengths;
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = image[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return CycleType(std::move(lengths));
}

QubitPermutation QubitPermutation::compose(const QubitPermutation& other) const {
    if (n() != other.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> img(image.size());
    for (int i = 0; i < n(); ++i) img[i] = image[other.image[i]];
    return QubitPermutation(std::move(img));
}

int BitString::weight() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), 1));
}

BitString BitString::weight_string(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("weight out of range");
    BitString x{n, std::vector<int>(n, 0)};
    std::fill(x.bits.begin(), x.bits.begin() + k, 1);
    return x;
}

Rational trace_prob_fixedpoint(int n, int k, int l) {
    if (n < 1 || k < 0 || k > n || l < 0 || 2 * l > n) {
        throw std::domain_error("trace_prob_fixedpoint argument out of range");
    }
    const Partition lambda(l == 0 ? std::vector<int>{n} : std::vector<int>{n - l, l});
    // (d_lambda/n!) sum over S_k x S_{n-k}, by conjugacy-class pairs.
    BigInt char_sum = 0;
    for (const auto& [rho1, size1] : conjugacy_classes(k)) {
        for (const auto& [rho2, size2] : conjugacy_classes(n - k)) {
            char_sum += size1 * size2 * character(lambda, concat_cycle_types(rho1, rho2));
        }
    }
    Rational p(dim_irrep(lambda) * char_sum, factorial(static_cast<unsigned>(n)));
    p.canonicalize();
    return p;
}

BigInt multiplicity_trivial_restriction(int n, int k, const Partition& lambda) {
    if (lambda.n() != n) throw std::domain_error("lambda must be a partition of n");
    if (k < 0 || k > n) throw std::domain_error("k out of range");
    BigInt char_sum = 0;
    for (const auto& [rho1, size1] : conjugacy_classes(k)) {
        for (const auto& [rho2, size2] : conjugacy_classes(n - k)) {
            char_sum += size1 * size2 * character(lambda, concat_cycle_types(rho1, rho2));
        }
    }
    BigInt denom = factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - k));
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), char_sum.get_mpz_t(), denom.get_mpz_t());
    if (r != 0 || q < 0) throw std::logic_error("character sum is not a multiple of |G|");
    return q;
}

DenseOperator defining_rep(const QubitPermutation& pi) {
    const int n = pi.n();
    const Eigen::Index dim = Eigen::Index{1} << n;
    DenseOperator d = DenseOperator::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        // Bit j (1-based from MSB) of b moves to position pi(j).
        Eigen::Index target = 0;
        for (int j = 0; j < n; ++j) {
            const int bit = static_cast<int>((b >> (n - 1 - j)) & 1);
            if (bit) target |= Eigen::Index{1} << (n - 1 - pi.image[j]);
        }
        d(target, b) = 1.0;
    }
    return d;
}

DenseOperator build_projector(int n, const Partition& lambda) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw std::domain_error("build_projector limited to n <= 6");
    }
    if (lambda.n() != n) throw std::domain_error("lambda must be a partition of n");
    const Eigen::Index dim = Eigen::Index{1} << n;
    DenseOperator sum = DenseOperator::Zero(dim, dim);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        QubitPermutation pi(img);
        const double chi = character(lambda, pi.cycle_type()).get_d();
        if (chi != 0.0) sum += chi * defining_rep(pi);
    } while (std::next_permutation(img.begin(), img.end()));
    const Rational scale(dim_irrep(lambda), factorial(static_cast<unsigned>(n)));
    return sum * scale.get_d();
}

StateVector basis_state(const BitString& x) {
    const Eigen::Index dim = Eigen::Index{1} << x.n;
    Eigen::Index idx = 0;
    for (int j = 0; j < x.n; ++j) {
        if (x.bits[j]) idx |= Eigen::Index{1} << (x.n - 1 - j);
    }
    StateVector psi = StateVector::Zero(dim);
    psi(idx) = 1.0;
    return psi;
}

std::map<int, double> measured_distribution(const StateVector& psi) {
    const int n = qubit_count(psi);
    if (n > kMaxDenseQubits) throw std::domain_error("measured_distribution limited to n <= 6");
    check_normalized(psi);
    std::map<int, double> out;
    for (int l = 0; l <= n / 2; ++l) {
        const Partition lambda(l == 0 ? std::vector<int>{n} : std::vector<int>{n - l, l});
        const DenseOperator p = build_projector(n, lambda);
        out[l] = (psi.adjoint() * p * psi).value().real();
    }
    return out;
}

namespace detail {

LocalUnitary haar_from_gaussians(double g0r, double g0i, double g1r, double g1i,
                                 double g2r, double g2i, double g3r, double g3i) {
    using C = std::complex<double>;
    Eigen::Matrix2cd z;
    z << C(g0r, g0i), C(g2r, g2i), C(g1r, g1i), C(g3r, g3i);
    // Gram-Schmidt; rescale columns so the R factor's diagonal is positive.
    Eigen::Vector2cd c0 = z.col(0);
    const double r00 = c0.norm();
    c0 /= r00;
    const C r01 = c0.adjoint() * z.col(1);
    Eigen::Vector2cd c1 = z.col(1) - r01 * c0;
    const double r11 = c1.norm();
    c1 /= r11;
    LocalUnitary u;
    u.col(0) = c0;
    u.col(1) = c1;
    return u;
}

}  // namespace detail

StateVector apply_scramble(const StateVector& psi, const LocalUnitary& u,
                           const QubitPermutation& sigma) {
    const int n = qubit_count(psi);
    if (sigma.n() != n) throw std::invalid_argument("permutation size mismatch");
    check_normalized(psi);
    const Eigen::Index dim = psi.size();
    // U on each qubit in turn.
    StateVector cur = psi;
    for (int j = 0; j < n; ++j) {
        const Eigen::Index mask = Eigen::Index{1} << (n - 1 - j);
        StateVector next = StateVector::Zero(dim);
        for (Eigen::Index b = 0; b < dim; ++b) {
            const int bit = (b & mask) ? 1 : 0;
            next(b & ~mask) += u(0, bit) * cur(b);
            next(b | mask) += u(1, bit) * cur(b);
        }
        cur = std::move(next);
    }
    // Then the qubit permutation.
    StateVector out = StateVector::Zero(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        Eigen::Index target = 0;
        for (int j = 0; j < n; ++j) {
            const int bit = static_cast<int>((b >> (n - 1 - j)) & 1);
            if (bit) target |= Eigen::Index{1} << (n - 1 - sigma.image[j]);
        }
        out(target) = cur(b);
    }
    return out;
}

}  // namespace schur
