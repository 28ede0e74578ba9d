#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "schur/partition.hpp"
#include "schur/sampling.hpp"

namespace schur {

// Brute-force verification backends for the weak-Schur-sampling statistics:
// an exact character-sum oracle (no state space, feasible to n ~ 12) and a
// dense-operator oracle on the full 2^n space (n <= 6).
//
// Basis-index convention: qubit 1 is the most significant bit of the
// computational-basis index.

using StateVector = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;
using LocalUnitary = Eigen::Matrix2cd;

// Bijection on {1, ..., n}, stored 0-based: image(i) = sigma(i+1) - 1.
struct QubitPermutation {
    std::vector<int> image;

    explicit QubitPermutation(std::vector<int> img);
    static QubitPermutation identity(int n);
    int n() const { return static_cast<int>(image.size()); }
    CycleType cycle_type() const;
    QubitPermutation compose(const QubitPermutation& other) const;  // this * other
};

struct BitString {
    int n;
    std::vector<int> bits;

    int weight() const;
    // |1...1 0...0> with k leading ones.
    static BitString weight_string(int n, int k);
};

// Exact tr(P_{(n-l,l)} |x><x|) for |x| = k, via the character sum over
// conjugacy-class pairs of S_k x S_{n-k}. Valid for any 0 <= k <= n.
Rational trace_prob_fixedpoint(int n, int k, int l);

// Exact multiplicity of the trivial irrep of S_k x S_{n-k} in V_lambda:
// (1/(k!(n-k)!)) sum over class pairs of sizes x chi_lambda. Must be a
// non-negative integer.
BigInt multiplicity_trivial_restriction(int n, int k, const Partition& lambda);

// Matrix of the defining representation: D(pi)|i_1...i_n> = |i_{pi^-1(1)}...>.
DenseOperator defining_rep(const QubitPermutation& pi);

// P_lambda = (d_lambda/n!) sum_pi chi_lambda(pi) D(pi). Guarded to n <= 6.
DenseOperator build_projector(int n, const Partition& lambda);

// Computational-basis state for x.
StateVector basis_state(const BitString& x);

// l -> <psi|P_{(n-l,l)}|psi> for all two-row outcomes. n <= 6.
std::map<int, double> measured_distribution(const StateVector& psi);

// Haar-distributed 2x2 unitary: complex-Gaussian matrix, Gram-Schmidt on
// the columns, phases fixed so the triangular factor has positive diagonal.
template <typename Rng>
LocalUnitary haar_local_unitary(Rng& rng);

// D(sigma) U^{x n} |psi>, applied without forming the dense operators.
StateVector apply_scramble(const StateVector& psi, const LocalUnitary& u,
                           const QubitPermutation& sigma);

// --- implementation of the templated sampler ---

namespace detail {
LocalUnitary haar_from_gaussians(double g0r, double g0i, double g1r, double g1i,
                                 double g2r, double g2i, double g3r, double g3i);
}

template <typename Rng>
LocalUnitary haar_local_unitary(Rng& rng) {
    // Box-Muller from the generator's uniform doubles; kept self-contained
    // so identical seeds give identical matrices on every platform.
    double g[8];
    for (int i = 0; i < 8; i += 2) {
        double u1 = rng.uniform_double();
        double u2 = rng.uniform_double();
        while (u1 <= 0.0) u1 = rng.uniform_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        g[i] = r * std::cos(2.0 * M_PI * u2);
        g[i + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    return detail::haar_from_gaussians(g[0], g[1], g[2], g[3], g[4], g[5], g[6], g[7]);
}

}  // namespace schur
