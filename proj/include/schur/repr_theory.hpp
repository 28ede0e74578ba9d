#pragma once

#include <vector>

#include "schur/partition.hpp"

namespace schur {

// Hook lengths of the Young diagram of lambda, one entry per box, row by
// row: h = arm + leg + 1.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

// Dimension of the S_n irrep labelled by lambda: n! / prod of hook lengths.
// The division is exact; a remainder is an internal invariant violation.
BigInt dim_irrep(const Partition& lambda);

// Dimension of the two-row irrep (n-l, l): C(n,l) (n-2l+1)/(n-l+1),
// equivalently C(n,l) - C(n,l-1). Requires 0 <= l <= n/2.
BigInt dim_two_row(int n, int l);

// Character chi_lambda(rho) of S_n, lambda and rho partitions of the same
// n, computed by Murnaghan-Nakayama recursion (memoized per thread).
BigInt character(const Partition& lambda, const CycleType& rho);

// 1 if nu/lambda is a horizontal strip of r boxes (Pieri's rule for
// expanding by the one-row shape (r)), else 0. Requires |lambda|+r = |nu|.
int pieri_multiplicity(const Partition& lambda, int r, const Partition& nu);

// Multiplicity of the trivial irrep of S_k x S_{n-k} in the restriction of
// V_nu: 0 unless nu = (n-l, l) with l <= min(k, n-k), in which case 1.
int trivial_restriction_multiplicity(int n, int k, const Partition& nu);

}  // namespace schur
