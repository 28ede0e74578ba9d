#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schur/numeric.hpp"

namespace schur {

// A partition of n: non-increasing positive parts. The empty partition is
// the unique partition of 0. Input parts are canonicalized (sorted
// non-increasing) at construction; non-positive parts are rejected.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[i]; }  // 0-based row

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // e.g. "(4,2)"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// A partition of n read as the cycle lengths of a conjugacy class of S_n.
using CycleType = Partition;

// All partitions of n, in reverse-lexicographic order starting from (n).
std::vector<Partition> partitions_of(int n);

// Order of the centralizer of the class rho: z = prod_i i^{m_i} m_i!.
BigInt centralizer_order(const CycleType& rho);

// Conjugacy classes of S_n with their sizes n!/z_rho; sizes sum to n!.
std::vector<std::pair<CycleType, BigInt>> conjugacy_classes(int n);

// Cycle type of the partition-concatenation of two classes (parts merged
// and resorted), used for classes of S_k x S_{n-k} inside S_n.
CycleType concat_cycle_types(const CycleType& a, const CycleType& b);

}  // namespace schur
