#include "schur/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace schur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt centralizer_order(const CycleType& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    BigInt z = 1;
    for (auto [part, m] : mult) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(m));
        z *= pw * factorial(static_cast<unsigned>(m));
    }
    return z;
}

std::vector<std::pair<CycleType, BigInt>> conjugacy_classes(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<std::pair<CycleType, BigInt>> out;
    BigInt nfact = factorial(static_cast<unsigned>(n));
    for (const auto& rho : partitions_of(n)) {
        out.emplace_back(rho, nfact / centralizer_order(rho));
    }
    return out;
}

CycleType concat_cycle_types(const CycleType& a, const CycleType& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return CycleType(std::move(parts));
}

}  // namespace schur
