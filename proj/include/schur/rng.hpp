#pragma once

#include <cstdint>

#include "schur/numeric.hpp"

namespace schur {

// SplitMix64 stream. Trial- and sweep-level generators are derived from a
// master seed by mixing in an index (see derive), so trials are
// order-independent and safe to run in parallel.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Integer in {0, ..., bound-1} (bound >= 1), by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    // Exact uniform rational Z/2^128 from 128 random bits; comparing it
    // against cumulative exact probabilities samples a rational
    // distribution with bias < 2^-128.
    Rational uniform_rational_128() {
        BigInt z = next();
        z <<= 64;
        z += next();
        BigInt denom = 1;
        denom <<= 128;
        Rational u(z, denom);
        u.canonicalize();
        return u;
    }

    // Child seed for (stream, index), e.g. per-k sweeps and per-trial
    // substreams: seed' = mix(seed ^ golden*(index+1)).
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))).next();
    }

    static SplitMix64 derive(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(derive_seed(seed, index));
    }

private:
    std::uint64_t state_;
};

}  // namespace schur
