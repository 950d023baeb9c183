#pragma once

#include <cstdint>
#include <random>

#include "ich/scalar.hpp"

namespace ich {

/// Seeded deterministic RNG. mt19937_64 output is pinned by the standard,
/// and the integer draws below avoid std distributions, so streams are
/// identical across platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    long uniform(long lo, long hi) {  // inclusive
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t bound = range * (~std::uint64_t{0} / range);
        std::uint64_t r;
        do {
            r = g_();
        } while (r >= bound);
        return lo + static_cast<long>(r % range);
    }

    /// Small random rational with numerator in [-9,9], denominator in [1,4].
    Scalar rational() {
        return Scalar::fraction(uniform(-9, 9), uniform(1, 4));
    }

    Scalar scalar(unsigned long characteristic) {
        if (characteristic == 0) return rational();
        return Scalar::residue_of(uniform(0, static_cast<long>(characteristic) - 1), characteristic);
    }

    /// Derive an independent child stream; used to parallelize sample batches.
    Rng split(std::uint64_t salt) {
        return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ull));
    }

private:
    std::mt19937_64 g_;
};

}  // namespace ich
