#pragma once

#include <cstdint>
#include <cstddef>

#include "loadcast/matrix.hpp"

namespace loadcast {

/// Deterministic generator: SplitMix64 (Steele, Lea & Flood 2014).
/// The exact output stream is part of the toolkit's reproducibility
/// contract — the same seed yields the same stream on every platform,
/// unlike std::uniform_real_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Unbiased-enough bounded draw for shuffling (Lemire multiply-shift).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Deterministic child seed for an independent component stream.
    std::uint64_t fork() { return next_u64(); }

private:
    std::uint64_t state_;
};

/// Matrix with entries drawn uniformly from [-scale, +scale], row-major draw
/// order. scale must be > 0.
Matrix rng_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale);

Vec rng_vector(Rng& rng, std::size_t n, double scale);

/// Seeded Fisher-Yates.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace loadcast
