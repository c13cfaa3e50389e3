#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace qroulette {

/// SplitMix64 finalizer: avalanching 64-bit mix (Vigna's reference constants).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64: counter-based 64-bit generator. The output sequence is a pure
/// function of the seed, with no platform- or libstdc++-dependent behaviour,
/// which is what makes every simulation in this project byte-reproducible.
///
/// Reference: S. Vigna, https://prng.di.unimi.it/splitmix64.c
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Derives an independent generator from a base seed and a tuple of stream
/// ids (e.g. model id, problem size, trial index). Each distinct tuple gives
/// an unrelated stream, so work items can be evaluated in any order, or in
/// parallel, without changing any result.
inline SplitMix64 derive_stream(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> ids) {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
    for (std::uint64_t id : ids) {
        h = mix64(h ^ (id + 0x9E3779B97F4A7C15ULL));
    }
    return SplitMix64(h);
}

/// Inverse-CDF sampler over a fixed vector of nonnegative weights.
/// Build cost is O(n); each draw is one RNG call plus a binary search.
/// Zero-weight entries are never returned.
class DiscreteSampler {
public:
    explicit DiscreteSampler(std::span<const double> weights) {
        if (weights.empty()) {
            throw std::invalid_argument("DiscreteSampler: empty weight vector");
        }
        cumulative_.reserve(weights.size());
        double acc = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0) || !std::isfinite(w)) {
                throw std::invalid_argument(
                    "DiscreteSampler: weights must be finite and nonnegative");
            }
            acc += w;
            cumulative_.push_back(acc);
        }
        if (!(acc > 0.0)) {
            throw std::domain_error("DiscreteSampler: total weight must be positive");
        }
    }

    std::size_t sample(SplitMix64& rng) const {
        const double r = rng.next_double() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
        if (it == cumulative_.end()) --it;  // r == total after rounding
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

    double total() const { return cumulative_.back(); }
    std::size_t size() const { return cumulative_.size(); }

private:
    std::vector<double> cumulative_;  // strictly nondecreasing, back() > 0
};

}  // namespace qroulette
