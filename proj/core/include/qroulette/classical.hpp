#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qroulette/rng.hpp"

namespace qroulette::classical {

/// A roulette wheel with one hidden winning sector. Sector weights are
/// nonnegative real ball densities; the chance of a throw landing in sector j
/// is counts[j] / total. Densities are reals rather than integers so that the
/// inversion step below is exactly sum-preserving and involutive.
struct Wheel {
    std::vector<double> counts;
    std::size_t target = 0;

    std::size_t n_sectors() const { return counts.size(); }
    double total() const;
};

/// Two-variable reduction of the wheel under the search protocol: every
/// non-target sector keeps a common count `beta` (the protocol never breaks
/// that symmetry), the target sector holds `gamma`.
struct ReducedState {
    double beta = 0.0;
    double gamma = 0.0;
    std::uint64_t n_sectors = 0;
};

struct AntTraceRecord {
    std::uint64_t k = 0;   // iteration index, from 0
    double gamma = 0.0;    // target sector count
    double total = 0.0;    // total ball count
    double probability = 0.0;  // gamma / total
};
using AntTrace = std::vector<AntTraceRecord>;

enum class Mode { exact, idealized };

/// Uniform wheel: every sector holds `alpha` balls. n_sectors >= 2, alpha > 0.
Wheel new_uniform_wheel(std::size_t n_sectors, double alpha, std::size_t target);

struct Removal {
    Wheel wheel;
    double removed = 0.0;
};

/// Protocol step 1: empty the target sector, reporting how much was removed.
Removal remove_jackpot(Wheel w);

/// Protocol step 2: replace every count c by 2*A - c, where A is the mean
/// count. Sum-preserving and involutive. Throws std::domain_error if any
/// resulting count would be negative (balls cannot be negative); starting
/// from a uniform wheel the protocol itself never triggers this.
Wheel invert_about_average(Wheel w);

/// Protocol step 3: put `removed` balls back into the target sector.
Wheel restore_balls(Wheel w, double removed);

/// One full protocol pass: remove, invert about average, restore.
/// Conserves the total ball count.
Wheel ant_iteration(Wheel w);

/// One protocol pass in the reduced (beta, gamma) coordinates:
///   beta'  = beta * (N-2)/N
///   gamma' = gamma + 2*beta*(N-1)/N
/// Agrees with ant_iteration on the full wheel; O(1) instead of O(N).
ReducedState reduced_step(const ReducedState& s);

/// Large-N limiting dynamics: the non-target level is frozen at its starting
/// value and the target gains 2*beta per pass. Starting from beta = gamma =
/// alpha, after k steps gamma = (2k+1)*alpha and total = (N+2k)*alpha, so the
/// success probability is (2k+1)/(N+2k). Unlike the exact step this grows the
/// total; see idealized_probability.
ReducedState idealized_step(const ReducedState& s);

/// Closed form for the idealized dynamics: (2k+1)/(N+2k).
double idealized_probability(std::uint64_t n_sectors, std::uint64_t k);

/// Success probability of a reduced state: gamma / ((N-1)*beta + gamma).
double reduced_probability(const ReducedState& s);

/// Expands a reduced state back to a full wheel with the given target index.
Wheel wheel_from_reduced(const ReducedState& s, std::size_t target);

/// Rescales all counts so the total equals target_total. Probabilities are
/// unchanged.
Wheel normalize_total(Wheel w, double target_total);

/// counts[target] / total, in [0, 1].
double jackpot_probability(const Wheel& w);

/// One throw of the wheel: returns sector j with probability counts[j]/total.
/// Builds the CDF per call; for bulk sampling construct one DiscreteSampler
/// over w.counts instead.
std::size_t spin(const Wheel& w, SplitMix64& rng);

struct BruteForceResult {
    std::optional<std::size_t> found;  // winning sector, if hit
    std::uint64_t throws_used = 0;
};

/// The player's baseline: keep throwing until the winning sector shows up.
/// The search sees only a yes/no answer per throw (the sector label is tested
/// through an opaque predicate), so it cannot do better than sampling.
BruteForceResult brute_force_search(const Wheel& w, SplitMix64& rng,
                                    std::uint64_t max_throws);

struct ThresholdSearch {
    std::uint64_t k = 0;      // best step found (smallest qualifying, if reached)
    double probability = 0.0; // probability at that step
    bool reached = false;
};

/// Smallest k >= 0 whose success probability meets `threshold`, via the
/// reduced recurrence (exact) or the closed form (idealized). Independent of
/// alpha. The search is capped at k = 16*N; an unreached threshold is
/// reported with reached = false and the last (monotone best) probability.
ThresholdSearch iterations_to_threshold(std::uint64_t n_sectors, double alpha,
                                        double threshold, Mode mode);

/// Per-iteration trace of the reduced dynamics, k = 0..k_max inclusive.
AntTrace ant_trace(std::uint64_t n_sectors, double alpha, Mode mode,
                   std::uint64_t k_max);

}  // namespace qroulette::classical
