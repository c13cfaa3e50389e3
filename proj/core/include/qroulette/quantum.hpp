#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qroulette/rng.hpp"

namespace qroulette::quantum {

/// Real-amplitude state vector over N = 2^n basis states. Every operator in
/// this engine (Walsh-Hadamard, phase flip, diffusion) is real, so complex
/// storage would be dead weight; this is a representational restriction, not
/// a general-purpose simulator.
struct StateVector {
    int n_qubits = 0;
    std::vector<double> amplitudes;  // length 2^n_qubits, unit L2 norm

    std::size_t size() const { return amplitudes.size(); }
};

struct GroverTraceRecord {
    std::uint64_t k = 0;              // iteration index, from 0
    double target_amplitude = 0.0;
    double norm = 0.0;                // L2 norm of the full state (should stay 1)
    double success_probability = 0.0; // target_amplitude^2
};
using GroverTrace = std::vector<GroverTraceRecord>;

/// Largest supported register; 2^24 amplitudes keeps memory desk-scale.
inline constexpr int kMaxQubits = 24;

/// |0...0>: amplitude 1 at index 0.
StateVector basis_state(int n_qubits);

/// n-fold tensor power of (1/sqrt(2)) [[1,1],[1,-1]], applied as the in-place
/// butterfly recursion: O(N log N) scalar operations, norm-preserving,
/// involutive.
StateVector walsh_hadamard(StateVector s);

/// Equal positive superposition, 1/sqrt(N) everywhere. Computed as
/// walsh_hadamard(basis_state(n)).
StateVector uniform_state(int n_qubits);

/// Flips the sign of the target amplitude; the oracle answers "is this the
/// marked state" by a 180-degree phase shift and reveals nothing else.
StateVector oracle_phase_flip(StateVector s, std::size_t target);

/// Inversion about the average amplitude: a -> 2*mean - a for every a.
/// Equivalent to applying D = -I + (2/N)*ones, but computed in O(N); the
/// matrix form exists only in tests. Note the 2/N coefficient: it is the only
/// choice for which D is a reflection (D^2 = I, norm preserved) and matches
/// the mean-inversion reading; the -I + (1/(2N))*ones variant sometimes
/// quoted for this operator is not an involution and does not preserve norm.
StateVector diffusion(StateVector s);

/// One search iteration: oracle phase flip, then diffusion.
StateVector grover_iteration(StateVector s, std::size_t target);

/// amplitudes[target]^2.
double success_probability(const StateVector& s, std::size_t target);

/// Samples a basis state with probability amplitude^2. Rejects states whose
/// norm deviates from 1 by more than 1e-6. Builds the CDF per call; for bulk
/// sampling use measurement_sampler.
std::size_t measure(const StateVector& s, SplitMix64& rng);

/// One-time CDF over amplitude^2 for drawing many measurements.
DiscreteSampler measurement_sampler(const StateVector& s);

/// Independent oracle for the iterated dynamics:
/// sin^2((2k+1) * arcsin(1/sqrt(N))).
double closed_form_probability(std::uint64_t n_states, std::uint64_t k);

struct ThresholdSearch {
    std::uint64_t k = 0;       // best step found (smallest qualifying, if reached)
    double probability = 0.0;  // probability at that step
    bool reached = false;
};

/// Smallest number of performed iterations k >= 1 whose success probability
/// reaches the threshold, found by iterating grover_iteration from the uniform
/// state (apply, then test; the untouched uniform state is not a candidate).
/// Thresholds up to 1/2 are always reachable and satisfy k <= ceil(sqrt(N));
/// higher thresholds may overshoot, in which case the result carries
/// reached = false and the best step seen within the scan cap of
/// 4*ceil(sqrt(N)).
ThresholdSearch iterations_to_threshold(int n_qubits, double threshold,
                                        std::size_t target = 0);

/// Per-iteration trace from the uniform state, k = 0..k_max inclusive.
GroverTrace grover_trace(int n_qubits, std::size_t target, std::uint64_t k_max);

struct AuditResult {
    bool pass = true;
    std::optional<std::uint64_t> first_violation;  // step k that fell short
    std::uint64_t checked_pairs = 0;
};

/// Verifies the per-step growth guarantee along a trace: whenever the
/// non-target probability mass X^2 = 1 - p_k still exceeds 1/2, the target
/// amplitude must grow by at least 1/sqrt(2N) (minus 1e-9 slack) in the next
/// step. The guarantee's algebra needs 2/N <= 1/sqrt(2N), so N >= 8 is
/// required. Failure is reported as data, not thrown.
///
/// The bound holds on the growth phase only, i.e. for traces that stop at the
/// first threshold crossing. A trace continued past the amplitude peak shrinks
/// back through the X^2 > 1/2 region and those pairs are reported as
/// violations.
AuditResult min_increase_audit(const GroverTrace& trace, std::uint64_t n_states);

/// ceil(sqrt(n)) computed exactly in integers.
std::uint64_t ceil_sqrt(std::uint64_t n);

/// L2 norm of the amplitude vector.
double l2_norm(const StateVector& s);

}  // namespace qroulette::quantum
