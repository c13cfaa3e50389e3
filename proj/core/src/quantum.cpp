#include "qroulette/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qroulette::quantum {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_state(const StateVector& s) {
    if (s.n_qubits < 1 || s.n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: n_qubits out of range");
    }
    if (s.amplitudes.size() != (std::size_t{1} << s.n_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count is not 2^n_qubits");
    }
}

void check_target(const StateVector& s, std::size_t target) {
    if (target >= s.amplitudes.size()) {
        throw std::invalid_argument("target state out of range");
    }
}

}  // namespace

double l2_norm(const StateVector& s) {
    double acc = 0.0;
    for (double a : s.amplitudes) acc += a * a;
    return std::sqrt(acc);
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while (r * r < n) ++r;
    return r;
}

StateVector basis_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("basis_state: n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    StateVector s{n_qubits,
                  std::vector<double>(std::size_t{1} << n_qubits, 0.0)};
    s.amplitudes[0] = 1.0;
    return s;
}

StateVector walsh_hadamard(StateVector s) {
    check_state(s);
    auto& a = s.amplitudes;
    const std::size_t n = a.size();
    for (std::size_t half = 1; half < n; half <<= 1) {
        const std::size_t stride = half << 1;
        for (std::size_t base = 0; base < n; base += stride) {
            for (std::size_t i = base; i < base + half; ++i) {
                const double x = a[i];
                const double y = a[i + half];
                a[i] = (x + y) * kInvSqrt2;
                a[i + half] = (x - y) * kInvSqrt2;
            }
        }
    }
    return s;
}

StateVector uniform_state(int n_qubits) {
    return walsh_hadamard(basis_state(n_qubits));
}

StateVector oracle_phase_flip(StateVector s, std::size_t target) {
    check_state(s);
    check_target(s, target);
    s.amplitudes[target] = -s.amplitudes[target];
    return s;
}

StateVector diffusion(StateVector s) {
    check_state(s);
    double mean = 0.0;
    for (double a : s.amplitudes) mean += a;
    mean /= static_cast<double>(s.amplitudes.size());
    for (double& a : s.amplitudes) a = 2.0 * mean - a;
    return s;
}

StateVector grover_iteration(StateVector s, std::size_t target) {
    return diffusion(oracle_phase_flip(std::move(s), target));
}

double success_probability(const StateVector& s, std::size_t target) {
    check_state(s);
    check_target(s, target);
    const double a = s.amplitudes[target];
    return a * a;
}

DiscreteSampler measurement_sampler(const StateVector& s) {
    check_state(s);
    const double norm = l2_norm(s);
    if (std::abs(norm - 1.0) > 1e-6) {
        throw std::domain_error("measure: state is not normalized");
    }
    std::vector<double> weights(s.amplitudes.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = s.amplitudes[i] * s.amplitudes[i];
    }
    return DiscreteSampler(weights);
}

std::size_t measure(const StateVector& s, SplitMix64& rng) {
    return measurement_sampler(s).sample(rng);
}

double closed_form_probability(std::uint64_t n_states, std::uint64_t k) {
    if (n_states < 2) {
        throw std::invalid_argument("closed_form_probability: need at least 2 states");
    }
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n_states)));
    const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
    return s * s;
}

ThresholdSearch iterations_to_threshold(int n_qubits, double threshold,
                                        std::size_t target) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("iterations_to_threshold: n_qubits out of range");
    }
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument(
            "iterations_to_threshold: threshold must lie in (0,1]");
    }
    const std::uint64_t n_states = std::uint64_t{1} << n_qubits;
    if (target >= n_states) {
        throw std::invalid_argument("target state out of range");
    }
    const std::uint64_t root = ceil_sqrt(n_states);
    const std::uint64_t cap = 4 * root;

    StateVector s = uniform_state(n_qubits);
    std::uint64_t best_k = 1;
    double best_p = 0.0;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        s = grover_iteration(std::move(s), target);
        const double p = success_probability(s, target);
        if (p >= threshold) {
            if (threshold == 0.5 && k > root) {
                throw std::logic_error(
                    "iterations_to_threshold: sqrt(N) step bound violated");
            }
            return ThresholdSearch{k, p, true};
        }
        if (p > best_p) {
            best_p = p;
            best_k = k;
        }
    }
    return ThresholdSearch{best_k, best_p, false};
}

GroverTrace grover_trace(int n_qubits, std::size_t target, std::uint64_t k_max) {
    StateVector s = uniform_state(n_qubits);
    check_target(s, target);
    GroverTrace trace;
    trace.reserve(static_cast<std::size_t>(k_max) + 1);
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const double a = s.amplitudes[target];
        trace.push_back(GroverTraceRecord{k, a, l2_norm(s), a * a});
        if (k < k_max) s = grover_iteration(std::move(s), target);
    }
    return trace;
}

AuditResult min_increase_audit(const GroverTrace& trace, std::uint64_t n_states) {
    if (n_states < 8) {
        throw std::invalid_argument(
            "min_increase_audit: the growth bound requires N >= 8");
    }
    const double min_step = 1.0 / std::sqrt(2.0 * static_cast<double>(n_states));
    AuditResult result;
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        const double residual_mass = 1.0 - trace[i].success_probability;
        if (residual_mass <= 0.5) continue;
        ++result.checked_pairs;
        const double gain = trace[i + 1].target_amplitude - trace[i].target_amplitude;
        if (gain < min_step - 1e-9) {
            result.pass = false;
            result.first_violation = trace[i + 1].k;
            break;
        }
    }
    return result;
}

}  // namespace qroulette::quantum
