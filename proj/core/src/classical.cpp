#include "qroulette/classical.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qroulette::classical {

namespace {

void check_wheel(const Wheel& w) {
    if (w.counts.empty()) {
        throw std::invalid_argument("Wheel: no sectors");
    }
    if (w.target >= w.counts.size()) {
        throw std::invalid_argument("Wheel: target sector out of range");
    }
    for (double c : w.counts) {
        if (!std::isfinite(c) || c < 0.0) {
            throw std::invalid_argument("Wheel: counts must be finite and nonnegative");
        }
    }
}

void check_reduced(const ReducedState& s) {
    if (s.n_sectors < 2) {
        throw std::invalid_argument("ReducedState: need at least 2 sectors");
    }
    if (!(s.beta >= 0.0) || !(s.gamma >= 0.0)) {
        throw std::invalid_argument("ReducedState: beta and gamma must be nonnegative");
    }
}

}  // namespace

double Wheel::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0.0);
}

Wheel new_uniform_wheel(std::size_t n_sectors, double alpha, std::size_t target) {
    if (n_sectors < 2) {
        throw std::invalid_argument("new_uniform_wheel: need at least 2 sectors");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("new_uniform_wheel: alpha must be positive");
    }
    if (target >= n_sectors) {
        throw std::invalid_argument("new_uniform_wheel: target sector out of range");
    }
    return Wheel{std::vector<double>(n_sectors, alpha), target};
}

Removal remove_jackpot(Wheel w) {
    check_wheel(w);
    double removed = w.counts[w.target];
    w.counts[w.target] = 0.0;
    return Removal{std::move(w), removed};
}

Wheel invert_about_average(Wheel w) {
    check_wheel(w);
    const double n = static_cast<double>(w.counts.size());
    const double avg = w.total() / n;
    for (std::size_t j = 0; j < w.counts.size(); ++j) {
        double c = 2.0 * avg - w.counts[j];
        if (c < 0.0) {
            // Tolerate rounding-level undershoot, reject genuine negatives.
            if (c < -1e-12 * (2.0 * avg + w.counts[j] + 1.0)) {
                throw std::domain_error(
                    "invert_about_average: sector " + std::to_string(j) +
                    " would drop below zero balls");
            }
            c = 0.0;
        }
        w.counts[j] = c;
    }
    return w;
}

Wheel restore_balls(Wheel w, double removed) {
    check_wheel(w);
    if (!(removed >= 0.0) || !std::isfinite(removed)) {
        throw std::invalid_argument("restore_balls: removed must be nonnegative");
    }
    w.counts[w.target] += removed;
    return w;
}

Wheel ant_iteration(Wheel w) {
    auto [emptied, removed] = remove_jackpot(std::move(w));
    return restore_balls(invert_about_average(std::move(emptied)), removed);
}

ReducedState reduced_step(const ReducedState& s) {
    check_reduced(s);
    const double n = static_cast<double>(s.n_sectors);
    return ReducedState{
        s.beta * ((n - 2.0) / n),
        s.gamma + 2.0 * s.beta * ((n - 1.0) / n),
        s.n_sectors,
    };
}

ReducedState idealized_step(const ReducedState& s) {
    check_reduced(s);
    return ReducedState{s.beta, s.gamma + 2.0 * s.beta, s.n_sectors};
}

double idealized_probability(std::uint64_t n_sectors, std::uint64_t k) {
    if (n_sectors < 2) {
        throw std::invalid_argument("idealized_probability: need at least 2 sectors");
    }
    const double kk = static_cast<double>(k);
    return (2.0 * kk + 1.0) / (static_cast<double>(n_sectors) + 2.0 * kk);
}

double reduced_probability(const ReducedState& s) {
    check_reduced(s);
    const double total =
        static_cast<double>(s.n_sectors - 1) * s.beta + s.gamma;
    if (!(total > 0.0)) {
        throw std::domain_error("reduced_probability: empty state");
    }
    return s.gamma / total;
}

Wheel wheel_from_reduced(const ReducedState& s, std::size_t target) {
    check_reduced(s);
    if (target >= s.n_sectors) {
        throw std::invalid_argument("wheel_from_reduced: target sector out of range");
    }
    Wheel w{std::vector<double>(static_cast<std::size_t>(s.n_sectors), s.beta),
            target};
    w.counts[target] = s.gamma;
    return w;
}

Wheel normalize_total(Wheel w, double target_total) {
    check_wheel(w);
    if (!(target_total > 0.0) || !std::isfinite(target_total)) {
        throw std::invalid_argument("normalize_total: target_total must be positive");
    }
    const double total = w.total();
    if (!(total > 0.0)) {
        throw std::domain_error("normalize_total: wheel holds no balls");
    }
    const double scale = target_total / total;
    for (double& c : w.counts) c *= scale;
    return w;
}

double jackpot_probability(const Wheel& w) {
    check_wheel(w);
    const double total = w.total();
    if (!(total > 0.0)) {
        throw std::domain_error("jackpot_probability: wheel holds no balls");
    }
    return w.counts[w.target] / total;
}

std::size_t spin(const Wheel& w, SplitMix64& rng) {
    check_wheel(w);
    return DiscreteSampler(w.counts).sample(rng);
}

BruteForceResult brute_force_search(const Wheel& w, SplitMix64& rng,
                                    std::uint64_t max_throws) {
    check_wheel(w);
    if (max_throws < 1) {
        throw std::invalid_argument("brute_force_search: max_throws must be >= 1");
    }
    // The player only learns "jackpot or not" per throw.
    const std::size_t hidden_target = w.target;
    const auto is_jackpot = [hidden_target](std::size_t sector) {
        return sector == hidden_target;
    };
    DiscreteSampler sampler(w.counts);
    for (std::uint64_t t = 1; t <= max_throws; ++t) {
        const std::size_t sector = sampler.sample(rng);
        if (is_jackpot(sector)) {
            return BruteForceResult{sector, t};
        }
    }
    return BruteForceResult{std::nullopt, max_throws};
}

ThresholdSearch iterations_to_threshold(std::uint64_t n_sectors, double alpha,
                                        double threshold, Mode mode) {
    if (n_sectors < 2) {
        throw std::invalid_argument("iterations_to_threshold: need at least 2 sectors");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("iterations_to_threshold: alpha must be positive");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("iterations_to_threshold: threshold must lie in (0,1)");
    }
    const std::uint64_t cap = 16 * n_sectors;  // bounds runtime near threshold 1
    double p = 0.0;
    if (mode == Mode::exact) {
        ReducedState s{alpha, alpha, n_sectors};
        for (std::uint64_t k = 0; k <= cap; ++k) {
            p = reduced_probability(s);
            if (p >= threshold) return ThresholdSearch{k, p, true};
            s = reduced_step(s);
        }
    } else {
        for (std::uint64_t k = 0; k <= cap; ++k) {
            p = idealized_probability(n_sectors, k);
            if (p >= threshold) return ThresholdSearch{k, p, true};
        }
    }
    // Probability is monotone in k for both modes, so the cap is the best step.
    return ThresholdSearch{cap, p, false};
}

AntTrace ant_trace(std::uint64_t n_sectors, double alpha, Mode mode,
                   std::uint64_t k_max) {
    if (n_sectors < 2) {
        throw std::invalid_argument("ant_trace: need at least 2 sectors");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("ant_trace: alpha must be positive");
    }
    AntTrace trace;
    trace.reserve(static_cast<std::size_t>(k_max) + 1);
    ReducedState s{alpha, alpha, n_sectors};
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const double total =
            static_cast<double>(n_sectors - 1) * s.beta + s.gamma;
        trace.push_back(AntTraceRecord{k, s.gamma, total, s.gamma / total});
        s = (mode == Mode::exact) ? reduced_step(s) : idealized_step(s);
    }
    return trace;
}

}  // namespace qroulette::classical
