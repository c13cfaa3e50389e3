#include "qroulette/scaling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qroulette::scaling {

std::string_view to_string(Model m) {
    switch (m) {
        case Model::classical_exact: return "classical-exact";
        case Model::classical_idealized: return "classical-idealized";
        case Model::quantum: return "quantum";
        case Model::brute_force: return "brute-force";
    }
    throw std::invalid_argument("to_string: unknown model");
}

Model model_from_string(std::string_view name) {
    if (name == "classical-exact") return Model::classical_exact;
    if (name == "classical-idealized") return Model::classical_idealized;
    if (name == "quantum") return Model::quantum;
    if (name == "brute-force") return Model::brute_force;
    throw std::invalid_argument("unknown model '" + std::string(name) +
                                "' (expected classical-exact, classical-idealized, "
                                "quantum or brute-force)");
}

FitResult fit_loglog(const std::vector<std::pair<double, double>>& nk_points,
                     Model model) {
    if (nk_points.size() < 2) {
        throw std::invalid_argument("fit_loglog: need at least 2 points");
    }
    std::vector<double> xs, ys;
    xs.reserve(nk_points.size());
    ys.reserve(nk_points.size());
    for (const auto& [n, k] : nk_points) {
        if (!(n >= 2.0)) {
            throw std::invalid_argument("fit_loglog: every n must be >= 2");
        }
        if (!(k >= 1.0)) {
            throw std::invalid_argument("fit_loglog: every k must be >= 1");
        }
        xs.push_back(std::log(n));
        ys.push_back(std::log(k));
    }
    const double count = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= count;
    mean_y /= count;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    if (!(sxx > 0.0)) {
        throw std::invalid_argument("fit_loglog: all n values coincide");
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double fitted = intercept + slope * xs[i];
        ss_res += (ys[i] - fitted) * (ys[i] - fitted);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    double r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    r_squared = std::clamp(r_squared, 0.0, 1.0);

    return FitResult{model, slope, intercept, r_squared, nk_points.size()};
}

namespace {

void check_config(const ScalingConfig& config) {
    if (config.log2n_min < 1 || config.log2n_min > config.log2n_max ||
        config.log2n_max > 20) {
        throw std::invalid_argument(
            "run_scaling: need 1 <= log2n-min <= log2n-max <= 20");
    }
    if (config.models.empty()) {
        throw std::invalid_argument("run_scaling: model set must be nonempty");
    }
    if (!(config.threshold > 0.0 && config.threshold < 1.0)) {
        throw std::invalid_argument("run_scaling: threshold must lie in (0,1)");
    }
}

/// Seeded-trial mean of throws needed to hit the target on a uniform wheel.
ScalingPoint brute_force_point(std::uint64_t n, std::uint64_t seed) {
    const auto wheel =
        classical::new_uniform_wheel(static_cast<std::size_t>(n), 1.0, 0);
    const std::uint64_t max_throws = 64 * n;
    double throw_sum = 0.0;
    std::uint64_t hits = 0;
    for (std::uint64_t trial = 0; trial < kBruteForceTrials; ++trial) {
        auto rng = derive_stream(
            seed, {stream_id(Model::brute_force), n, trial});
        const auto result = classical::brute_force_search(wheel, rng, max_throws);
        throw_sum += static_cast<double>(result.throws_used);
        if (result.found) ++hits;
    }
    const double mean = throw_sum / static_cast<double>(kBruteForceTrials);
    const double found_fraction =
        static_cast<double>(hits) / static_cast<double>(kBruteForceTrials);
    return ScalingPoint{Model::brute_force, n,
                        static_cast<std::uint64_t>(std::llround(mean)),
                        found_fraction};
}

}  // namespace

ScalingReport run_scaling(const ScalingConfig& config) {
    check_config(config);

    // Canonical model order: enum order, duplicates dropped.
    std::vector<Model> models = config.models;
    std::sort(models.begin(), models.end());
    models.erase(std::unique(models.begin(), models.end()), models.end());

    ScalingReport report;
    report.meta = ReportMeta{config.log2n_min, config.log2n_max, models,
                             config.threshold, config.seed, kBruteForceTrials};

    for (Model model : models) {
        std::vector<std::pair<double, double>> fit_points;
        for (int j = config.log2n_min; j <= config.log2n_max; ++j) {
            const std::uint64_t n = std::uint64_t{1} << j;
            ScalingPoint point{model, n, 0, 0.0};
            bool reached = true;
            switch (model) {
                case Model::classical_exact:
                case Model::classical_idealized: {
                    const auto r = classical::iterations_to_threshold(
                        n, 1.0, config.threshold,
                        model == Model::classical_exact
                            ? classical::Mode::exact
                            : classical::Mode::idealized);
                    point.k_half = r.k;
                    point.probability_at_k = r.probability;
                    reached = r.reached;
                    break;
                }
                case Model::quantum: {
                    const auto r =
                        quantum::iterations_to_threshold(j, config.threshold);
                    point.k_half = r.k;
                    point.probability_at_k = r.probability;
                    reached = r.reached;
                    break;
                }
                case Model::brute_force:
                    point = brute_force_point(n, config.seed);
                    break;
            }
            if (!reached) {
                report.failures.push_back(PointFailure{model, n});
                continue;
            }
            report.points.push_back(point);
            if (point.k_half >= 1) {
                fit_points.emplace_back(static_cast<double>(point.n),
                                        static_cast<double>(point.k_half));
            }
        }
        if (fit_points.size() >= 2) {
            report.fits.push_back(fit_loglog(fit_points, model));
        }
    }
    return report;
}

std::vector<Model> models_with_insufficient_fit(const ScalingReport& report) {
    std::vector<Model> deficient;
    for (Model model : report.meta.models) {
        std::size_t usable = 0;
        for (const auto& p : report.points) {
            if (p.model == model && p.k_half >= 1) ++usable;
        }
        if (usable < 3) deficient.push_back(model);
    }
    return deficient;
}

FrequencyReport monte_carlo_validation(SampleModel model, std::uint64_t n,
                                       std::uint64_t k, std::uint64_t samples,
                                       std::uint64_t seed) {
    if (samples < 1000) {
        throw std::invalid_argument("monte_carlo_validation: need samples >= 1000");
    }

    // Target distribution after k iterations, target index 0.
    std::vector<double> expected;
    if (model == SampleModel::quantum) {
        if (!std::has_single_bit(n) || n < 2 ||
            n > (std::uint64_t{1} << quantum::kMaxQubits)) {
            throw std::invalid_argument(
                "monte_carlo_validation: quantum model needs N = 2^j");
        }
        const int n_qubits = std::bit_width(n) - 1;
        auto state = quantum::uniform_state(n_qubits);
        for (std::uint64_t i = 0; i < k; ++i) {
            state = quantum::grover_iteration(std::move(state), 0);
        }
        expected.resize(state.size());
        for (std::size_t j = 0; j < state.size(); ++j) {
            expected[j] = state.amplitudes[j] * state.amplitudes[j];
        }
    } else {
        if (n < 2) {
            throw std::invalid_argument("monte_carlo_validation: need N >= 2");
        }
        classical::ReducedState s{1.0, 1.0, n};
        for (std::uint64_t i = 0; i < k; ++i) s = classical::reduced_step(s);
        const auto wheel = classical::wheel_from_reduced(s, 0);
        const double total = wheel.total();
        expected.resize(wheel.counts.size());
        for (std::size_t j = 0; j < wheel.counts.size(); ++j) {
            expected[j] = wheel.counts[j] / total;
        }
    }

    DiscreteSampler sampler(expected);
    auto rng = derive_stream(seed, {stream_id(model), n, k});
    std::vector<std::uint64_t> observed(expected.size(), 0);
    for (std::uint64_t i = 0; i < samples; ++i) {
        ++observed[sampler.sample(rng)];
    }

    FrequencyReport report;
    report.model = model;
    report.n = n;
    report.k = k;
    report.samples = samples;
    report.seed = seed;
    report.expected_target = expected[0];
    report.observed_target =
        static_cast<double>(observed[0]) / static_cast<double>(samples);

    const double ns = static_cast<double>(samples);
    for (std::size_t j = 0; j < expected.size(); ++j) {
        const double p = expected[j];
        double z = 0.0;
        if (p > 0.0 && p < 1.0) {
            z = (static_cast<double>(observed[j]) - ns * p) /
                std::sqrt(ns * p * (1.0 - p));
        } else {
            // Degenerate sector: any disagreement is an outright violation.
            const bool agrees = (p == 0.0) ? (observed[j] == 0)
                                           : (observed[j] == samples);
            z = agrees ? 0.0 : std::numeric_limits<double>::infinity();
        }
        if (std::abs(z) > report.max_abs_z) {
            report.max_abs_z = std::abs(z);
            report.max_z_sector = j;
        }
    }
    report.expected = std::move(expected);
    report.observed = std::move(observed);
    return report;
}

}  // namespace qroulette::scaling
