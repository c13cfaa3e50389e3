#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qroulette/classical.hpp"
#include "qroulette/quantum.hpp"

namespace qroulette::scaling {

enum class Model : std::uint8_t {
    classical_exact = 0,
    classical_idealized = 1,
    quantum = 2,
    brute_force = 3,
};

std::string_view to_string(Model m);
Model model_from_string(std::string_view name);

/// Stream id used when deriving per-task RNG streams; equals the enum value.
constexpr std::uint64_t stream_id(Model m) { return static_cast<std::uint64_t>(m); }

/// Number of seeded trials averaged for each brute-force point. Single
/// geometric draws are far too noisy for slope fitting.
inline constexpr std::uint64_t kBruteForceTrials = 1000;

enum class ReportFormat { csv, json };

struct ScalingConfig {
    int log2n_min = 1;
    int log2n_max = 1;
    std::vector<Model> models;
    double threshold = 0.5;
    std::uint64_t seed = 0;
    std::string out_path;
    ReportFormat format = ReportFormat::csv;
};

struct ScalingPoint {
    Model model = Model::classical_exact;
    std::uint64_t n = 0;
    std::uint64_t k_half = 0;
    double probability_at_k = 0.0;
};

/// A (model, N) cell whose threshold was not reached within the engine cap.
struct PointFailure {
    Model model = Model::classical_exact;
    std::uint64_t n = 0;
};

struct FitResult {
    Model model = Model::classical_exact;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t point_count = 0;
};

struct ReportMeta {
    int log2n_min = 0;
    int log2n_max = 0;
    std::vector<Model> models;
    double threshold = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t brute_force_trials = kBruteForceTrials;
};

struct ScalingReport {
    ReportMeta meta;
    std::vector<ScalingPoint> points;      // sorted by (model, N)
    std::vector<PointFailure> failures;    // sorted by (model, N)
    std::vector<FitResult> fits;           // sorted by model
};

/// Ordinary least squares through (ln n, ln k). Requires every n >= 2,
/// every k >= 1 (callers must filter k = 0 points) and at least two points.
/// r_squared is 1 for a two-point fit by construction.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& nk_points,
                     Model model);

/// Runs every requested model over N = 2^j for j in [log2n_min, log2n_max]
/// and fits a log-log line per model. Deterministic given config.seed: each
/// random task draws from a stream derived from (seed, model, N, trial).
/// Cells whose threshold is unreachable are recorded as failures and excluded
/// from the fit. Models ending up with fewer than 2 usable points get no fit.
ScalingReport run_scaling(const ScalingConfig& config);

/// Models whose fit rests on fewer than 3 usable points (including models
/// with no fit at all). A nonempty result maps to process exit code 2.
std::vector<Model> models_with_insufficient_fit(const ScalingReport& report);

enum class SampleModel : std::uint8_t { classical = 0, quantum = 1 };

/// Stream ids 4 and 5, disjoint from the scaling model ids.
constexpr std::uint64_t stream_id(SampleModel m) {
    return 4 + static_cast<std::uint64_t>(m);
}

struct FrequencyReport {
    SampleModel model = SampleModel::classical;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<double> expected;        // per-sector probabilities
    std::vector<std::uint64_t> observed; // per-sector draw counts
    double expected_target = 0.0;
    double observed_target = 0.0;        // frequency
    double max_abs_z = 0.0;
    std::size_t max_z_sector = 0;
};

/// Advances the chosen engine k iterations from the uniform start (target
/// sector/state 0), draws `samples` throws or measurements from a stream
/// derived from (seed, model, N, k), and compares empirical frequencies with
/// the engine's distribution. z-scores use the binomial sigma per sector;
/// sectors with expected probability exactly 0 or 1 count as violations only
/// when the observation disagrees. Requires samples >= 1000 and, for the
/// quantum model, N a power of two.
FrequencyReport monte_carlo_validation(SampleModel model, std::uint64_t n,
                                       std::uint64_t k, std::uint64_t samples,
                                       std::uint64_t seed);

}  // namespace qroulette::scaling
