// qroulette: iteration-count scaling of weighted-roulette search vs Grover
// amplitude iteration. Subcommands: classical, quantum, scaling, sample.
//
// Exit codes: 0 success, 1 usage error, 2 model failure (threshold not
// reached, or a scaling model left with fewer than 3 fit points), 3 I/O error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qroulette/classical.hpp"
#include "qroulette/quantum.hpp"
#include "qroulette/report.hpp"
#include "qroulette/scaling.hpp"

namespace {

namespace cls = qroulette::classical;
namespace qtm = qroulette::quantum;
namespace scl = qroulette::scaling;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitModelFailure = 2;
constexpr int kExitIo = 3;

using scl::format_real;

struct ClassicalArgs {
    std::uint64_t n = 0;
    std::string mode = "exact";
    double threshold = 0.5;
    double alpha = 1.0;
    std::string trace_path;
};

int run_classical(const ClassicalArgs& args) {
    const auto mode =
        args.mode == "exact" ? cls::Mode::exact : cls::Mode::idealized;
    const auto result =
        cls::iterations_to_threshold(args.n, args.alpha, args.threshold, mode);
    std::cout << "model=classical-" << args.mode << " n=" << args.n
              << " alpha=" << format_real(args.alpha)
              << " threshold=" << format_real(args.threshold)
              << " k_half=" << result.k
              << " probability_at_k=" << format_real(result.probability)
              << " reached=" << (result.reached ? "true" : "false") << "\n";
    if (!args.trace_path.empty()) {
        const auto trace = cls::ant_trace(args.n, args.alpha, mode, result.k);
        scl::write_text_file(args.trace_path, scl::render_trace_csv(trace));
    }
    return result.reached ? kExitOk : kExitModelFailure;
}

struct QuantumArgs {
    int log2n = 0;
    double threshold = 0.5;
    std::string trace_path;
    bool audit = false;
};

int run_quantum(const QuantumArgs& args) {
    const std::uint64_t n = std::uint64_t{1} << args.log2n;
    const auto result = qtm::iterations_to_threshold(args.log2n, args.threshold);
    std::cout << "model=quantum n=" << n
              << " threshold=" << format_real(args.threshold)
              << " k_half=" << result.k
              << " probability_at_k=" << format_real(result.probability)
              << " reached=" << (result.reached ? "true" : "false")
              << " sqrt_bound=" << qtm::ceil_sqrt(n) << "\n";
    if (args.audit || !args.trace_path.empty()) {
        const auto trace = qtm::grover_trace(args.log2n, 0, result.k);
        if (!args.trace_path.empty()) {
            scl::write_text_file(args.trace_path, scl::render_trace_csv(trace));
        }
        if (args.audit) {
            const auto audit = qtm::min_increase_audit(trace, n);
            std::cout << "audit=" << (audit.pass ? "pass" : "fail")
                      << " checked_pairs=" << audit.checked_pairs;
            if (audit.first_violation) {
                std::cout << " first_violation=" << *audit.first_violation;
            }
            std::cout << "\n";
        }
    }
    return result.reached ? kExitOk : kExitModelFailure;
}

struct ScalingArgs {
    int log2n_min = 0;
    int log2n_max = 0;
    std::string models;
    double threshold = 0.5;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
};

std::vector<scl::Model> parse_models(const std::string& csv) {
    std::vector<scl::Model> models;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t pos = csv.find(',', start);
        const std::string token =
            csv.substr(start, pos == std::string::npos ? pos : pos - start);
        if (!token.empty()) models.push_back(scl::model_from_string(token));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return models;
}

int run_scaling_cmd(const ScalingArgs& args) {
    scl::ScalingConfig config;
    config.log2n_min = args.log2n_min;
    config.log2n_max = args.log2n_max;
    config.models = parse_models(args.models);
    config.threshold = args.threshold;
    config.seed = args.seed;
    config.out_path = args.out_path;
    config.format =
        args.format == "json" ? scl::ReportFormat::json : scl::ReportFormat::csv;

    const auto report = scl::run_scaling(config);
    scl::emit_report(report, config.format, config.out_path);

    std::cout << "wrote " << config.out_path << " format=" << args.format
              << " points=" << report.points.size()
              << " fits=" << report.fits.size()
              << " failures=" << report.failures.size() << "\n";
    for (const auto& fit : report.fits) {
        std::cout << "fit model=" << scl::to_string(fit.model)
                  << " slope=" << format_real(fit.slope)
                  << " intercept=" << format_real(fit.intercept)
                  << " r_squared=" << format_real(fit.r_squared)
                  << " points=" << fit.point_count << "\n";
    }
    const auto deficient = scl::models_with_insufficient_fit(report);
    for (const auto model : deficient) {
        std::cerr << "model " << scl::to_string(model)
                  << " has fewer than 3 usable points\n";
    }
    return deficient.empty() ? kExitOk : kExitModelFailure;
}

struct SampleArgs {
    std::string model = "classical";
    int log2n = 0;
    std::uint64_t k = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

int run_sample(const SampleArgs& args) {
    const auto model = args.model == "classical" ? scl::SampleModel::classical
                                                 : scl::SampleModel::quantum;
    const std::uint64_t n = std::uint64_t{1} << args.log2n;
    const auto report =
        scl::monte_carlo_validation(model, n, args.k, args.samples, args.seed);
    std::cout << scl::render_frequency_report(report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Dual-engine search-scaling simulator: a weighted-roulette wheel "
        "searched by repeated inversion about the average, next to Grover's "
        "amplitude iteration, with an O(N) vs O(sqrt(N)) measurement harness."};
    app.require_subcommand(1);

    ClassicalArgs classical_args;
    auto* classical = app.add_subcommand(
        "classical", "Iterations to reach the success threshold on the wheel");
    classical->add_option("--n", classical_args.n, "Number of sectors (any N >= 2)")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
    classical->add_option("--mode", classical_args.mode, "Dynamics: exact or idealized")
        ->check(CLI::IsMember({"exact", "idealized"}))
        ->capture_default_str();
    classical->add_option("--threshold", classical_args.threshold, "Success threshold in (0,1)")
        ->capture_default_str();
    classical->add_option("--alpha", classical_args.alpha, "Initial balls per sector")
        ->capture_default_str();
    classical->add_option("--trace", classical_args.trace_path, "Write per-iteration trace CSV here");

    QuantumArgs quantum_args;
    auto* quantum = app.add_subcommand(
        "quantum", "Iterations to reach the success threshold with amplitude iteration");
    quantum->add_option("--log2n", quantum_args.log2n, "Register size n, N = 2^n")
        ->required()
        ->check(CLI::Range(1, qtm::kMaxQubits));
    quantum->add_option("--threshold", quantum_args.threshold, "Success threshold in (0,1]")
        ->capture_default_str();
    quantum->add_option("--trace", quantum_args.trace_path, "Write per-iteration trace CSV here");
    quantum->add_flag("--audit-min-increase", quantum_args.audit,
                      "Check the per-step amplitude growth bound along the trace");

    ScalingArgs scaling_args;
    auto* scaling = app.add_subcommand(
        "scaling", "Sweep N = 2^j, fit log-log slopes, write a CSV/JSON report");
    scaling->add_option("--log2n-min", scaling_args.log2n_min, "Smallest exponent j")
        ->required()
        ->check(CLI::Range(1, 20));
    scaling->add_option("--log2n-max", scaling_args.log2n_max, "Largest exponent j")
        ->required()
        ->check(CLI::Range(1, 20));
    scaling->add_option("--models", scaling_args.models,
                        "Comma-separated subset of classical-exact,"
                        "classical-idealized,quantum,brute-force")
        ->required();
    scaling->add_option("--threshold", scaling_args.threshold, "Success threshold in (0,1)")
        ->capture_default_str();
    scaling->add_option("--seed", scaling_args.seed, "Base seed for all random draws")
        ->capture_default_str();
    scaling->add_option("--out", scaling_args.out_path, "Report output path")->required();
    scaling->add_option("--format", scaling_args.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    SampleArgs sample_args;
    auto* sample = app.add_subcommand(
        "sample", "Draw seeded throws/measurements after k iterations and "
                  "compare with the engine distribution");
    sample->add_option("--model", sample_args.model, "classical or quantum")
        ->required()
        ->check(CLI::IsMember({"classical", "quantum"}));
    sample->add_option("--log2n", sample_args.log2n, "Register size n, N = 2^n")
        ->required()
        ->check(CLI::Range(1, 20));
    sample->add_option("--k", sample_args.k, "Iterations to advance before sampling")
        ->required();
    sample->add_option("--samples", sample_args.samples, "Number of draws (>= 1000)")
        ->required();
    sample->add_option("--seed", sample_args.seed, "Base seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classical->parsed()) return run_classical(classical_args);
        if (quantum->parsed()) return run_quantum(quantum_args);
        if (scaling->parsed()) return run_scaling_cmd(scaling_args);
        return run_sample(sample_args);
    } catch (const scl::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
