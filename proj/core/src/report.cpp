#include "qroulette/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace qroulette::scaling {

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", value);
    // collapse negative zero, including values that round to it
    if (buf[0] == '-' && std::string_view(buf + 1) == "0.000000000") return buf + 1;
    return buf;
}

namespace {

std::string format_u64(std::uint64_t value) { return std::to_string(value); }

// ---- CSV ----

std::string render_csv(const ScalingReport& report) {
    std::string out = "model,N,k_half,probability_at_k\n";
    for (const auto& p : report.points) {
        out += std::string(to_string(p.model)) + ',' + format_u64(p.n) + ',' +
               format_u64(p.k_half) + ',' + format_real(p.probability_at_k) + '\n';
    }
    for (const auto& f : report.fits) {
        out += "#fit," + std::string(to_string(f.model)) + ',' +
               format_real(f.slope) + ',' + format_real(f.intercept) + ',' +
               format_real(f.r_squared) + '\n';
    }
    for (const auto& f : report.failures) {
        out += "#fail," + std::string(to_string(f.model)) + ',' +
               format_u64(f.n) + '\n';
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::uint64_t parse_u64(const std::string& s) {
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ParseError("report: bad integer field '" + s + "'");
    }
}

double parse_real(const std::string& s) {
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw ParseError("report: bad real field '" + s + "'");
    }
}

ScalingReport parse_csv(const std::string& text) {
    ScalingReport report;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "model,N,k_half,probability_at_k") {
                throw ParseError("report: unexpected CSV header '" + line + "'");
            }
            saw_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields[0] == "#fit") {
            if (fields.size() != 5) throw ParseError("report: malformed #fit row");
            report.fits.push_back(FitResult{model_from_string(fields[1]),
                                            parse_real(fields[2]),
                                            parse_real(fields[3]),
                                            parse_real(fields[4]), 0});
        } else if (fields[0] == "#fail") {
            if (fields.size() != 3) throw ParseError("report: malformed #fail row");
            report.failures.push_back(
                PointFailure{model_from_string(fields[1]), parse_u64(fields[2])});
        } else {
            if (fields.size() != 4) throw ParseError("report: malformed data row");
            report.points.push_back(
                ScalingPoint{model_from_string(fields[0]), parse_u64(fields[1]),
                             parse_u64(fields[2]), parse_real(fields[3])});
        }
    }
    if (!saw_header) throw ParseError("report: empty CSV");
    // Fit point counts are not stored in CSV; recover them from the data rows.
    for (auto& fit : report.fits) {
        std::size_t usable = 0;
        for (const auto& p : report.points) {
            if (p.model == fit.model && p.k_half >= 1) ++usable;
        }
        fit.point_count = usable;
    }
    return report;
}

// ---- JSON ----
// Emission is hand-rolled so that reals carry the same fixed 9-digit
// formatting as the CSV and the byte stream is stable across platforms.

std::string render_json(const ScalingReport& report) {
    std::string out = "{\n";
    out += "  \"failures\": [";
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
        const auto& f = report.failures[i];
        out += (i == 0 ? "\n" : ",\n");
        out += "    {\n";
        out += "      \"model\": \"" + std::string(to_string(f.model)) + "\",\n";
        out += "      \"n\": " + format_u64(f.n) + "\n";
        out += "    }";
    }
    out += report.failures.empty() ? "],\n" : "\n  ],\n";
    out += "  \"fits\": [";
    for (std::size_t i = 0; i < report.fits.size(); ++i) {
        const auto& f = report.fits[i];
        out += (i == 0 ? "\n" : ",\n");
        out += "    {\n";
        out += "      \"intercept\": " + format_real(f.intercept) + ",\n";
        out += "      \"model\": \"" + std::string(to_string(f.model)) + "\",\n";
        out += "      \"point_count\": " + format_u64(f.point_count) + ",\n";
        out += "      \"r_squared\": " + format_real(f.r_squared) + ",\n";
        out += "      \"slope\": " + format_real(f.slope) + "\n";
        out += "    }";
    }
    out += report.fits.empty() ? "],\n" : "\n  ],\n";
    out += "  \"meta\": {\n";
    out += "    \"brute_force_trials\": " + format_u64(report.meta.brute_force_trials) + ",\n";
    out += "    \"log2n_max\": " + std::to_string(report.meta.log2n_max) + ",\n";
    out += "    \"log2n_min\": " + std::to_string(report.meta.log2n_min) + ",\n";
    out += "    \"models\": [";
    for (std::size_t i = 0; i < report.meta.models.size(); ++i) {
        out += (i == 0 ? "" : ", ");
        out += '"' + std::string(to_string(report.meta.models[i])) + '"';
    }
    out += "],\n";
    out += "    \"seed\": " + format_u64(report.meta.seed) + ",\n";
    out += "    \"threshold\": " + format_real(report.meta.threshold) + "\n";
    out += "  },\n";
    out += "  \"points\": [";
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const auto& p = report.points[i];
        out += (i == 0 ? "\n" : ",\n");
        out += "    {\n";
        out += "      \"k_half\": " + format_u64(p.k_half) + ",\n";
        out += "      \"model\": \"" + std::string(to_string(p.model)) + "\",\n";
        out += "      \"n\": " + format_u64(p.n) + ",\n";
        out += "      \"probability_at_k\": " + format_real(p.probability_at_k) + "\n";
        out += "    }";
    }
    out += report.points.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

ScalingReport parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: invalid JSON: ") + e.what());
    }
    try {
        ScalingReport report;
        const auto& meta = doc.at("meta");
        report.meta.brute_force_trials = meta.at("brute_force_trials").get<std::uint64_t>();
        report.meta.log2n_max = meta.at("log2n_max").get<int>();
        report.meta.log2n_min = meta.at("log2n_min").get<int>();
        for (const auto& m : meta.at("models")) {
            report.meta.models.push_back(model_from_string(m.get<std::string>()));
        }
        report.meta.seed = meta.at("seed").get<std::uint64_t>();
        report.meta.threshold = meta.at("threshold").get<double>();
        for (const auto& f : doc.at("failures")) {
            report.failures.push_back(PointFailure{
                model_from_string(f.at("model").get<std::string>()),
                f.at("n").get<std::uint64_t>()});
        }
        for (const auto& f : doc.at("fits")) {
            report.fits.push_back(FitResult{
                model_from_string(f.at("model").get<std::string>()),
                f.at("slope").get<double>(), f.at("intercept").get<double>(),
                f.at("r_squared").get<double>(),
                f.at("point_count").get<std::size_t>()});
        }
        for (const auto& p : doc.at("points")) {
            report.points.push_back(ScalingPoint{
                model_from_string(p.at("model").get<std::string>()),
                p.at("n").get<std::uint64_t>(),
                p.at("k_half").get<std::uint64_t>(),
                p.at("probability_at_k").get<double>()});
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: missing or mistyped field: ") + e.what());
    }
}

}  // namespace

std::string render_report(const ScalingReport& report, ReportFormat format) {
    return format == ReportFormat::csv ? render_csv(report) : render_json(report);
}

ScalingReport parse_report(const std::string& text, ReportFormat format) {
    return format == ReportFormat::csv ? parse_csv(text) : parse_json(text);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        // An existing directory is fine; a real failure surfaces on open below.
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

void emit_report(const ScalingReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
    write_text_file(path, render_report(report, format));
}

std::string render_trace_csv(const classical::AntTrace& trace) {
    std::string out = "k,target_weight,total_or_norm,probability\n";
    for (const auto& r : trace) {
        out += format_u64(r.k) + ',' + format_real(r.gamma) + ',' +
               format_real(r.total) + ',' + format_real(r.probability) + '\n';
    }
    return out;
}

std::string render_trace_csv(const quantum::GroverTrace& trace) {
    std::string out = "k,target_weight,total_or_norm,probability\n";
    for (const auto& r : trace) {
        out += format_u64(r.k) + ',' + format_real(r.target_amplitude) + ',' +
               format_real(r.norm) + ',' + format_real(r.success_probability) + '\n';
    }
    return out;
}

std::string render_frequency_report(const FrequencyReport& report) {
    const char* model_name =
        report.model == SampleModel::classical ? "classical" : "quantum";
    std::string out;
    out += "model=" + std::string(model_name) + " n=" + format_u64(report.n) +
           " k=" + format_u64(report.k) + " samples=" + format_u64(report.samples) +
           " seed=" + format_u64(report.seed) + "\n";
    out += "target_sector=0 expected=" + format_real(report.expected_target) +
           " observed=" + format_real(report.observed_target) + "\n";
    out += "max_abs_z=" + format_real(report.max_abs_z) +
           " at_sector=" + format_u64(report.max_z_sector) + "\n";
    if (report.expected.size() <= 32) {
        out += "sector,expected,observed_frequency,z\n";
        const double ns = static_cast<double>(report.samples);
        for (std::size_t j = 0; j < report.expected.size(); ++j) {
            const double p = report.expected[j];
            const double freq = static_cast<double>(report.observed[j]) / ns;
            double z = 0.0;
            if (p > 0.0 && p < 1.0) {
                z = (static_cast<double>(report.observed[j]) - ns * p) /
                    std::sqrt(ns * p * (1.0 - p));
            } else if ((p == 0.0 && report.observed[j] != 0) ||
                       (p == 1.0 && report.observed[j] != report.samples)) {
                z = std::numeric_limits<double>::infinity();
            }
            out += format_u64(j) + ',' + format_real(p) + ',' + format_real(freq) +
                   ',' + format_real(z) + '\n';
        }
    }
    return out;
}

}  // namespace qroulette::scaling
