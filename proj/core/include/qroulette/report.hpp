#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qroulette/scaling.hpp"

namespace qroulette::scaling {

/// File-system failure carrying the offending path in its message.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed report text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixed-point formatting used everywhere a real number is emitted:
/// nine fractional digits, C locale, no negative zero.
std::string format_real(double value);

/// Renders a report to text. Output is byte-identical for identical reports:
/// sorted keys, format_real for reals, LF line terminators.
///
/// CSV layout: header `model,N,k_half,probability_at_k`, one row per point,
/// then `#fit,model,slope,intercept,r_squared` rows, then (only when present)
/// `#fail,model,N` rows. The CSV carries no run metadata; JSON does.
std::string render_report(const ScalingReport& report, ReportFormat format);

/// Inverse of render_report. CSV has no metadata section, so a report parsed
/// from CSV carries a default-initialized meta block.
ScalingReport parse_report(const std::string& text, ReportFormat format);

/// Renders and writes a report; throws IoError on filesystem failure.
void emit_report(const ScalingReport& report, ReportFormat format,
                 const std::filesystem::path& path);

/// Per-iteration trace, CSV schema `k,target_weight,total_or_norm,probability`.
std::string render_trace_csv(const classical::AntTrace& trace);
std::string render_trace_csv(const quantum::GroverTrace& trace);

/// Human-readable frequency report; includes the per-sector table for N <= 32.
std::string render_frequency_report(const FrequencyReport& report);

/// Writes text to path, creating parent directories; throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qroulette::scaling
