#pragma once

#include <cstdint>
#include <string>

#include "aperylab/congruences.hpp"

namespace aperylab {

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_report_format(const std::string& name);  // throws std::invalid_argument

struct ReportMeta {
    std::string tool = "aperylab";
    std::string version;
    std::string engine;
    std::string statements;  // selection as requested
    std::uint64_t prime_lo = 0;
    std::uint64_t prime_hi = 0;
    bool strict = false;
    int jobs = 1;
    std::string timestamp;  // RFC-3339, UTC
    long long total_micros = 0;
};

struct Report {
    ReportMeta meta;
    SweepResult sweep;

    // Failure/error rows that gate the exit code: proven statements always,
    // draft statements only under strict.
    long long required_failures() const;
};

// Row fields are deterministic for a fixed run configuration: ordering is
// (statement, params, prime) and per-row micros is pinned to zero so output
// bytes do not depend on wall time or worker count (wall time is reported
// once in meta, outside the rows section).
std::string render_json(const Report& report);
std::string render_csv(const Report& report);
std::string render_text(const Report& report);
std::string render(const Report& report, ReportFormat format);

// Renders and writes to `destination` ("-" for stdout); returns bytes written.
std::size_t write_report(const Report& report, ReportFormat format,
                         const std::string& destination);

std::string rfc3339_utc_now();

}  // namespace aperylab
