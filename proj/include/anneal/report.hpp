#pragma once

#include <string>

#include <json.hpp>

#include "anneal/annealer.hpp"
#include "anneal/bench.hpp"

namespace anneal {

/// Structured report with a config echo; keys are emitted in sorted order
/// so that emit -> parse -> re-emit is byte identical.
nlohmann::json report_to_json(RunReport const& report);
nlohmann::json summary_to_json(BenchSummary const& summary);

/// Trace CSV: one row per best-cost update with the columns
/// generated, accepted, best_cost, current_cost, T_accept, max_param_T.
std::string trace_to_csv(RunReport const& report);

/// Sample-log CSV: generated_index, point..., cost, g, p_accept, accepted.
std::string samples_to_csv(RunReport const& report);

/// Per-seed CSV: seed, generated_to_target, best_cost, wall_seconds.
std::string summary_to_csv(BenchSummary const& summary);

enum class ReportFormat { Json, Csv };

std::string emit_report(RunReport const& report, ReportFormat format);
std::string emit_report(BenchSummary const& summary, ReportFormat format);

/// Writes content to path ("-" = stdout); throws on an unwritable sink.
void write_text(std::string const& path, std::string const& content);

}  // namespace anneal
