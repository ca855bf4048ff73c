#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ssaas/scenario.hpp"

namespace ssaas {

inline constexpr std::string_view kTraceCsvHeader =
    "run_id,iteration,node_id,role,value_db,reported_db,min_trust_toward_node";
inline constexpr std::string_view kSummaryCsvHeader =
    "run_id,converged,iterations,decision,ground_truth,x_star_db";
inline constexpr std::string_view kAvailabilityCsvHeader =
    "p_av,mode,p_success,analytic_p_success";
inline constexpr std::string_view kLatencyCsvHeader =
    "vm_count,cloud_kind,latency_ms";

/// printf "%.9g"; non-finite values become an empty field.
std::string format_number(double value);

/// One row per (run, iteration, node). min_trust_toward_node is the lowest
/// trust any honest neighbor holds toward the node at that iteration, empty
/// when the node has no honest neighbor.
void write_trace_csv(std::ostream& out, const ExperimentReport& report);
void write_summary_csv(std::ostream& out, const ExperimentReport& report);
void write_availability_csv(std::ostream& out, const ExperimentReport& report);
void write_latency_csv(std::ostream& out, const ExperimentReport& report);

/// Parses summary.csv back. Throws Error(kParseError) on a bad header or row.
std::vector<RunSummary> read_summary_csv(std::istream& in);

}  // namespace ssaas
