#include "ssaas/report_csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ssaas/error.hpp"

namespace ssaas {

std::string format_number(double value) {
  if (!std::isfinite(value)) return {};
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.9g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_trace_csv(std::ostream& out, const ExperimentReport& report) {
  out << kTraceCsvHeader << '\n';
  for (std::size_t r = 0; r < report.runs.size(); ++r) {
    const ConsensusRun& run = report.runs[r];
    const std::size_t run_id = report.summaries.at(r).run_id;
    for (std::size_t k = 0; k < run.values.size(); ++k) {
      for (NodeId j = 0; j < run.attacker.size(); ++j) {
        out << run_id << ',' << k << ',' << j << ','
            << (run.attacker[j] ? "attacker" : "honest") << ','
            << format_number(run.values[k][j]) << ','
            << format_number(run.reported[k][j]) << ','
            << format_number(run.min_trust_toward(k, j)) << '\n';
      }
    }
  }
}

void write_summary_csv(std::ostream& out, const ExperimentReport& report) {
  out << kSummaryCsvHeader << '\n';
  for (const RunSummary& s : report.summaries) {
    out << s.run_id << ',' << (s.converged ? "true" : "false") << ','
        << s.iterations << ',' << to_string(s.decision) << ','
        << to_string(s.ground_truth) << ',' << format_number(s.x_star_db)
        << '\n';
  }
}

void write_availability_csv(std::ostream& out, const ExperimentReport& report) {
  out << kAvailabilityCsvHeader << '\n';
  for (const auto& p : report.availability) {
    out << format_number(p.p_av) << ',' << to_string(p.mode) << ','
        << format_number(p.p_success) << ','
        << format_number(p.analytic_p_success) << '\n';
  }
}

void write_latency_csv(std::ostream& out, const ExperimentReport& report) {
  out << kLatencyCsvHeader << '\n';
  for (const auto& p : report.latency) {
    out << p.vm_count << ',' << to_string(p.kind) << ','
        << format_number(p.latency_ms) << '\n';
  }
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void bad_row(std::size_t line_no, std::string_view why) {
  throw Error(ErrorKind::kParseError, "summary.csv line " +
                                          std::to_string(line_no) + ": " +
                                          std::string(why));
}

std::size_t parse_count(std::string_view f, std::size_t line_no) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc{} || ptr != f.data() + f.size() || f.empty())
    bad_row(line_no, "expected an unsigned integer");
  return v;
}

Decision parse_decision(std::string_view f, std::size_t line_no) {
  if (f == "present") return Decision::kPresent;
  if (f == "absent") return Decision::kAbsent;
  if (f == "undecided") return Decision::kUndecided;
  bad_row(line_no, "unknown decision");
}

double parse_real(std::string_view f, std::size_t line_no) {
  const std::string s(f);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) bad_row(line_no, "expected a number");
  return v;
}

}  // namespace

std::vector<RunSummary> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSummaryCsvHeader)
    throw Error(ErrorKind::kParseError, "summary.csv: missing or wrong header");

  std::vector<RunSummary> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 6) bad_row(line_no, "expected 6 fields");
    RunSummary s;
    s.run_id = parse_count(f[0], line_no);
    if (f[1] != "true" && f[1] != "false") bad_row(line_no, "converged must be true/false");
    s.converged = f[1] == "true";
    s.iterations = parse_count(f[2], line_no);
    s.decision = parse_decision(f[3], line_no);
    s.ground_truth = parse_decision(f[4], line_no);
    s.x_star_db = parse_real(f[5], line_no);
    rows.push_back(s);
  }
  return rows;
}

}  // namespace ssaas
