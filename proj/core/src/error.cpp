#include "ssaas/error.hpp"

namespace ssaas {

namespace {

std::string join_violations(const std::vector<SchemaViolation>& violations) {
  std::string out = "schema violation";
  for (const auto& v : violations) {
    out += "\n  ";
    out += v.field;
    out += ": ";
    out += v.reason;
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kInvalidParams: return "InvalidParams";
    case ErrorKind::kNotNeighbor: return "NotNeighbor";
    case ErrorKind::kMissingReport: return "MissingReport";
    case ErrorKind::kUnknownNeighbor: return "UnknownNeighbor";
    case ErrorKind::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorKind::kInconsistentInputs: return "InconsistentInputs";
    case ErrorKind::kInvalidProfile: return "InvalidProfile";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kSchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

Error::Error(std::vector<SchemaViolation> violations)
    : std::runtime_error(join_violations(violations)),
      kind_(ErrorKind::kSchemaViolation),
      violations_(std::move(violations)) {}

}  // namespace ssaas
