#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssaas {

enum class ErrorKind {
  kDisconnectedGraph,
  kSelfLoop,
  kDuplicateEdge,
  kIndexOutOfRange,
  kInvalidParams,
  kNotNeighbor,
  kMissingReport,
  kUnknownNeighbor,
  kEpsilonOutOfRange,
  kInconsistentInputs,
  kInvalidProfile,
  kParseError,
  kSchemaViolation,
};

std::string_view to_string(ErrorKind kind);

/// One failed check against the deployment template / scenario schema.
struct SchemaViolation {
  std::string field;   // dotted path, e.g. "scenario.attackers[1].node"
  std::string reason;
};

/// The single exception type thrown by ssaas. Callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(std::vector<SchemaViolation> violations);

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<SchemaViolation>& violations() const noexcept {
    return violations_;
  }

 private:
  ErrorKind kind_;
  std::vector<SchemaViolation> violations_;
};

}  // namespace ssaas
