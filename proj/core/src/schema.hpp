#pragma once

// Violation-collecting accessors for the JSON template and scenario schema.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssaas/cloud.hpp"
#include "ssaas/error.hpp"

namespace ssaas::detail {

using nlohmann::json;

std::string field_path(std::string_view parent, std::string_view key);
std::string index_path(std::string_view parent, std::size_t index);

class SchemaReader {
 public:
  void fail(std::string field, std::string reason) {
    violations_.push_back({std::move(field), std::move(reason)});
  }
  bool ok() const noexcept { return violations_.empty(); }
  std::vector<SchemaViolation> take() { return std::move(violations_); }
  void throw_if_failed();

  /// nullptr when absent; records a violation if required.
  const json* member(const json& obj, std::string_view key,
                     std::string_view parent, bool required);

  std::optional<double> number(const json& obj, std::string_view key,
                               std::string_view parent, bool required);
  std::optional<std::uint64_t> count(const json& obj, std::string_view key,
                                     std::string_view parent, bool required);
  std::optional<std::string> string(const json& obj, std::string_view key,
                                    std::string_view parent, bool required);
  std::optional<bool> boolean(const json& obj, std::string_view key,
                              std::string_view parent, bool required);

 private:
  std::vector<SchemaViolation> violations_;
};

/// Reads the four template fields from `raw`, recording violations in `reader`.
DeploymentTemplate read_template(const json& raw, SchemaReader& reader);

json parse_document(std::string_view text);

}  // namespace ssaas::detail
