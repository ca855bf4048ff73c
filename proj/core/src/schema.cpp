#include "schema.hpp"

#include <cmath>

namespace ssaas::detail {

std::string field_path(std::string_view parent, std::string_view key) {
  if (parent.empty()) return std::string(key);
  std::string out(parent);
  out += '.';
  out += key;
  return out;
}

std::string index_path(std::string_view parent, std::size_t index) {
  return std::string(parent) + "[" + std::to_string(index) + "]";
}

void SchemaReader::throw_if_failed() {
  if (!ok()) throw Error(take());
}

const json* SchemaReader::member(const json& obj, std::string_view key,
                                 std::string_view parent, bool required) {
  if (obj.is_object()) {
    const auto it = obj.find(key);
    if (it != obj.end()) return &*it;
  }
  if (required) fail(field_path(parent, key), "required field missing");
  return nullptr;
}

std::optional<double> SchemaReader::number(const json& obj,
                                           std::string_view key,
                                           std::string_view parent,
                                           bool required) {
  const json* v = member(obj, key, parent, required);
  if (v == nullptr) return std::nullopt;
  if (!v->is_number() || !std::isfinite(v->get<double>())) {
    fail(field_path(parent, key), "expected a finite number");
    return std::nullopt;
  }
  return v->get<double>();
}

std::optional<std::uint64_t> SchemaReader::count(const json& obj,
                                                 std::string_view key,
                                                 std::string_view parent,
                                                 bool required) {
  const json* v = member(obj, key, parent, required);
  if (v == nullptr) return std::nullopt;
  if (!v->is_number_integer() ||
      (v->is_number_integer() && !v->is_number_unsigned() &&
       v->get<std::int64_t>() < 0)) {
    fail(field_path(parent, key), "expected a non-negative integer");
    return std::nullopt;
  }
  return v->get<std::uint64_t>();
}

std::optional<std::string> SchemaReader::string(const json& obj,
                                                std::string_view key,
                                                std::string_view parent,
                                                bool required) {
  const json* v = member(obj, key, parent, required);
  if (v == nullptr) return std::nullopt;
  if (!v->is_string()) {
    fail(field_path(parent, key), "expected a string");
    return std::nullopt;
  }
  return v->get<std::string>();
}

std::optional<bool> SchemaReader::boolean(const json& obj,
                                          std::string_view key,
                                          std::string_view parent,
                                          bool required) {
  const json* v = member(obj, key, parent, required);
  if (v == nullptr) return std::nullopt;
  if (!v->is_boolean()) {
    fail(field_path(parent, key), "expected true or false");
    return std::nullopt;
  }
  return v->get<bool>();
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
}

}  // namespace ssaas::detail
