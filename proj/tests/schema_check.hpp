#pragma once

// Validator for the subset of JSON Schema the shipped schemas use:
// type (string or list), properties, required, additionalProperties (bool),
// items, enum. Collects human-readable violations.

#include <string>
#include <vector>

#include <json.hpp>

namespace schemacheck {

inline bool type_matches(const std::string& type, const nlohmann::json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline void check(const nlohmann::json& schema, const nlohmann::json& value,
                  const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto& type = schema["type"];
    bool ok = false;
    if (type.is_string()) {
      ok = type_matches(type.get<std::string>(), value);
    } else {
      for (const auto& t : type) ok = ok || type_matches(t.get<std::string>(), value);
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch (" + value.type_name() + ")");
      return;
    }
    if (value.is_null()) return;  // nullable slots stop here
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& option : schema["enum"]) ok = ok || option == value;
    if (!ok) errors.push_back(path + ": value not in enum");
  }
  if (value.is_object()) {
    const auto& props = schema.value("properties", nlohmann::json::object());
    if (schema.contains("required")) {
      for (const auto& name : schema["required"])
        if (!value.contains(name.get<std::string>()))
          errors.push_back(path + ": missing required '" + name.get<std::string>() + "'");
    }
    for (const auto& [name, sub] : value.items()) {
      if (props.contains(name)) {
        check(props[name], sub, path + "." + name, errors);
      } else if (schema.value("additionalProperties", nlohmann::json(true)) ==
                 nlohmann::json(false)) {
        errors.push_back(path + ": unexpected property '" + name + "'");
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& item : value) {
      check(schema["items"], item, path + "[" + std::to_string(i) + "]", errors);
      ++i;
    }
  }
}

inline std::vector<std::string> validate(const nlohmann::json& schema,
                                         const nlohmann::json& value) {
  std::vector<std::string> errors;
  check(schema, value, "$", errors);
  return errors;
}

}  // namespace schemacheck
