#pragma once

// Minimal structural validator covering the subset of JSON Schema used by
// the shipped schemas: type, enum, required, properties,
// additionalProperties:false, items, and the numeric bound keywords.

#include <string>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& inst, const std::string& t) {
  if (t == "object") return inst.is_object();
  if (t == "array") return inst.is_array();
  if (t == "string") return inst.is_string();
  if (t == "integer") return inst.is_number_integer();
  if (t == "number") return inst.is_number();
  if (t == "boolean") return inst.is_boolean();
  if (t == "null") return inst.is_null();
  return false;
}

// Returns an empty string when the instance conforms, else a diagnostic.
inline std::string validate(const json& schema, const json& inst,
                            const std::string& where = "$") {
  if (schema.contains("type")) {
    const auto& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(inst, t.get<std::string>());
    } else {
      for (const auto& alt : t)
        if (type_matches(inst, alt.get<std::string>())) ok = true;
    }
    if (!ok) return where + ": type mismatch";
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema.at("enum"))
      if (v == inst) ok = true;
    if (!ok) return where + ": value not in enum";
  }
  if (inst.is_number()) {
    const double x = inst.get<double>();
    if (schema.contains("minimum") && x < schema.at("minimum").get<double>())
      return where + ": below minimum";
    if (schema.contains("maximum") && x > schema.at("maximum").get<double>())
      return where + ": above maximum";
    if (schema.contains("exclusiveMinimum") &&
        x <= schema.at("exclusiveMinimum").get<double>())
      return where + ": not above exclusiveMinimum";
    if (schema.contains("exclusiveMaximum") &&
        x >= schema.at("exclusiveMaximum").get<double>())
      return where + ": not below exclusiveMaximum";
  }
  if (inst.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!inst.contains(key.get<std::string>()))
          return where + ": missing required key " + key.get<std::string>();
    const json props =
        schema.contains("properties") ? schema.at("properties") : json::object();
    const bool closed = schema.contains("additionalProperties") &&
                        schema.at("additionalProperties") == false;
    for (const auto& [key, value] : inst.items()) {
      if (props.contains(key)) {
        const std::string err = validate(props.at(key), value,
                                         where + "." + key);
        if (!err.empty()) return err;
      } else if (closed) {
        return where + ": unexpected key " + key;
      }
    }
  }
  if (inst.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const std::string err = validate(schema.at("items"), inst[i],
                                       where + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
    }
  }
  return "";
}

} // namespace schema_check
