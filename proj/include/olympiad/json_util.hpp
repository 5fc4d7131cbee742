#pragma once

// Strict readers shared by the JSON codecs: wrong types, missing keys and
// unknown keys are all Parse errors.

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "olympiad/error.hpp"

namespace olympiad::json_util {

using nlohmann::json;

inline void expect_object(const json& j, std::string_view what) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, std::string(what) + " must be a JSON object");
}

inline void only_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
  expect_object(j, what);
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorCode::Parse, "unknown field '" + key + "' in " + std::string(what));
  }
}

inline const json& field(const json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "' in " + std::string(what));
  return *it;
}

inline int int_field(const json& j, const char* key, std::string_view what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer())
    throw Error(ErrorCode::Parse, std::string("field '") + key + "' in " + std::string(what) + " must be an integer");
  return v.get<int>();
}

inline std::string string_field(const json& j, const char* key, std::string_view what) {
  const json& v = field(j, key, what);
  if (!v.is_string())
    throw Error(ErrorCode::Parse, std::string("field '") + key + "' in " + std::string(what) + " must be a string");
  return v.get<std::string>();
}

inline bool bool_field(const json& j, const char* key, std::string_view what) {
  const json& v = field(j, key, what);
  if (!v.is_boolean())
    throw Error(ErrorCode::Parse, std::string("field '") + key + "' in " + std::string(what) + " must be a boolean");
  return v.get<bool>();
}

inline json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace olympiad::json_util
