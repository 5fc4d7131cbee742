#pragma once

#include <variant>

#include "olympiad/board_json.hpp"
#include "olympiad/search.hpp"

namespace olympiad::search {

inline nlohmann::json to_json(int n, const Verdict& v) {
  if (const auto* c = std::get_if<Clearable>(&v))
    return {{"n", n}, {"verdict", "clearable"}, {"witness", board::to_json(c->witness)}};
  if (const auto* i = std::get_if<ImpossibleExhausted>(&v))
    return {{"n", n}, {"verdict", "impossible_exhausted"}, {"reachable_count", i->reachable_count}};
  return {{"n", n}, {"verdict", "unknown"}, {"reason", std::get<Unknown>(v).reason}};
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
  using namespace json_util;
  expect_object(j, "verdict");
  const std::string kind = string_field(j, "verdict", "verdict");
  if (kind == "clearable") {
    only_keys(j, {"n", "verdict", "witness"}, "verdict");
    return Clearable{board::sequence_from_json(field(j, "witness", "verdict"))};
  }
  if (kind == "impossible_exhausted") {
    only_keys(j, {"n", "verdict", "reachable_count"}, "verdict");
    const auto& count = field(j, "reachable_count", "verdict");
    if (!count.is_number_unsigned()) throw Error(ErrorCode::Parse, "'reachable_count' must be a nonnegative integer");
    return ImpossibleExhausted{count.get<std::size_t>()};
  }
  if (kind == "unknown") {
    only_keys(j, {"n", "verdict", "reason"}, "verdict");
    return Unknown{string_field(j, "reason", "verdict")};
  }
  throw Error(ErrorCode::Parse, "unknown verdict '" + kind + "'");
}

}  // namespace olympiad::search
