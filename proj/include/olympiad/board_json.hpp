#pragma once

// MoveSequence <-> {"n": 3, "moves": [{"type":"tromino","i":0,"j":0},
//                                     {"type":"clear_row","j":1},
//                                     {"type":"clear_col","i":0}]}

#include <variant>

#include "olympiad/board.hpp"
#include "olympiad/json_util.hpp"

namespace olympiad::board {

inline nlohmann::json to_json(const Move& m) {
  using nlohmann::json;
  if (const auto* t = std::get_if<PlaceTromino>(&m)) return json{{"type", "tromino"}, {"i", t->i}, {"j", t->j}};
  if (const auto* r = std::get_if<ClearRow>(&m)) return json{{"type", "clear_row"}, {"j", r->j}};
  return json{{"type", "clear_col"}, {"i", std::get<ClearColumn>(m).i}};
}

inline nlohmann::json to_json(const MoveSequence& seq) {
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : seq.moves) moves.push_back(to_json(m));
  return {{"n", seq.n}, {"moves", std::move(moves)}};
}

inline Move move_from_json(const nlohmann::json& j) {
  using namespace json_util;
  expect_object(j, "move");
  const std::string type = string_field(j, "type", "move");
  if (type == "tromino") {
    only_keys(j, {"type", "i", "j"}, "tromino move");
    return PlaceTromino{int_field(j, "i", "tromino move"), int_field(j, "j", "tromino move")};
  }
  if (type == "clear_row") {
    only_keys(j, {"type", "j"}, "clear_row move");
    return ClearRow{int_field(j, "j", "clear_row move")};
  }
  if (type == "clear_col") {
    only_keys(j, {"type", "i"}, "clear_col move");
    return ClearColumn{int_field(j, "i", "clear_col move")};
  }
  throw Error(ErrorCode::Parse, "unknown move type '" + type + "'");
}

// Structural validation only: side >= 2 and every index in range for n.
inline MoveSequence sequence_from_json(const nlohmann::json& j) {
  using namespace json_util;
  only_keys(j, {"n", "moves"}, "move sequence");
  MoveSequence seq;
  seq.n = int_field(j, "n", "move sequence");
  check_side(seq.n);
  const auto& moves = field(j, "moves", "move sequence");
  if (!moves.is_array()) throw Error(ErrorCode::Parse, "'moves' must be an array");
  for (const auto& m : moves) {
    seq.moves.push_back(move_from_json(m));
    check_move(seq.n, seq.moves.back());
  }
  return seq;
}

}  // namespace olympiad::board
