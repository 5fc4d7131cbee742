#include <gtest/gtest.h>

#include <random>
#include <set>

#include "olympiad/board.hpp"
#include "olympiad/board_json.hpp"

namespace {

using namespace olympiad;
using namespace olympiad::board;

using Cells = std::vector<std::pair<int, int>>;

MoveSequence figure3() {
  return {3, {PlaceTromino{0, 0}, PlaceTromino{1, 1}, ClearRow{1}, PlaceTromino{0, 1}, ClearColumn{0}, ClearColumn{1}}};
}

BoardState random_state(int n, std::mt19937& rng) {
  BoardState s(n);
  std::bernoulli_distribution coin(0.5);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (coin(rng)) s = s.with(i, j, true);
  return s;
}

// Every structurally valid move for side n, in the engine's order.
std::vector<Move> all_moves(int n) {
  std::vector<Move> out;
  for (int j = 0; j + 1 < n; ++j)
    for (int i = 0; i + 1 < n; ++i) out.push_back(PlaceTromino{i, j});
  for (int j = 0; j < n; ++j) out.push_back(ClearRow{j});
  for (int i = 0; i < n; ++i) out.push_back(ClearColumn{i});
  return out;
}

std::vector<Move> succeeding_moves(const BoardState& s) {
  std::vector<Move> out;
  for (const auto& m : all_moves(s.side())) {
    try {
      apply_move(s, m);
      out.push_back(m);
    } catch (const Error&) {
    }
  }
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an olympiad::Error";
  return ErrorCode::Parse;
}

TEST(Board, NewBoardIsEmpty) {
  EXPECT_EQ(new_board(2).stone_count(), 0U);
  EXPECT_EQ(new_board(2).side(), 2);
  EXPECT_TRUE(is_empty(new_board(4)));
  EXPECT_EQ(new_board(4).cell_count(), 16U);
  EXPECT_EQ(code_of([] { new_board(1); }), ErrorCode::InvalidSide);
  EXPECT_EQ(code_of([] { new_board(-3); }), ErrorCode::InvalidSide);
}

TEST(Board, LegalMovesOnEmptyBoards) {
  const auto m2 = legal_moves(new_board(2));
  ASSERT_EQ(m2.size(), 1U);
  EXPECT_EQ(m2[0], Move(PlaceTromino{0, 0}));

  const auto m4 = legal_moves(new_board(4));
  EXPECT_EQ(m4.size(), 9U);
  for (const auto& m : m4) EXPECT_TRUE(std::holds_alternative<PlaceTromino>(m));
  // (j, i) ascending
  EXPECT_EQ(m4[1], Move(PlaceTromino{1, 0}));
  EXPECT_EQ(m4[3], Move(PlaceTromino{0, 1}));
}

TEST(Board, FullRowOffersClear) {
  BoardState s(3);
  for (int i = 0; i < 3; ++i) s = s.with(i, 1, true);
  const auto moves = legal_moves(s);
  EXPECT_NE(std::find(moves.begin(), moves.end(), Move(ClearRow{1})), moves.end());
  EXPECT_EQ(std::find(moves.begin(), moves.end(), Move(ClearRow{0})), moves.end());
}

TEST(Board, TrominoShapeAndClear) {
  const BoardState empty(2);
  const BoardState placed = apply_move(empty, PlaceTromino{0, 0});
  EXPECT_EQ(placed.stones(), (Cells{{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_TRUE(is_empty(empty)) << "input must be unchanged";

  const BoardState cleared = apply_move(placed, ClearRow{0});
  EXPECT_EQ(cleared.stones(), (Cells{{0, 1}}));
  EXPECT_EQ(apply_move(placed, ClearColumn{0}).stones(), (Cells{{1, 0}}));
  EXPECT_FALSE(is_empty(placed));
}

TEST(Board, ApplyMoveErrors) {
  const BoardState empty(4);
  EXPECT_EQ(code_of([&] { apply_move(empty, ClearRow{0}); }), ErrorCode::LineNotFull);
  EXPECT_EQ(code_of([&] { apply_move(empty, ClearColumn{3}); }), ErrorCode::LineNotFull);
  EXPECT_EQ(code_of([&] { apply_move(empty, PlaceTromino{3, 0}); }), ErrorCode::OutOfBounds);
  EXPECT_EQ(code_of([&] { apply_move(empty, ClearRow{4}); }), ErrorCode::OutOfBounds);
  EXPECT_EQ(code_of([&] { apply_move(empty, ClearColumn{-1}); }), ErrorCode::OutOfBounds);
  const BoardState one = empty.with(1, 1, true);
  EXPECT_EQ(code_of([&] { apply_move(one, PlaceTromino{0, 1}); }), ErrorCode::CellsNotEmpty);
  EXPECT_EQ(code_of([&] { apply_move(one, PlaceTromino{1, 0}); }), ErrorCode::CellsNotEmpty);
  EXPECT_NO_THROW(apply_move(one, PlaceTromino{2, 2}));
}

TEST(Board, ReplayFigure3) {
  EXPECT_TRUE(is_empty(replay(figure3())));
  EXPECT_TRUE(is_empty(replay(MoveSequence{3, {}})));
}

TEST(Board, ReplayReportsFailingIndex) {
  try {
    replay(MoveSequence{3, {PlaceTromino{0, 0}, PlaceTromino{0, 0}}});
    FAIL() << "expected ReplayError";
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.index(), 1U);
    EXPECT_EQ(e.code(), ErrorCode::CellsNotEmpty);
  }
}

TEST(Board, LegalMovesMatchSucceedingMovesOnAllTwoByTwoStates) {
  for (unsigned bits = 0; bits < 16; ++bits) {
    const BoardState s = BoardState::from_low_word(2, bits);
    EXPECT_EQ(legal_moves(s), succeeding_moves(s)) << "bits " << bits;
  }
}

TEST(Board, LegalMovesMatchSucceedingMovesOnRandomStates) {
  std::mt19937 rng(7);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 500; ++trial) {
      const BoardState s = random_state(n, rng);
      EXPECT_EQ(legal_moves(s), succeeding_moves(s));
    }
    // Dense boards so clears actually appear.
    for (int trial = 0; trial < 200; ++trial) {
      BoardState s(n);
      std::bernoulli_distribution coin(0.9);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          if (coin(rng)) s = s.with(i, j, true);
      EXPECT_EQ(legal_moves(s), succeeding_moves(s));
    }
  }
}

TEST(Board, StoneCountChangesByThreeOrN) {
  std::mt19937 rng(11);
  for (int n : {2, 3, 4, 5}) {
    BoardState s(n);
    for (int step = 0; step < 400; ++step) {
      const auto moves = legal_moves(s);
      if (moves.empty()) s = BoardState(n);
      if (moves.empty()) continue;
      const Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      const BoardState next = apply_move(s, m);
      const long delta = static_cast<long>(next.stone_count()) - static_cast<long>(s.stone_count());
      EXPECT_EQ(delta, std::holds_alternative<PlaceTromino>(m) ? 3L : -static_cast<long>(n));
      s = next;
    }
  }
}

TEST(Board, ReplayIsDeterministic) {
  std::mt19937 rng(3);
  MoveSequence seq{4, {}};
  BoardState s(4);
  for (int k = 0; k < 30; ++k) {
    const auto moves = legal_moves(s);
    if (moves.empty()) break;
    seq.moves.push_back(moves[rng() % moves.size()]);
    s = apply_move(s, seq.moves.back());
  }
  EXPECT_EQ(replay(seq), replay(seq));
  EXPECT_EQ(replay(seq), s);
  EXPECT_EQ(std::hash<BoardState>{}(replay(seq)), std::hash<BoardState>{}(s));
}

TEST(Board, LargeBoardsUseMultipleWords) {
  BoardState s(12);
  s = s.with(11, 11, true).with(0, 0, true);
  EXPECT_EQ(s.words().size(), 3U);
  EXPECT_EQ(s.stone_count(), 2U);
  EXPECT_TRUE(s.occupied(11, 11));
  EXPECT_FALSE(s.occupied(10, 11));
}

TEST(MoveSequenceJson, ExactFormat) {
  const auto j = nlohmann::json::parse(
      R"({"n": 3, "moves": [{"type":"tromino","i":0,"j":0}, {"type":"clear_row","j":1}, {"type":"clear_col","i":0}]})");
  const MoveSequence seq = sequence_from_json(j);
  EXPECT_EQ(seq, (MoveSequence{3, {PlaceTromino{0, 0}, ClearRow{1}, ClearColumn{0}}}));
  EXPECT_EQ(to_json(seq), j);
}

TEST(MoveSequenceJson, RoundTripsRandomSequences) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto moves = all_moves(n);
    MoveSequence seq{n, {}};
    for (unsigned k = rng() % 20; k-- > 0;) seq.moves.push_back(moves[rng() % moves.size()]);
    EXPECT_EQ(sequence_from_json(nlohmann::json::parse(to_json(seq).dump())), seq);
  }
}

TEST(MoveSequenceJson, RejectsMalformedInput) {
  auto parse = [](const char* text) { return code_of([&] { sequence_from_json(nlohmann::json::parse(text)); }); };
  EXPECT_EQ(parse(R"({"n":3,"moves":[],"extra":1})"), ErrorCode::Parse);
  EXPECT_EQ(parse(R"({"n":3,"moves":[{"type":"tromino","i":0,"j":0,"k":1}]})"), ErrorCode::Parse);
  EXPECT_EQ(parse(R"({"n":3,"moves":[{"type":"clear_row","i":0}]})"), ErrorCode::Parse);
  EXPECT_EQ(parse(R"({"n":3,"moves":[{"type":"rotate","i":0}]})"), ErrorCode::Parse);
  EXPECT_EQ(parse(R"({"n":3})"), ErrorCode::Parse);
  EXPECT_EQ(parse(R"({"n":"3","moves":[]})"), ErrorCode::Parse);
  EXPECT_EQ(parse(R"({"n":1,"moves":[]})"), ErrorCode::InvalidSide);
  EXPECT_EQ(parse(R"({"n":3,"moves":[{"type":"tromino","i":2,"j":0}]})"), ErrorCode::OutOfBounds);
}

}  // namespace
