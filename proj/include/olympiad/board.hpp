#pragma once

// Rules engine for the n-by-n stone game.
//
// Cells are addressed (i, j): i is the column (exponent of x), j the row
// (exponent of y), origin at the lower-left corner. A tromino anchored at
// (i, j) covers (i, j), (i+1, j), (i, j+1); no other orientation exists.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "olympiad/error.hpp"

namespace olympiad::board {

struct PlaceTromino {
  int i = 0;
  int j = 0;
  friend bool operator==(const PlaceTromino&, const PlaceTromino&) = default;
};

struct ClearRow {
  int j = 0;
  friend bool operator==(const ClearRow&, const ClearRow&) = default;
};

struct ClearColumn {
  int i = 0;
  friend bool operator==(const ClearColumn&, const ClearColumn&) = default;
};

using Move = std::variant<PlaceTromino, ClearRow, ClearColumn>;

inline std::string to_string(const Move& m) {
  struct {
    std::string operator()(const PlaceTromino& t) const {
      return "T(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
    }
    std::string operator()(const ClearRow& r) const { return "ClearRow(" + std::to_string(r.j) + ")"; }
    std::string operator()(const ClearColumn& c) const { return "ClearCol(" + std::to_string(c.i) + ")"; }
  } visitor;
  return std::visit(visitor, m);
}

struct MoveSequence {
  int n = 2;
  std::vector<Move> moves;
  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

inline void check_side(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidSide, "side must be >= 2, got " + std::to_string(n));
}

// Occupancy as a row-major bit grid: cell (i, j) is bit j*n + i.
class BoardState {
 public:
  explicit BoardState(int n) : n_(n) {
    check_side(n);
    words_.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  }

  int side() const noexcept { return n_; }
  std::size_t cell_count() const noexcept { return static_cast<std::size_t>(n_) * n_; }

  bool in_bounds(int i, int j) const noexcept { return i >= 0 && j >= 0 && i < n_ && j < n_; }

  bool occupied(int i, int j) const {
    bounds(i, j);
    const std::size_t b = bit(i, j);
    return (words_[b / 64] >> (b % 64)) & 1U;
  }

  std::size_t stone_count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool row_full(int j) const {
    for (int i = 0; i < n_; ++i)
      if (!occupied(i, j)) return false;
    return true;
  }

  bool column_full(int i) const {
    for (int j = 0; j < n_; ++j)
      if (!occupied(i, j)) return false;
    return true;
  }

  // Occupied cells in bit order (row by row, bottom first).
  std::vector<std::pair<int, int>> stones() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i)
        if (occupied(i, j)) out.emplace_back(i, j);
    return out;
  }

  BoardState with(int i, int j, bool value) const {
    bounds(i, j);
    BoardState copy = *this;
    const std::size_t b = bit(i, j);
    const std::uint64_t mask = std::uint64_t{1} << (b % 64);
    if (value)
      copy.words_[b / 64] |= mask;
    else
      copy.words_[b / 64] &= ~mask;
    return copy;
  }

  // Only meaningful when n*n <= 64; the search solver uses this packing.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  static BoardState from_low_word(int n, std::uint64_t bits) {
    BoardState s(n);
    if (s.cell_count() < 64) bits &= (std::uint64_t{1} << s.cell_count()) - 1;
    s.words_[0] = bits;
    return s;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BoardState&, const BoardState&) = default;

 private:
  std::size_t bit(int i, int j) const noexcept { return static_cast<std::size_t>(j) * n_ + i; }

  void bounds(int i, int j) const {
    if (!in_bounds(i, j))
      throw Error(ErrorCode::OutOfBounds,
                  "cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                      std::to_string(n_) + "x" + std::to_string(n_) + " board");
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

inline BoardState new_board(int n) { return BoardState(n); }

inline bool is_empty(const BoardState& s) noexcept { return s.empty(); }

// Throws OutOfBounds if m cannot exist on a side-n board.
inline void check_move(int n, const Move& m) {
  auto fail = [&] {
    throw Error(ErrorCode::OutOfBounds, to_string(m) + " invalid for n=" + std::to_string(n));
  };
  if (const auto* t = std::get_if<PlaceTromino>(&m)) {
    if (t->i < 0 || t->j < 0 || t->i > n - 2 || t->j > n - 2) fail();
  } else if (const auto* r = std::get_if<ClearRow>(&m)) {
    if (r->j < 0 || r->j >= n) fail();
  } else if (const auto* c = std::get_if<ClearColumn>(&m)) {
    if (c->i < 0 || c->i >= n) fail();
  }
}

inline BoardState apply_move(const BoardState& s, const Move& m) {
  const int n = s.side();
  check_move(n, m);
  if (const auto* t = std::get_if<PlaceTromino>(&m)) {
    const std::pair<int, int> cells[3] = {{t->i, t->j}, {t->i + 1, t->j}, {t->i, t->j + 1}};
    for (auto [i, j] : cells)
      if (s.occupied(i, j)) throw Error(ErrorCode::CellsNotEmpty, to_string(m) + " overlaps a stone");
    BoardState next = s;
    for (auto [i, j] : cells) next = next.with(i, j, true);
    return next;
  }
  if (const auto* r = std::get_if<ClearRow>(&m)) {
    if (!s.row_full(r->j)) throw Error(ErrorCode::LineNotFull, to_string(m) + " on a non-full row");
    BoardState next = s;
    for (int i = 0; i < n; ++i) next = next.with(i, r->j, false);
    return next;
  }
  const auto& c = std::get<ClearColumn>(m);
  if (!s.column_full(c.i)) throw Error(ErrorCode::LineNotFull, to_string(m) + " on a non-full column");
  BoardState next = s;
  for (int j = 0; j < n; ++j) next = next.with(c.i, j, false);
  return next;
}

// Order: trominoes by (j, i), then row clears by j, then column clears by i.
inline std::vector<Move> legal_moves(const BoardState& s) {
  const int n = s.side();
  std::vector<Move> out;
  for (int j = 0; j + 1 < n; ++j)
    for (int i = 0; i + 1 < n; ++i)
      if (!s.occupied(i, j) && !s.occupied(i + 1, j) && !s.occupied(i, j + 1)) out.push_back(PlaceTromino{i, j});
  for (int j = 0; j < n; ++j)
    if (s.row_full(j)) out.push_back(ClearRow{j});
  for (int i = 0; i < n; ++i)
    if (s.column_full(i)) out.push_back(ClearColumn{i});
  return out;
}

inline BoardState replay(const MoveSequence& seq) {
  BoardState s = new_board(seq.n);
  for (std::size_t k = 0; k < seq.moves.size(); ++k) {
    try {
      s = apply_move(s, seq.moves[k]);
    } catch (const Error& e) {
      throw ReplayError(e, k);
    }
  }
  return s;
}

}  // namespace olympiad::board

template <>
struct std::hash<olympiad::board::BoardState> {
  std::size_t operator()(const olympiad::board::BoardState& s) const noexcept {
    std::size_t h = std::hash<int>{}(s.side());
    for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
