#pragma once

// Breadth-first exploration of every board reachable from the empty n-by-n
// board. Used as a brute-force oracle for which n admit a clearing sequence.
//
// States are packed into one 64-bit word (bit j*n + i), so search is limited
// to n <= 8. Boards up to n = 5 use a dense parent table indexed by the
// packed state; larger boards fall back to a hash map.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "olympiad/board.hpp"

namespace olympiad::search {

struct Limits {
  std::size_t max_states = std::size_t{1} << 20;
  int max_depth = std::numeric_limits<int>::max();
  // Required for n >= 5.
  bool allow_large = false;
  std::size_t memory_budget_bytes = std::size_t{2} << 30;

  static Limits large() {
    Limits l;
    l.max_states = std::numeric_limits<std::size_t>::max();
    l.allow_large = true;
    return l;
  }
};

struct Clearable {
  board::MoveSequence witness;
};

struct ImpossibleExhausted {
  std::size_t reachable_count = 0;
};

struct Unknown {
  std::string reason;
};

using Verdict = std::variant<Clearable, ImpossibleExhausted, Unknown>;

struct ReachableSet {
  std::vector<board::BoardState> states;  // sorted by packed bits; empty board first
  bool exhausted = false;
};

inline constexpr int kMaxSearchSide = 8;
inline constexpr int kMaxDefaultSide = 4;
inline constexpr int kMaxDenseSide = 5;

namespace detail {

// Precomputed line and tromino masks in the board's deterministic move order.
class MoveTable {
 public:
  explicit MoveTable(int n) : n_(n) {
    for (int j = 0; j + 1 < n; ++j)
      for (int i = 0; i + 1 < n; ++i) {
        masks_.push_back(cell(i, j) | cell(i + 1, j) | cell(i, j + 1));
        moves_.push_back(board::PlaceTromino{i, j});
      }
    tromino_count_ = masks_.size();
    for (int j = 0; j < n; ++j) {
      std::uint64_t m = 0;
      for (int i = 0; i < n; ++i) m |= cell(i, j);
      masks_.push_back(m);
      moves_.push_back(board::ClearRow{j});
    }
    for (int i = 0; i < n; ++i) {
      std::uint64_t m = 0;
      for (int j = 0; j < n; ++j) m |= cell(i, j);
      masks_.push_back(m);
      moves_.push_back(board::ClearColumn{i});
    }
  }

  int side() const noexcept { return n_; }
  std::size_t size() const noexcept { return masks_.size(); }
  const board::Move& move(std::size_t k) const { return moves_[k]; }

  // Calls f(successor, move_index) for every legal move from s, in order.
  template <class F>
  void for_each_successor(std::uint64_t s, F&& f) const {
    for (std::size_t k = 0; k < tromino_count_; ++k)
      if ((s & masks_[k]) == 0) f(s | masks_[k], k);
    for (std::size_t k = tromino_count_; k < masks_.size(); ++k)
      if ((s & masks_[k]) == masks_[k]) f(s & ~masks_[k], k);
  }

  // First move (in order) taking `from` to `to`.
  std::size_t move_between(std::uint64_t from, std::uint64_t to) const {
    std::size_t found = size();
    for_each_successor(from, [&](std::uint64_t next, std::size_t k) {
      if (next == to && found == size()) found = k;
    });
    return found;
  }

 private:
  std::uint64_t cell(int i, int j) const { return std::uint64_t{1} << (j * n_ + i); }

  int n_;
  std::size_t tromino_count_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<board::Move> moves_;
};

class DenseParents {
 public:
  static constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

  explicit DenseParents(int cells) : parent_(std::size_t{1} << cells, kUnseen) {}

  static std::size_t table_bytes(int cells) { return (std::size_t{1} << cells) * sizeof(std::uint32_t); }

  bool contains(std::uint64_t s) const { return parent_[s] != kUnseen; }
  void insert(std::uint64_t s, std::uint64_t parent) {
    parent_[s] = static_cast<std::uint32_t>(parent);
    ++size_;
  }
  std::uint64_t parent_of(std::uint64_t s) const { return parent_[s]; }
  std::size_t size() const noexcept { return size_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::size_t size_ = 0;
};

class HashParents {
 public:
  // Rough per-entry cost of an unordered_map node plus bucket slot.
  static constexpr std::size_t kBytesPerState = 64;

  bool contains(std::uint64_t s) const { return parent_.count(s) != 0; }
  void insert(std::uint64_t s, std::uint64_t parent) { parent_.emplace(s, parent); }
  std::uint64_t parent_of(std::uint64_t s) const { return parent_.at(s); }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::unordered_map<std::uint64_t, std::uint64_t> parent_;
};

struct Outcome {
  bool exhausted = false;
  bool cleared = false;
  std::uint64_t clear_from = 0;
  std::size_t clear_move = 0;
  std::size_t visited = 0;
  std::string stop_reason;
};

// Level-by-level BFS from the empty board. With stop_on_clear, returns as
// soon as some reached state has a move back to empty; the first such state
// found lies on the shallowest level, so the witness is shortest.
template <class Store>
Outcome explore(const MoveTable& table, Store& store, std::size_t max_states, int max_depth, bool stop_on_clear,
                std::vector<std::uint64_t>* collect) {
  Outcome out;
  store.insert(0, 0);
  if (collect) collect->push_back(0);
  std::vector<std::uint64_t> frontier{0};
  std::vector<std::uint64_t> next;

  for (int depth = 0; !frontier.empty(); ++depth) {
    if (depth >= max_depth) {
      bool more = false;
      for (auto s : frontier) {
        table.for_each_successor(s, [&](std::uint64_t t, std::size_t) {
          if (t == 0 || !store.contains(t)) more = true;
        });
        if (more) break;
      }
      out.exhausted = !more;
      if (more) out.stop_reason = "max_depth " + std::to_string(max_depth) + " reached";
      out.visited = store.size();
      return out;
    }

    next.clear();
    bool over_limit = false;
    for (auto s : frontier) {
      table.for_each_successor(s, [&](std::uint64_t t, std::size_t k) {
        if (over_limit || out.cleared) return;
        if (t == 0) {
          if (stop_on_clear) {
            out.cleared = true;
            out.clear_from = s;
            out.clear_move = k;
          }
          return;
        }
        if (store.contains(t)) return;
        if (store.size() >= max_states) {
          over_limit = true;
          return;
        }
        store.insert(t, s);
        next.push_back(t);
        if (collect) collect->push_back(t);
      });
      if (out.cleared) {
        out.visited = store.size();
        return out;
      }
      if (over_limit) {
        out.stop_reason = "max_states " + std::to_string(max_states) + " reached";
        out.visited = store.size();
        return out;
      }
    }
    frontier.swap(next);
  }
  out.exhausted = true;
  out.visited = store.size();
  return out;
}

template <class Store>
board::MoveSequence reconstruct(const MoveTable& table, const Store& store, std::uint64_t last, std::size_t final_move) {
  std::vector<std::uint64_t> path{last};
  while (path.back() != 0) path.push_back(store.parent_of(path.back()));
  std::reverse(path.begin(), path.end());
  board::MoveSequence seq{table.side(), {}};
  for (std::size_t k = 0; k + 1 < path.size(); ++k) seq.moves.push_back(table.move(table.move_between(path[k], path[k + 1])));
  seq.moves.push_back(table.move(final_move));
  return seq;
}

// Empty string when the search may proceed; otherwise the reason it may not.
inline std::string gate(int n, const Limits& limits) {
  if (n > kMaxSearchSide) return "n=" + std::to_string(n) + " exceeds the search limit of " + std::to_string(kMaxSearchSide);
  if (n > kMaxDefaultSide && !limits.allow_large) return "n=" + std::to_string(n) + " requires allow_large";
  if (n <= kMaxDenseSide && DenseParents::table_bytes(n * n) > limits.memory_budget_bytes)
    return "dense table for n=" + std::to_string(n) + " exceeds memory budget";
  return {};
}

inline std::size_t state_cap(int n, const Limits& limits) {
  if (n <= kMaxDenseSide) return limits.max_states;
  return std::min(limits.max_states, limits.memory_budget_bytes / HashParents::kBytesPerState);
}

template <class F>
auto with_store(int n, F&& f) {
  if (n <= kMaxDenseSide) {
    DenseParents store(n * n);
    return f(store);
  }
  HashParents store;
  return f(store);
}

}  // namespace detail

inline ReachableSet reachable_set(int n, const Limits& limits = {}) {
  board::check_side(n);
  if (!detail::gate(n, limits).empty()) return {{board::new_board(n)}, false};
  const detail::MoveTable table(n);
  std::vector<std::uint64_t> packed;
  const auto outcome = detail::with_store(n, [&](auto& store) {
    return detail::explore(table, store, detail::state_cap(n, limits), limits.max_depth, false, &packed);
  });
  std::sort(packed.begin(), packed.end());
  ReachableSet out;
  out.exhausted = outcome.exhausted;
  out.states.reserve(packed.size());
  for (auto bits : packed) out.states.push_back(board::BoardState::from_low_word(n, bits));
  return out;
}

inline Verdict decide(int n, const Limits& limits = {}) {
  board::check_side(n);
  if (auto reason = detail::gate(n, limits); !reason.empty()) return Unknown{reason};
  const detail::MoveTable table(n);
  return detail::with_store(n, [&](auto& store) -> Verdict {
    const auto outcome = detail::explore(table, store, detail::state_cap(n, limits), limits.max_depth, true, nullptr);
    if (outcome.cleared) {
      auto witness = detail::reconstruct(table, store, outcome.clear_from, outcome.clear_move);
      // Never hand out a witness the rules engine rejects.
      if (witness.moves.empty() || !board::is_empty(board::replay(witness)))
        throw std::logic_error("search produced a witness that does not replay to empty");
      return Clearable{std::move(witness)};
    }
    if (outcome.exhausted) return ImpossibleExhausted{outcome.visited};
    return Unknown{outcome.stop_reason};
  });
}

// The 2n boards with exactly one full line and nothing else: the only states
// from which a single move empties the board.
inline std::vector<board::BoardState> predecessor_states_of_empty(int n) {
  std::vector<board::BoardState> out;
  board::BoardState empty = board::new_board(n);
  for (int j = 0; j < n; ++j) {
    board::BoardState s = empty;
    for (int i = 0; i < n; ++i) s = s.with(i, j, true);
    out.push_back(s);
  }
  for (int i = 0; i < n; ++i) {
    board::BoardState s = empty;
    for (int j = 0; j < n; ++j) s = s.with(i, j, true);
    out.push_back(s);
  }
  return out;
}

}  // namespace olympiad::search
