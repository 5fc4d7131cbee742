#pragma once

// Polynomial bookkeeping for a move sequence. Cell (i, j) carries the
// monomial x^i y^j; placing stones adds their monomials, clearing subtracts
// them. With t, c, r the per-anchor / per-column / per-row move tallies:
//
//   T = sum t_ij x^i y^j (1 + x + y)
//   C = sum c_i  x^i (1 + y + ... + y^{n-1})
//   R = sum r_j  y^j (1 + x + ... + x^{n-1})
//
// and T - C - R encodes the final board, so it vanishes for any sequence
// that starts and ends empty.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "olympiad/algebra/poly.hpp"
#include "olympiad/board.hpp"

namespace olympiad::algebra {

class MoveCounts {
 public:
  explicit MoveCounts(int n)
      : n_(n),
        t_(static_cast<std::size_t>(n - 1) * (n - 1)),
        c_(static_cast<std::size_t>(n)),
        r_(static_cast<std::size_t>(n)) {
    board::check_side(n);
  }

  int side() const noexcept { return n_; }

  // Tromino placements anchored at (i, j), 0 <= i, j <= n-2.
  BigInt& t(int i, int j) { return t_.at(index(i, j)); }
  const BigInt& t(int i, int j) const { return t_.at(index(i, j)); }
  // Clears of column i.
  BigInt& c(int i) { return c_.at(static_cast<std::size_t>(i)); }
  const BigInt& c(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  // Clears of row j.
  BigInt& r(int j) { return r_.at(static_cast<std::size_t>(j)); }
  const BigInt& r(int j) const { return r_.at(static_cast<std::size_t>(j)); }

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& v : t_) sum += v;
    for (const auto& v : c_) sum += v;
    for (const auto& v : r_) sum += v;
    return sum;
  }

  friend bool operator==(const MoveCounts&, const MoveCounts&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i > n_ - 2 || j > n_ - 2) throw Error(ErrorCode::OutOfBounds, "tromino anchor out of range");
    return static_cast<std::size_t>(i) * (n_ - 1) + j;
  }

  int n_;
  std::vector<BigInt> t_, c_, r_;
};

// Purely syntactic: legality of the moves is not checked.
inline MoveCounts counts_from_sequence(const board::MoveSequence& seq) {
  MoveCounts mc(seq.n);
  for (const auto& m : seq.moves) {
    board::check_move(seq.n, m);
    if (const auto* t = std::get_if<board::PlaceTromino>(&m))
      mc.t(t->i, t->j) += 1;
    else if (const auto* r = std::get_if<board::ClearRow>(&m))
      mc.r(r->j) += 1;
    else
      mc.c(std::get<board::ClearColumn>(m).i) += 1;
  }
  return mc;
}

struct TCR {
  BivariatePoly T, C, R;
};

// sum t_ij x^i y^j, the cofactor of (1 + x + y) in T.
inline BivariatePoly placement_polynomial(const MoveCounts& mc) {
  BivariatePoly p;
  for (int i = 0; i + 1 < mc.side(); ++i)
    for (int j = 0; j + 1 < mc.side(); ++j) p.add_term(i, j, mc.t(i, j));
  return p;
}

inline TCR build_tcr(const MoveCounts& mc) {
  const int n = mc.side();
  BivariatePoly col_weights, row_weights;
  for (int k = 0; k < n; ++k) {
    col_weights.add_term(k, 0, mc.c(k));
    row_weights.add_term(0, k, mc.r(k));
  }
  return {placement_polynomial(mc) * BivariatePoly::one_plus_x_plus_y(),
          col_weights * BivariatePoly::geometric_y(n), row_weights * BivariatePoly::geometric_x(n)};
}

inline BivariatePoly balance_polynomial(const MoveCounts& mc) {
  TCR p = build_tcr(mc);
  return p.T - p.C - p.R;
}

}  // namespace olympiad::algebra
