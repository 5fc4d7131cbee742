#pragma once

#include <string>

#include "olympiad/board.hpp"

namespace olympiad::construct {

// Clears the n-by-n board for 3 | n by running the 3x3 procedure in every
// sub-board at once. Per block anchored at (3a, 3b):
//   T(3a, 3b), T(3a+1, 3b+1)   then every row j = 1 (mod 3) is full
//   T(3a, 3b+1)                then every column i = 0, 1 (mod 3) is full
// Length is n^2/3 + n; for n = 3 this is
//   T(0,0) T(1,1) ClearRow(1) T(0,1) ClearCol(0) ClearCol(1).
inline board::MoveSequence clearing_sequence_div3(int n) {
  if (n < 3 || n % 3 != 0)
    throw Error(ErrorCode::NotDivisibleBy3, "n=" + std::to_string(n) + " is not a positive multiple of 3");
  board::MoveSequence seq{n, {}};
  const int blocks = n / 3;
  for (int b = 0; b < blocks; ++b)
    for (int a = 0; a < blocks; ++a) {
      seq.moves.push_back(board::PlaceTromino{3 * a, 3 * b});
      seq.moves.push_back(board::PlaceTromino{3 * a + 1, 3 * b + 1});
    }
  for (int j = 1; j < n; j += 3) seq.moves.push_back(board::ClearRow{j});
  for (int b = 0; b < blocks; ++b)
    for (int a = 0; a < blocks; ++a) seq.moves.push_back(board::PlaceTromino{3 * a, 3 * b + 1});
  for (int i = 0; i < n; ++i)
    if (i % 3 != 2) seq.moves.push_back(board::ClearColumn{i});
  return seq;
}

}  // namespace olympiad::construct
