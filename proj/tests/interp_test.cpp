#include <gtest/gtest.h>

#include <random>

#include "olympiad/interp.hpp"

namespace {

using namespace olympiad;
using namespace olympiad::interp;

const Point kA{16, 54};
const Point kB{20, 53};

TEST(Interp, SolveQuadraticThroughAimePoints) {
  const UniPoly p = solve_quadratic_through(2, kA, kB);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(2), 2);
  EXPECT_EQ(p.coeff(1), Rational(-289, 4));
  EXPECT_EQ(p(0), 698);
  EXPECT_EQ(p(16), 54);
  EXPECT_EQ(p(20), 53);

  const UniPoly q = solve_quadratic_through(-2, kA, kB);
  EXPECT_EQ(q(0), -582);
  EXPECT_EQ(q(16), 54);
  EXPECT_EQ(q(20), 53);

  const UniPoly sq = solve_quadratic_through(1, {0, 0}, {1, 1});
  EXPECT_EQ(sq, UniPoly({0, 0, 1}));
}

TEST(Interp, SumLineTrick) {
  const LineTrick t = sum_line_trick(2, -2, kA, kB);
  EXPECT_EQ(t.line, UniPoly({116, Rational(-1, 2)}));
  EXPECT_EQ(t.line.str(), "-1/2*x + 116");
  EXPECT_EQ(t.answer_at_0, 116);
  EXPECT_EQ(t.line(16), 108);
  EXPECT_EQ(t.line(20), 106);

  const LineTrick flat = sum_line_trick(1, -1, {0, 1}, {1, 1});
  EXPECT_EQ(flat.line, UniPoly({2}));
  EXPECT_EQ(flat.answer_at_0, 2);
}

TEST(Interp, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code([] { sum_line_trick(2, -1, kA, kB); }), ErrorCode::NonCancellingLeads);
  EXPECT_EQ(code([] { sum_line_trick(2, -2, kA, {16, 1}); }), ErrorCode::CoincidentAbscissae);
  EXPECT_EQ(code([] { solve_quadratic_through(2, kA, {16, 1}); }), ErrorCode::CoincidentAbscissae);
  EXPECT_EQ(code([] { solve_quadratic_through(0, kA, kB); }), ErrorCode::ZeroLeading);
  EXPECT_EQ(code([] { cross_check(2, -1, kA, kB); }), ErrorCode::NonCancellingLeads);
}

TEST(Interp, CrossCheckAimeInstance) {
  const CrossCheck c = cross_check_detail(2, -2, kA, kB);
  EXPECT_EQ(c.p_at_0, 698);
  EXPECT_EQ(c.q_at_0, -582);
  EXPECT_EQ(c.trick, 116);
  EXPECT_TRUE(c.agrees);
  EXPECT_TRUE(cross_check(2, -2, kA, kB));
}

TEST(Interp, CrossCheckRandomInstances) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  auto rational = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 500; ++trial) {
    Rational lead = rational();
    if (lead == 0) lead = 1;
    Point p1{rational(), rational()}, p2{rational(), rational()};
    if (p1.x == p2.x) p2.x += 1;
    EXPECT_TRUE(cross_check(lead, -lead, p1, p2));
    const UniPoly p = solve_quadratic_through(lead, p1, p2);
    EXPECT_EQ(p(p1.x), p1.y);
    EXPECT_EQ(p(p2.x), p2.y);
  }
}

TEST(Interp, RationalParsing) {
  EXPECT_EQ(parse_rational("-289/4"), Rational(-289, 4));
  EXPECT_EQ(parse_rational("116"), 116);
  EXPECT_EQ(parse_rational("+3/6"), Rational(1, 2));
  EXPECT_EQ(to_string(Rational(-289, 4)), "-289/4");
  EXPECT_EQ(to_string(Rational(7, 27)), "7/27");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

}  // namespace
