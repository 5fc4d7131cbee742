#pragma once

// Two quadratics with opposite leading coefficients through the same two
// points: their sum is a line through (x1, 2*y1) and (x2, 2*y2), which gives
// P(0) + Q(0) without solving for either quadratic.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "olympiad/numeric.hpp"

namespace olympiad::interp {

struct Point {
  Rational x;
  Rational y;
};

// Ascending rational coefficients, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return UniPoly(std::move(c));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Highest power first, e.g. "-1/2*x + 116".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      const Rational mag = abs(c_[k]);
      out += out.empty() ? (c_[k] < 0 ? "-" : "") : (c_[k] < 0 ? " - " : " + ");
      if (k == 0)
        out += to_string(mag);
      else if (mag != 1)
        out += to_string(mag) + "*";
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  std::vector<Rational> c_;
};

inline void check_abscissae(const Point& p1, const Point& p2) {
  if (p1.x == p2.x) throw Error(ErrorCode::CoincidentAbscissae, "both points have x = " + to_string(p1.x));
}

// The quadratic leading*x^2 + b*x + c through p1 and p2.
inline UniPoly solve_quadratic_through(const Rational& leading, const Point& p1, const Point& p2) {
  if (leading == 0) throw Error(ErrorCode::ZeroLeading, "leading coefficient must be nonzero");
  check_abscissae(p1, p2);
  // b*x + c must pass through (x, y - leading*x^2) at both points.
  const Rational r1 = p1.y - leading * p1.x * p1.x;
  const Rational r2 = p2.y - leading * p2.x * p2.x;
  const Rational b = (r1 - r2) / (p1.x - p2.x);
  const Rational c = r1 - b * p1.x;
  return UniPoly({c, b, leading});
}

struct LineTrick {
  UniPoly line;
  Rational answer_at_0;
};

inline LineTrick sum_line_trick(const Rational& lead_p, const Rational& lead_q, const Point& p1, const Point& p2) {
  if (lead_p + lead_q != 0)
    throw Error(ErrorCode::NonCancellingLeads,
                "leading coefficients " + to_string(lead_p) + " and " + to_string(lead_q) + " do not cancel");
  check_abscissae(p1, p2);
  const Rational slope = (2 * p1.y - 2 * p2.y) / (p1.x - p2.x);
  const Rational intercept = 2 * p1.y - slope * p1.x;
  UniPoly line({intercept, slope});
  return {line, line(0)};
}

struct CrossCheck {
  Rational p_at_0;
  Rational q_at_0;
  Rational trick;
  bool agrees = false;
};

inline CrossCheck cross_check_detail(const Rational& lead_p, const Rational& lead_q, const Point& p1, const Point& p2) {
  const LineTrick trick = sum_line_trick(lead_p, lead_q, p1, p2);
  const UniPoly p = solve_quadratic_through(lead_p, p1, p2);
  const UniPoly q = solve_quadratic_through(lead_q, p1, p2);
  CrossCheck out{p(0), q(0), trick.answer_at_0, false};
  out.agrees = out.p_at_0 + out.q_at_0 == out.trick && p + q == trick.line;
  return out;
}

inline bool cross_check(const Rational& lead_p, const Rational& lead_q, const Point& p1, const Point& p2) {
  return cross_check_detail(lead_p, lead_q, p1, p2).agrees;
}

}  // namespace olympiad::interp
