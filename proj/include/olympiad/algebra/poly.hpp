#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "olympiad/numeric.hpp"

namespace olympiad::algebra {

// Dense univariate polynomial over Z, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(std::size_t degree, BigInt coeff = 1) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    return IntPoly(std::move(c));
  }

  // 1 + t + ... + t^{len-1}
  static IntPoly geometric(std::size_t len) { return IntPoly(std::vector<BigInt>(len, BigInt(1))); }

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Division by a monic divisor; stays inside Z[t].
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1) throw std::invalid_argument("divisor must be monic");
    std::vector<BigInt> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    if (rem.size() <= dd) return {IntPoly{}, *this};
    std::vector<BigInt> quot(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
      const BigInt q = rem[k];
      if (q == 0) continue;
      quot[k - dd] = q;
      for (std::size_t m = 0; m <= dd; ++m) rem[k - dd + m] -= q * divisor.c_[m];
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
  }

  IntPoly mod_monic(const IntPoly& divisor) const { return divmod_monic(divisor).second; }

  std::string str(char var = 't') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      BigInt mag = abs(c_[k]);
      out += out.empty() ? (c_[k] < 0 ? "-" : "") : (c_[k] < 0 ? " - " : " + ");
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

// Sparse polynomial in x, y over Z. Keys are (x-exponent, y-exponent); zero
// coefficients are never stored.
class BivariatePoly {
 public:
  using Exponents = std::pair<int, int>;

  BivariatePoly() = default;

  static BivariatePoly monomial(int i, int j, BigInt coeff = 1) {
    BivariatePoly p;
    p.add_term(i, j, coeff);
    return p;
  }

  static BivariatePoly one_plus_x_plus_y() {
    BivariatePoly p;
    p.add_term(0, 0, 1);
    p.add_term(1, 0, 1);
    p.add_term(0, 1, 1);
    return p;
  }

  // 1 + x + ... + x^{len-1}
  static BivariatePoly geometric_x(int len) {
    BivariatePoly p;
    for (int k = 0; k < len; ++k) p.add_term(k, 0, 1);
    return p;
  }

  static BivariatePoly geometric_y(int len) {
    BivariatePoly p;
    for (int k = 0; k < len; ++k) p.add_term(0, k, 1);
    return p;
  }

  void add_term(int i, int j, const BigInt& coeff) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }

  // -1 for the zero polynomial.
  int degree_x() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }

  int degree_y() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }

  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
  }

  friend BivariatePoly operator*(const BigInt& k, const BivariatePoly& p) {
    BivariatePoly out;
    for (const auto& [e, c] : p.terms_) out.add_term(e.first, e.second, k * c);
    return out;
  }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      BigInt mag = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      const bool constant = e.first == 0 && e.second == 0;
      if (constant || mag != 1) out += mag.str();
      if (e.first >= 1) out += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
      if (e.second >= 1) out += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
    }
    return out;
  }

 private:
  std::map<Exponents, BigInt> terms_;
};

}  // namespace olympiad::algebra
