#pragma once

#include <string>

#include "olympiad/algebra/poly.hpp"
#include "olympiad/numeric.hpp"

namespace olympiad::algebra {

// a + b*i with exact integer parts.
struct GaussianInt {
  BigInt re = 0;
  BigInt im = 0;

  GaussianInt() = default;
  GaussianInt(BigInt a, BigInt b = 0) : re(std::move(a)), im(std::move(b)) {}

  static GaussianInt i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInt& operator+=(const GaussianInt& o) { return *this = *this + o; }
  GaussianInt& operator*=(const GaussianInt& o) { return *this = *this * o; }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  std::string str() const {
    if (im == 0) return re.str();
    const BigInt mag = abs(im);
    const std::string imag = (mag == 1 ? std::string() : mag.str()) + "i";
    if (re == 0) return (im < 0 ? "-" : "") + imag;
    return re.str() + (im < 0 ? " - " : " + ") + imag;
  }
};

inline GaussianInt pow(GaussianInt base, unsigned exp) {
  GaussianInt out(1);
  while (exp) {
    if (exp & 1U) out *= base;
    base *= base;
    exp >>= 1U;
  }
  return out;
}

inline GaussianInt eval_gaussian(const BivariatePoly& p, const GaussianInt& x, const GaussianInt& y) {
  GaussianInt sum;
  for (const auto& [e, c] : p.terms())
    sum += GaussianInt(c) * pow(x, static_cast<unsigned>(e.first)) * pow(y, static_cast<unsigned>(e.second));
  return sum;
}

}  // namespace olympiad::algebra
