#pragma once

// Exact arithmetic in Z[w], w a primitive n-th root of unity, represented as
// integer polynomials in t reduced modulo the cyclotomic polynomial Phi_n(t).
// Phi_n is the minimal polynomial of w, so an integer polynomial q satisfies
// q(w) = 0 exactly when Phi_n divides q.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "olympiad/algebra/poly.hpp"

namespace olympiad::algebra {

namespace detail {

inline IntPoly compute_cyclotomic(int n, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // t^n - 1 = prod_{d | n} Phi_d(t)
  IntPoly rest = IntPoly::monomial(static_cast<std::size_t>(n)) - IntPoly::monomial(0);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = rest.divmod_monic(compute_cyclotomic(d, memo));
    if (!r.is_zero()) throw std::logic_error("inexact division computing Phi_" + std::to_string(n));
    rest = std::move(q);
  }
  memo.emplace(n, rest);
  return rest;
}

}  // namespace detail

inline IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  std::lock_guard lock(mu);
  return detail::compute_cyclotomic(n, memo);
}

class CyclotomicInt {
 public:
  // The residue of `rep` (a polynomial in t) in Z[t] / Phi_n.
  CyclotomicInt(int order, const IntPoly& rep)
      : order_(order), phi_(std::make_shared<const IntPoly>(cyclotomic_polynomial(order))) {
    coeffs_ = reduce(rep);
  }

  static CyclotomicInt root_power(int order, long long k) {
    const long long m = ((k % order) + order) % order;
    return CyclotomicInt(order, IntPoly::monomial(static_cast<std::size_t>(m)));
  }

  int order() const noexcept { return order_; }
  const IntPoly& modulus() const noexcept { return *phi_; }

  // Always degree(Phi_n) entries.
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
    same_order(a, b);
    return CyclotomicInt(a.order_, a.as_poly() + b.as_poly());
  }
  friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
    same_order(a, b);
    return CyclotomicInt(a.order_, a.as_poly() - b.as_poly());
  }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    same_order(a, b);
    return CyclotomicInt(a.order_, a.as_poly() * b.as_poly());
  }
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  IntPoly as_poly() const { return IntPoly(coeffs_); }

 private:
  std::vector<BigInt> reduce(const IntPoly& rep) const {
    std::vector<BigInt> out = rep.mod_monic(*phi_).coeffs();
    out.resize(static_cast<std::size_t>(phi_->degree()));
    return out;
  }

  static void same_order(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("cyclotomic orders differ");
  }

  int order_;
  std::shared_ptr<const IntPoly> phi_;
  std::vector<BigInt> coeffs_;
};

// p(w^a, w^b) for a primitive n-th root w: x^i y^j becomes t^{(a*i + b*j) mod n}.
inline CyclotomicInt eval_at_roots(const BivariatePoly& p, int a, int b, int n) {
  if (n < 2) throw std::invalid_argument("eval_at_roots needs n >= 2");
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("exponents must lie in [0, n)");
  std::vector<BigInt> folded(static_cast<std::size_t>(n));
  for (const auto& [e, c] : p.terms()) {
    const long long k = (static_cast<long long>(a) * e.first + static_cast<long long>(b) * e.second) % n;
    folded[static_cast<std::size_t>(k)] += c;
  }
  return CyclotomicInt(n, IntPoly(std::move(folded)));
}

}  // namespace olympiad::algebra
