#pragma once

// Impossibility certificates for the stone game when 3 does not divide n.
//
// Suppose a nonempty sequence returns the board to empty, so T = C + R.
// Evaluate at (w^a, w^b) for nontrivial n-th roots of unity, 1 <= a, b <= n-1:
// C and R vanish there (each carries a factor 1 + t + ... + t^{n-1}), and
// 1 + w^a + w^b never vanishes unless 3 | n. Hence P = sum t_ij x^i y^j is
// zero on an (n-1) x (n-1) grid of distinct nodes while its degree in each
// variable is at most n-2, so P = 0. Then C + R = 0 with nonnegative counts,
// and the sequence was empty.
//
// A certificate records every evaluation the argument needs so that
// verify_certificate() can recompute them independently.

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "olympiad/algebra/cyclotomic.hpp"
#include "olympiad/algebra/method.hpp"
#include "olympiad/json_util.hpp"

namespace olympiad::algebra {

struct PairCheck {
  int a = 0;
  int b = 0;
  bool c_vanishes = false;
  bool r_vanishes = false;
  bool one_plus_nonzero = false;
  friend bool operator==(const PairCheck&, const PairCheck&) = default;
};

struct ImpossibilityCertificate {
  int n = 0;
  std::vector<PairCheck> pairs;
  IntPoly phi;
  int degree_bound = 0;
  int distinct_nodes = 0;
  friend bool operator==(const ImpossibilityCertificate&, const ImpossibilityCertificate&) = default;
};

// Some (a, b) in [1, n-1]^2 with 1 + w^a + w^b = 0. Lexicographic scan, so
// for 3 | n the result is (n/3, 2n/3).
inline std::optional<std::pair<int, int>> find_degenerate_pair(int n) {
  board::check_side(n);
  const auto one_plus = BivariatePoly::one_plus_x_plus_y();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (eval_at_roots(one_plus, a, b, n).is_zero()) return std::pair{a, b};
  return std::nullopt;
}

namespace detail {

inline MoveCounts unit_counts(int n) {
  MoveCounts mc(n);
  for (int k = 0; k < n; ++k) mc.c(k) = mc.r(k) = 1;
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) mc.t(i, j) = 1;
  return mc;
}

struct PairEvaluator {
  explicit PairEvaluator(int n) : n(n), unit(build_tcr(unit_counts(n))) {}

  PairCheck check(int a, int b) const {
    PairCheck pc{a, b, false, false, false};
    pc.c_vanishes = eval_at_roots(BivariatePoly::geometric_y(n), a, b, n).is_zero() &&
                    eval_at_roots(unit.C, a, b, n).is_zero();
    pc.r_vanishes = eval_at_roots(BivariatePoly::geometric_x(n), a, b, n).is_zero() &&
                    eval_at_roots(unit.R, a, b, n).is_zero();
    pc.one_plus_nonzero = !eval_at_roots(BivariatePoly::one_plus_x_plus_y(), a, b, n).is_zero();
    return pc;
  }

  int n;
  TCR unit;
};

// Number of distinct values among w^1, ..., w^{n-1}.
inline int count_distinct_nodes(int n) {
  std::vector<CyclotomicInt> nodes;
  for (int a = 1; a < n; ++a) {
    auto w = CyclotomicInt::root_power(n, a);
    bool seen = false;
    for (const auto& v : nodes) seen = seen || (w - v).is_zero();
    if (!seen) nodes.push_back(std::move(w));
  }
  return static_cast<int>(nodes.size());
}

}  // namespace detail

inline ImpossibilityCertificate certify_impossible(int n) {
  board::check_side(n);
  if (auto pair = find_degenerate_pair(n)) throw DivisibleBy3Error(n, *pair);
  ImpossibilityCertificate cert;
  cert.n = n;
  cert.phi = cyclotomic_polynomial(n);
  const detail::PairEvaluator eval(n);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) cert.pairs.push_back(eval.check(a, b));
  cert.distinct_nodes = detail::count_distinct_nodes(n);
  const BivariatePoly p = placement_polynomial(detail::unit_counts(n));
  cert.degree_bound = std::max(p.degree_x(), p.degree_y());
  return cert;
}

// Recomputes every attested fact; any mismatch, gap or duplicate fails.
inline bool verify_certificate(const ImpossibilityCertificate& cert) {
  const int n = cert.n;
  if (n < 2 || n % 3 == 0) return false;
  try {
    if (cert.phi != cyclotomic_polynomial(n)) return false;
    const std::size_t expected = static_cast<std::size_t>(n - 1) * (n - 1);
    if (cert.pairs.size() != expected) return false;
    std::set<std::pair<int, int>> seen;
    const detail::PairEvaluator eval(n);
    for (const auto& pc : cert.pairs) {
      if (pc.a < 1 || pc.b < 1 || pc.a >= n || pc.b >= n) return false;
      if (!seen.emplace(pc.a, pc.b).second) return false;
      if (!pc.c_vanishes || !pc.r_vanishes || !pc.one_plus_nonzero) return false;
      if (eval.check(pc.a, pc.b) != pc) return false;
    }
    if (cert.distinct_nodes != n - 1 || detail::count_distinct_nodes(n) != n - 1) return false;
    // Degree of P in each variable must stay below the node count.
    const BivariatePoly p = placement_polynomial(detail::unit_counts(n));
    if (cert.degree_bound != n - 2) return false;
    if (p.degree_x() > cert.degree_bound || p.degree_y() > cert.degree_bound) return false;
    return cert.degree_bound < cert.distinct_nodes;
  } catch (const std::exception&) {
    return false;
  }
}

inline nlohmann::json to_json(const ImpossibilityCertificate& cert) {
  using nlohmann::json;
  json pairs = json::array();
  for (const auto& pc : cert.pairs)
    pairs.push_back({{"a", pc.a},
                     {"b", pc.b},
                     {"c_vanishes", pc.c_vanishes},
                     {"r_vanishes", pc.r_vanishes},
                     {"one_plus", pc.one_plus_nonzero ? "nonzero" : "zero"}});
  json phi = json::array();
  for (const auto& c : cert.phi.coeffs()) phi.push_back(c.convert_to<long long>());
  return {{"n", cert.n},
          {"pairs", std::move(pairs)},
          {"phi_n", std::move(phi)},
          {"degree_bound", cert.degree_bound},
          {"distinct_nodes", cert.distinct_nodes}};
}

inline ImpossibilityCertificate certificate_from_json(const nlohmann::json& j) {
  using namespace json_util;
  constexpr const char* what = "certificate";
  only_keys(j, {"n", "pairs", "phi_n", "degree_bound", "distinct_nodes"}, what);
  ImpossibilityCertificate cert;
  cert.n = int_field(j, "n", what);
  cert.degree_bound = int_field(j, "degree_bound", what);
  cert.distinct_nodes = int_field(j, "distinct_nodes", what);
  const auto& phi = field(j, "phi_n", what);
  if (!phi.is_array()) throw Error(ErrorCode::Parse, "'phi_n' must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& c : phi) {
    if (!c.is_number_integer()) throw Error(ErrorCode::Parse, "'phi_n' entries must be integers");
    coeffs.emplace_back(c.get<long long>());
  }
  cert.phi = IntPoly(std::move(coeffs));
  const auto& pairs = field(j, "pairs", what);
  if (!pairs.is_array()) throw Error(ErrorCode::Parse, "'pairs' must be an array");
  for (const auto& p : pairs) {
    only_keys(p, {"a", "b", "c_vanishes", "r_vanishes", "one_plus"}, "pair");
    PairCheck pc;
    pc.a = int_field(p, "a", "pair");
    pc.b = int_field(p, "b", "pair");
    pc.c_vanishes = bool_field(p, "c_vanishes", "pair");
    pc.r_vanishes = bool_field(p, "r_vanishes", "pair");
    const std::string one_plus = string_field(p, "one_plus", "pair");
    if (one_plus != "nonzero" && one_plus != "zero") throw Error(ErrorCode::Parse, "'one_plus' must be nonzero|zero");
    pc.one_plus_nonzero = one_plus == "nonzero";
    cert.pairs.push_back(pc);
  }
  return cert;
}

}  // namespace olympiad::algebra
