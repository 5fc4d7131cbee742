#pragma once

// Exact return probabilities for uniform random walks on small simple graphs.
// Three independent routes: transition-matrix powering, the complete-graph
// recursion, and brute-force path enumeration.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "olympiad/numeric.hpp"

namespace olympiad::walk {

class WalkGraph {
 public:
  // Symmetric, loop-free adjacency lists. Duplicate edges are rejected.
  static WalkGraph from_adjacency(const std::vector<std::vector<int>>& lists) {
    const std::size_t m = lists.size();
    if (m == 0) throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
    WalkGraph g(m);
    for (std::size_t u = 0; u < m; ++u)
      for (int v : lists[u]) {
        if (v < 0 || static_cast<std::size_t>(v) >= m)
          throw Error(ErrorCode::InvalidGraph, "neighbour " + std::to_string(v) + " out of range");
        if (static_cast<std::size_t>(v) == u) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
        if (g.adjacent(u, static_cast<std::size_t>(v)))
          throw Error(ErrorCode::InvalidGraph, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.adj_[u * m + static_cast<std::size_t>(v)] = 1;
      }
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v)
        if (g.adjacent(u, v) != g.adjacent(v, u)) throw Error(ErrorCode::InvalidGraph, "adjacency is not symmetric");
    return g;
  }

  std::size_t vertex_count() const noexcept { return m_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * m_ + v] != 0; }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < m_; ++v) d += adjacent(u, v);
    return d;
  }

  std::vector<std::size_t> neighbours(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m_; ++v)
      if (adjacent(u, v)) out.push_back(v);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t u = 0; u < m_; ++u) e += degree(u);
    return e / 2;
  }

  bool regular() const {
    for (std::size_t u = 1; u < m_; ++u)
      if (degree(u) != degree(0)) return false;
    return true;
  }

 private:
  explicit WalkGraph(std::size_t m) : m_(m), adj_(m * m, 0) {}

  std::size_t m_;
  std::vector<std::uint8_t> adj_;

  friend WalkGraph complete_graph(int m);
};

inline WalkGraph complete_graph(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidGraph, "complete graph needs m >= 2, got " + std::to_string(m));
  WalkGraph g(static_cast<std::size_t>(m));
  for (std::size_t u = 0; u < g.m_; ++u)
    for (std::size_t v = 0; v < g.m_; ++v) g.adj_[u * g.m_ + v] = u != v;
  return g;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

// P[u][v] = 1/deg(u) for each edge uv. Rows of isolated vertices are zero.
inline RationalMatrix transition_matrix(const WalkGraph& g) {
  const std::size_t m = g.vertex_count();
  RationalMatrix p(m, std::vector<Rational>(m));
  for (std::size_t u = 0; u < m; ++u) {
    const std::size_t d = g.degree(u);
    if (d == 0) continue;
    for (std::size_t v = 0; v < m; ++v)
      if (g.adjacent(u, v)) p[u][v] = Rational(1, static_cast<long long>(d));
  }
  return p;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t m = a.size();
  RationalMatrix out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline RationalMatrix matrix_power(RationalMatrix base, unsigned k) {
  const std::size_t m = base.size();
  RationalMatrix out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) out[i][i] = 1;
  while (k) {
    if (k & 1U) out = multiply(out, base);
    base = multiply(base, base);
    k >>= 1U;
  }
  return out;
}

namespace detail {

inline void check_start(const WalkGraph& g, std::size_t start) {
  if (start >= g.vertex_count()) throw Error(ErrorCode::InvalidGraph, "start vertex out of range");
  if (g.degree(start) == 0) throw Error(ErrorCode::IsolatedVertex, "start vertex " + std::to_string(start) + " is isolated");
}

}  // namespace detail

inline Rational return_probability_matrix(const WalkGraph& g, std::size_t start, unsigned k) {
  detail::check_start(g, start);
  return matrix_power(transition_matrix(g), k)[start][start];
}

// On K_m: p_0 = 1, p_{t+1} = (1 - p_t) / (m - 1).
inline Rational return_probability_recursion(int m, unsigned k) {
  if (m < 2) throw Error(ErrorCode::InvalidGraph, "recursion needs m >= 2");
  Rational p = 1;
  for (unsigned t = 0; t < k; ++t) p = (1 - p) / (m - 1);
  return p;
}

struct PathCount {
  std::uint64_t returning = 0;
  std::uint64_t total = 0;
  // Exact return probability; weights each path by prod 1/deg when g is irregular.
  Rational probability = 0;
};

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

inline PathCount enumerate_paths_oracle(const WalkGraph& g, std::size_t start, unsigned k) {
  detail::check_start(g, start);
  std::size_t max_degree = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) max_degree = std::max(max_degree, g.degree(u));
  std::uint64_t bound = 1;
  for (unsigned t = 0; t < k; ++t) {
    bound *= max_degree;
    if (bound > kEnumerationGuard)
      throw Error(ErrorCode::EnumerationGuard, "more than " + std::to_string(kEnumerationGuard) + " paths");
  }

  std::vector<std::vector<std::size_t>> nbrs(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u) nbrs[u] = g.neighbours(u);
  const bool regular = g.regular();

  // For irregular graphs, a path's weight D / prod deg is an integer with
  // D = lcm(degrees)^k, which keeps the inner loop free of rationals.
  BigInt lcm_deg = 1;
  for (const auto& n : nbrs)
    if (!n.empty()) lcm_deg = boost::multiprecision::lcm(lcm_deg, BigInt(n.size()));
  BigInt common = regular ? BigInt(1) : BigInt(boost::multiprecision::pow(lcm_deg, k));

  PathCount out;
  BigInt weight_sum = 0;
  auto dfs = [&](auto&& self, std::size_t u, unsigned remaining, const BigInt& weight) -> void {
    if (remaining == 0) {
      ++out.total;
      if (u == start) {
        ++out.returning;
        if (!regular) weight_sum += weight;
      }
      return;
    }
    const BigInt next = regular ? weight : BigInt(weight / nbrs[u].size());
    for (auto v : nbrs[u]) self(self, v, remaining - 1, next);
  };
  dfs(dfs, start, k, common);

  out.probability = regular ? Rational(BigInt(out.returning), BigInt(out.total)) : Rational(weight_sum, common);
  return out;
}

}  // namespace olympiad::walk
