// Brute-force reference implementations used only by tests. They work on a
// plain adjacency matrix and share no code with the library algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const cliquedyn::Graph& g) {
  const std::size_t n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) m[u][v] = u != v && g.adjacent(u, v);
  return m;
}

inline cliquedyn::Graph from_matrix(const Matrix& m) {
  std::vector<cliquedyn::Edge> edges;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v)
      if (m[u][v]) edges.emplace_back(u, v);
  return cliquedyn::Graph::from_edges(m.size(), edges);
}

inline cliquedyn::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<cliquedyn::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return cliquedyn::Graph::from_edges(n, edges);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Subsets as sorted member lists.
using Family = std::set<std::vector<std::size_t>>;

inline bool complete_mask(const Matrix& m, std::uint32_t mask) {
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v)
      if ((mask >> u & 1U) && (mask >> v & 1U) && !m[u][v]) return false;
  return true;
}

/// Maximal cliques by filtering all 2^n subsets (n <= 20).
inline Family maximal_cliques(const cliquedyn::Graph& g) {
  const Matrix m = matrix(g);
  const std::size_t n = m.size();
  Family out;
  if (n == 0) return out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (!complete_mask(m, mask)) continue;
    bool maximal = true;
    for (std::size_t x = 0; x < n && maximal; ++x)
      if (!(mask >> x & 1U) && complete_mask(m, mask | (1U << x))) maximal = false;
    if (!maximal) continue;
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1U) members.push_back(x);
    out.insert(members);
  }
  return out;
}

inline std::size_t triangle_count(const cliquedyn::Graph& g) {
  const Matrix m = matrix(g);
  std::size_t t = 0;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      for (std::size_t c = b + 1; c < m.size(); ++c) t += m[a][b] && m[b][c] && m[a][c];
  return t;
}

inline std::size_t component_count(const cliquedyn::Graph& g) {
  const Matrix m = matrix(g);
  std::vector<std::size_t> comp(m.size(), m.size());
  std::size_t count = 0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (comp[s] != m.size()) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[u][v] && comp[v] == m.size()) {
          comp[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  return count;
}

/// Number of permutations p with adj(u,v) == adj(p(u),p(v)) for all pairs.
inline std::size_t automorphism_count(const cliquedyn::Graph& g) {
  const Matrix m = matrix(g);
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < m.size() && ok; ++u)
      for (std::size_t v = u + 1; v < m.size() && ok; ++v) ok = m[u][v] == m[p[u]][p[v]];
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Isomorphism by trying every bijection (n <= 9).
inline bool isomorphic(const cliquedyn::Graph& g, const cliquedyn::Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  const Matrix a = matrix(g), b = matrix(h);
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u)
      for (std::size_t v = u + 1; v < a.size() && ok; ++v) ok = a[u][v] == b[p[u]][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Intersection graph of the brute-force clique family, in family order.
inline cliquedyn::Graph clique_graph(const cliquedyn::Graph& g) {
  const Family fam = oracle::maximal_cliques(g);
  const std::vector<std::vector<std::size_t>> list(fam.begin(), fam.end());
  Matrix m(list.size(), std::vector<bool>(list.size(), false));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(list[i].begin(), list[i].end(), list[j].begin(), list[j].end(),
                            std::back_inserter(common));
      m[i][j] = m[j][i] = !common.empty();
    }
  return from_matrix(m);
}

/// Labeled k-regular graphs on n vertices, by edge-by-edge backtracking.
class LabeledRegular {
 public:
  LabeledRegular(std::size_t n, std::size_t k) : n_(n), k_(k), deg_(n, 0), m_(n, std::vector<bool>(n, false)) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }

  template <class F>
  void each(F&& f) {
    go(0, f);
  }

  std::size_t count() {
    std::size_t c = 0;
    each([&](const Matrix&) { ++c; });
    return c;
  }

 private:
  template <class F>
  void go(std::size_t i, F& f) {
    if (i == pairs_.size()) {
      if (std::all_of(deg_.begin(), deg_.end(), [&](std::size_t d) { return d == k_; })) f(m_);
      return;
    }
    const auto [u, v] = pairs_[i];
    // Vertex u sees no later pairs after (u, n-1); it must be full by then.
    const bool last_for_u = v == n_ - 1;
    if (deg_[u] < k_ && deg_[v] < k_) {
      ++deg_[u];
      ++deg_[v];
      m_[u][v] = m_[v][u] = true;
      if (!last_for_u || deg_[u] == k_) go(i + 1, f);
      m_[u][v] = m_[v][u] = false;
      --deg_[u];
      --deg_[v];
    }
    if (!last_for_u || deg_[u] == k_) go(i + 1, f);
  }

  std::size_t n_, k_;
  std::vector<std::size_t> deg_;
  Matrix m_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace oracle
