#include "cliquedyn/regular.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "cliquedyn/bounds.hpp"
#include "cliquedyn/canonical.hpp"
#include "cliquedyn/errors.hpp"
#include "cliquedyn/graph6.hpp"
#include "cliquedyn/helly.hpp"

namespace cliquedyn {

bool RegularGenSpec::satisfiable() const { return k < n && (n * k) % 2 == 0; }

std::size_t default_exhaustive_ceiling(std::size_t k) {
  if (k <= 2) return 16;
  if (k == 3) return 14;
  if (k == 4) return 11;
  return 10;
}

namespace {

class RegularBacktracker {
 public:
  RegularBacktracker(std::size_t n, std::size_t k, bool connected_only)
      : n_(n), k_(k), connected_only_(connected_only), adj_(n, 0), deg_(n, 0) {}

  std::vector<Graph> run() {
    fill(0);
    std::vector<Graph> out;
    out.reserve(classes_.size());
    for (auto& [key, g] : classes_) out.push_back(std::move(g));
    return out;
  }

 private:
  void connect(Vertex a, Vertex b) {
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
    ++deg_[a];
    ++deg_[b];
  }
  void disconnect(Vertex a, Vertex b) {
    adj_[a] &= ~(std::uint64_t{1} << b);
    adj_[b] &= ~(std::uint64_t{1} << a);
    --deg_[a];
    --deg_[b];
  }

  void emit() {
    GraphBuilder b(n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if ((adj_[u] >> v) & 1U) b.add_edge(u, v);
    CanonicalLabeling c = canonical_labeling(std::move(b).build());
    classes_.try_emplace(c.form.bytes, std::move(c.canonical_graph));
  }

  void fill(Vertex v) {
    if (v == n_) {
      emit();
      return;
    }
    if (deg_[v] == k_) {
      fill(v + 1);
      return;
    }
    if (connected_only_ && v > 0 && deg_[v] == 0) return;
    const std::size_t need = k_ - deg_[v];
    std::vector<Vertex> used, fresh;
    for (Vertex w = v + 1; w < n_; ++w) {
      if (deg_[w] == 0) fresh.push_back(w);
      else if (deg_[w] < k_) used.push_back(w);
    }
    if (used.size() + fresh.size() < need) return;
    for (std::size_t j = 0; j <= std::min(need, fresh.size()); ++j) {
      const std::size_t from_used = need - j;
      if (from_used > used.size()) continue;
      for (std::size_t i = 0; i < j; ++i) connect(v, fresh[i]);
      choose(v, used, 0, from_used);
      for (std::size_t i = 0; i < j; ++i) disconnect(v, fresh[i]);
    }
  }

  void choose(Vertex v, const std::vector<Vertex>& pool, std::size_t from, std::size_t left) {
    if (left == 0) {
      fill(v + 1);
      return;
    }
    for (std::size_t i = from; i + left <= pool.size(); ++i) {
      connect(v, pool[i]);
      choose(v, pool, i + 1, left - 1);
      disconnect(v, pool[i]);
    }
  }

  std::size_t n_, k_;
  bool connected_only_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> deg_;
  std::map<std::string, Graph> classes_;
};

}  // namespace

std::vector<Graph> enumerate_regular(const RegularGenSpec& spec, const EnumerationOptions& options) {
  if (spec.mode != GenMode::Exhaustive)
    throw DomainError("enumerate_regular: spec is not in exhaustive mode");
  const std::size_t ceiling = options.ceiling.value_or(default_exhaustive_ceiling(spec.k));
  if (spec.n > ceiling)
    throw DomainError("enumerate_regular: order " + std::to_string(spec.n) +
                      " exceeds exhaustive ceiling " + std::to_string(ceiling) +
                      " for k=" + std::to_string(spec.k));
  if (spec.n > 64) throw DomainError("enumerate_regular: orders above 64 unsupported");
  if (!spec.satisfiable()) {
    if (options.warn)
      options.warn("no " + std::to_string(spec.k) + "-regular graph on " +
                   std::to_string(spec.n) + " vertices");
    return {};
  }
  return RegularBacktracker(spec.n, spec.k, spec.connectivity == Connectivity::ConnectedOnly)
      .run();
}

Graph random_regular(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k >= n || (n * k) % 2 != 0)
    throw DomainError("random_regular: need nk even and k < n (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  std::mt19937_64 rng(seed);
  constexpr int kMaxRestarts = 10'000;
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    GraphBuilder b(n);
    std::vector<Vertex> points;
    points.reserve(n * k);
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), k, v);
    std::vector<Edge> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
      bool placed = false;
      for (std::size_t attempt = 0; attempt < 64 * points.size() && !placed; ++attempt) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const Vertex u = points[i], w = points[j];
        if (u == w || b.adjacent(u, w)) continue;
        b.add_edge(u, w);
        edges.emplace_back(u, w);
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        placed = true;
      }
      stuck = !placed;
    }
    if (stuck) continue;

    const std::size_t moves = 200 * n;
    if (edges.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
      std::bernoulli_distribution flip(0.5);
      for (std::size_t step = 0; step < moves; ++step) {
        const std::size_t e1 = pick_edge(rng), e2 = pick_edge(rng);
        if (e1 == e2) continue;
        auto [a, bb] = edges[e1];
        auto [u, v] = edges[e2];
        if (flip(rng)) std::swap(u, v);
        if (a == u || a == v || bb == u || bb == v) continue;
        if (b.adjacent(a, u) || b.adjacent(bb, v)) continue;
        b.remove_edge(a, bb);
        b.remove_edge(u, v);
        b.add_edge(a, u);
        b.add_edge(bb, v);
        edges[e1] = {a, u};
        edges[e2] = {bb, v};
      }
    }
    return std::move(b).build();
  }
  throw ResourceError("random_regular: pairing kept getting stuck", kMaxRestarts);
}

std::vector<Graph> generate_regular(const RegularGenSpec& spec, const EnumerationOptions& options) {
  if (spec.mode == GenMode::Exhaustive) return enumerate_regular(spec, options);
  std::vector<Graph> out;
  if (!spec.satisfiable()) {
    if (options.warn)
      options.warn("no " + std::to_string(spec.k) + "-regular graph on " +
                   std::to_string(spec.n) + " vertices");
    return out;
  }
  for (std::size_t i = 0; out.size() < spec.count; ++i) {
    Graph g = random_regular(spec.k, spec.n, spec.seed + i);
    if (spec.connectivity == Connectivity::ConnectedOnly && !g.connected()) {
      if (i > 100 * (spec.count + 1))
        throw ResourceError("generate_regular: too few connected samples", out.size());
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

Graph two_switch(const Graph& g, Edge ab, Edge uv) {
  const auto [a, b] = ab;
  const auto [u, v] = uv;
  auto name = [](Vertex x, Vertex y) {
    return "{" + std::to_string(x) + "," + std::to_string(y) + "}";
  };
  const std::size_t n = g.order();
  if (a >= n || b >= n || u >= n || v >= n) throw DomainError("two_switch: vertex out of range");
  if (a == b || a == u || a == v || b == u || b == v || u == v)
    throw DomainError("two_switch: vertices " + name(a, b) + " and " + name(u, v) +
                      " are not distinct");
  if (!g.adjacent(a, b)) throw DomainError("two_switch: " + name(a, b) + " is not an edge");
  if (!g.adjacent(u, v)) throw DomainError("two_switch: " + name(u, v) + " is not an edge");
  if (g.adjacent(a, u)) throw DomainError("two_switch: " + name(a, u) + " is already an edge");
  if (g.adjacent(b, v)) throw DomainError("two_switch: " + name(b, v) + " is already an edge");
  GraphBuilder out(g);
  out.remove_edge(a, b);
  out.remove_edge(u, v);
  out.add_edge(a, u);
  out.add_edge(b, v);
  return std::move(out).build();
}

bool verify_lorden(const Graph& g) {
  const auto k = g.regular_degree();
  if (!k) throw DomainError("verify_lorden: graph is not regular");
  if (g.order() == 0) return true;
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  const auto lhs = static_cast<std::int64_t>(triangle_count(g) + triangle_count(complement(g)));
  return lhs == lorden_rhs(n, static_cast<std::int64_t>(*k));
}

std::uint64_t count_cotriangles_at_vertex(const Graph& g, Vertex x) {
  if (x >= g.order()) throw DomainError("count_cotriangles_at_vertex: vertex out of range");
  const std::size_t n = g.order();
  const VertexSet nx = g.neighbors(x);
  const auto members = nx.members();
  const VertexSet all = VertexSet::full(n);
  std::uint64_t inside = 0, straddling = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Vertex a = members[i];
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex b = members[j];
      if (g.adjacent(a, b)) continue;
      VertexSet free = all - g.neighbors(a) - g.neighbors(b);
      free.erase(a);
      free.erase(b);
      // Third member outside N(x): counted once per pair.
      straddling += (free - nx).size();
      // Third member inside N(x) after b: each triple counted once.
      bits::for_each((free & nx).words(), [&](std::size_t c) {
        if (c > b) ++inside;
      });
    }
  }
  return inside + straddling;
}

std::uint64_t count_cotriangle_incidences(const Graph& g) {
  std::uint64_t total = 0;
  for (const auto& t : cotriangles(g)) total += cotriangle_adjacent_vertices(g, t).size();
  return total;
}

std::vector<VertexCapCheck> check_vertex_caps(const Graph& g) {
  const auto k = g.regular_degree();
  if (!k) throw DomainError("check_vertex_caps: graph is not regular");
  const auto n = static_cast<std::int64_t>(g.order());
  const auto kk = static_cast<std::int64_t>(*k);
  const std::int64_t cap = tnk_upper_bound(n, kk);
  const Graph model = make_complete_bipartite(*k, *k);
  std::vector<bool> in_kk(g.order(), false);
  for (const auto& comp : g.components()) {
    const auto block = comp.members();
    if (block.size() == 2 * *k && are_isomorphic(g.induced(block), model))
      for (Vertex v : block) in_kk[v] = true;
  }
  std::vector<VertexCapCheck> out;
  out.reserve(g.order());
  for (Vertex x = 0; x < g.order(); ++x)
    out.push_back({x, count_cotriangles_at_vertex(g, x), cap, in_kk[x]});
  return out;
}

}  // namespace cliquedyn
