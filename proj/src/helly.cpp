#include "cliquedyn/helly.hpp"

#include <string>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/errors.hpp"

namespace cliquedyn {

namespace {

void check_triple(const Graph& g, const VertexSet& t, const char* what) {
  if (t.universe() != g.order() || t.size() != 3)
    throw DomainError(std::string(what) + ": expected a 3-vertex set on the host graph");
}

// Calls f(a, b, c) with a < b < c for every triangle.
template <class F>
void for_each_triangle(const Graph& g, F&& f) {
  const std::size_t w = g.words_per_row();
  std::vector<Word> common(w);
  for (Vertex a = 0; a < g.order(); ++a) {
    auto ra = g.row(a);
    for (std::size_t b = bits::next(ra, a + 1); b < g.order(); b = bits::next(ra, b + 1)) {
      auto rb = g.row(b);
      for (std::size_t i = 0; i < w; ++i) common[i] = ra[i] & rb[i];
      for (std::size_t c = bits::next(common, b + 1); c < g.order(); c = bits::next(common, c + 1))
        f(a, b, c);
    }
  }
}

}  // namespace

std::vector<VertexSet> triangles(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    out.push_back(VertexSet(g.order(), {a, b, c}));
  });
  return out;
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex a = 0; a < g.order(); ++a) {
    auto ra = g.row(a);
    for (std::size_t b = bits::next(ra, a + 1); b < g.order(); b = bits::next(ra, b + 1))
      total += bits::count_and(ra, g.row(b));
  }
  return total / 3;
}

std::vector<VertexSet> cotriangles(const Graph& g) { return triangles(complement(g)); }

std::uint64_t cotriangle_count(const Graph& g) { return triangle_count(complement(g)); }

VertexSet extended_triangle(const Graph& g, const VertexSet& t) {
  check_triple(g, t, "extended_triangle");
  const auto m = t.members();
  if (!g.adjacent(m[0], m[1]) || !g.adjacent(m[0], m[2]) || !g.adjacent(m[1], m[2]))
    throw DomainError("extended_triangle: set is not a triangle");
  const VertexSet na = g.neighbors(m[0]);
  const VertexSet nb = g.neighbors(m[1]);
  const VertexSet nc = g.neighbors(m[2]);
  return (na & nb) | (na & nc) | (nb & nc);
}

ConeResult is_cone_within(const Graph& g, const VertexSet& s) {
  const std::size_t need = s.size() - (s.empty() ? 0 : 1);
  ConeResult r;
  bits::for_each(s.words(), [&](std::size_t v) {
    if (r.is_cone) return;
    if (bits::count_and(g.row(v), s.words()) == need) {
      r.is_cone = true;
      r.apex = v;
    }
  });
  return r;
}

ConeResult is_cone(const Graph& g) { return is_cone_within(g, VertexSet::full(g.order())); }

namespace {

template <class F>
void scan_helly_failures(const Graph& g, F&& on_witness) {
  const std::size_t n = g.order();
  const std::size_t w = g.words_per_row();
  std::vector<Word> ab(w), ext(w);
  bool stop = false;
  for (Vertex a = 0; a < n && !stop; ++a) {
    auto ra = g.row(a);
    for (std::size_t b = bits::next(ra, a + 1); b < n && !stop; b = bits::next(ra, b + 1)) {
      auto rb = g.row(b);
      for (std::size_t i = 0; i < w; ++i) ab[i] = ra[i] & rb[i];
      for (std::size_t c = bits::next(ab, b + 1); c < n && !stop; c = bits::next(ab, c + 1)) {
        auto rc = g.row(c);
        for (std::size_t i = 0; i < w; ++i) ext[i] = ab[i] | (ra[i] & rc[i]) | (rb[i] & rc[i]);
        const std::size_t need = bits::count(ext) - 1;
        bool cone = false;
        for (std::size_t x = bits::next(ext, 0); x < n; x = bits::next(ext, x + 1)) {
          if (bits::count_and(g.row(x), ext) == need) {
            cone = true;
            break;
          }
        }
        if (!cone) stop = !on_witness(VertexSet(n, {a, b, c}));
      }
    }
  }
}

}  // namespace

HellyVerdict is_helly(const Graph& g) {
  HellyVerdict verdict;
  scan_helly_failures(g, [&](VertexSet t) {
    verdict.is_helly = false;
    verdict.witness = std::move(t);
    return false;
  });
  return verdict;
}

std::vector<VertexSet> helly_witnesses(const Graph& g) {
  std::vector<VertexSet> out;
  scan_helly_failures(g, [&](VertexSet t) {
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

namespace {

// Depth-first over subfamilies in index order. `allowed` holds the cliques
// meeting every chosen one; extending by any allowed clique keeps the family
// pairwise intersecting, so an empty running intersection is a counterexample.
bool helly_dfs(const std::vector<VertexSet>& cliques, const std::vector<std::uint32_t>& meets,
               std::size_t next, std::uint32_t allowed, const VertexSet& common) {
  for (std::size_t j = next; j < cliques.size(); ++j) {
    if (!((allowed >> j) & 1U)) continue;
    VertexSet narrowed = common & cliques[j];
    if (narrowed.empty()) return false;
    if (!helly_dfs(cliques, meets, j + 1, allowed & meets[j], narrowed)) return false;
  }
  return true;
}

}  // namespace

bool helly_brute_oracle(const Graph& g, std::size_t clique_cap) {
  if (clique_cap > 31) throw DomainError("helly_brute_oracle: clique cap above 31 unsupported");
  CliqueList list;
  try {
    list = maximal_cliques(g, clique_cap);
  } catch (const CliqueLimitExceeded&) {
    throw ResourceError("helly oracle: more than " + std::to_string(clique_cap) + " cliques",
                        clique_cap);
  }
  const auto& cl = list.cliques;
  std::vector<std::uint32_t> meets(cl.size(), 0);
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = 0; j < cl.size(); ++j)
      if (cl[i].intersects(cl[j])) meets[i] |= std::uint32_t{1} << j;
  const std::uint32_t all = cl.empty() ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << cl.size()) - 1);
  return helly_dfs(cl, meets, 0, all, VertexSet::full(g.order()));
}

VertexSet cotriangle_adjacent_vertices(const Graph& g, const VertexSet& t) {
  check_triple(g, t, "cotriangle_adjacent_vertices");
  const auto m = t.members();
  if (g.adjacent(m[0], m[1]) || g.adjacent(m[0], m[2]) || g.adjacent(m[1], m[2]))
    throw DomainError("cotriangle_adjacent_vertices: set is not independent");
  const VertexSet na = g.neighbors(m[0]);
  const VertexSet nb = g.neighbors(m[1]);
  const VertexSet nc = g.neighbors(m[2]);
  return (na & nb) | (na & nc) | (nb & nc);
}

std::vector<VertexSet> check_cotriangle_cover(const Graph& g, std::size_t k) {
  const auto deg = g.regular_degree();
  if (!deg || *deg != k)
    throw DomainError("check_cotriangle_cover: graph is not " + std::to_string(k) + "-regular");
  std::vector<VertexSet> violations;
  for (const auto& t : cotriangles(g))
    if (cotriangle_adjacent_vertices(g, t).size() < k) violations.push_back(t);
  return violations;
}

}  // namespace cliquedyn
