#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

/// Outcome of the clique-Helly test. When `is_helly` is false, `witness` is a
/// triangle whose extended triangle has no apex.
struct HellyVerdict {
  bool is_helly = true;
  std::optional<VertexSet> witness;
};

struct ConeResult {
  bool is_cone = false;
  std::optional<Vertex> apex;
};

std::vector<VertexSet> triangles(const Graph& g);
std::uint64_t triangle_count(const Graph& g);

/// Independent triples of g, i.e. the triangles of the complement.
std::vector<VertexSet> cotriangles(const Graph& g);
std::uint64_t cotriangle_count(const Graph& g);

/// Vertices adjacent to at least two members of triangle t (t included).
/// Throws DomainError if t is not a triangle of g.
VertexSet extended_triangle(const Graph& g, const VertexSet& t);

/// Universal-vertex test on the whole graph. K_1 is a cone; the empty graph is not.
ConeResult is_cone(const Graph& g);
/// Cone test on the subgraph induced by `s`, without materializing it.
ConeResult is_cone_within(const Graph& g, const VertexSet& s);

/// Decides the clique-Helly property through the extended-triangle criterion:
/// g is Helly iff every triangle's extended triangle induces a cone.
HellyVerdict is_helly(const Graph& g);
/// Every triangle whose extended triangle is not a cone, in listing order.
std::vector<VertexSet> helly_witnesses(const Graph& g);

inline constexpr std::size_t kHellyOracleCliqueCap = 20;

/// Direct check of the definition over all subfamilies of maximal cliques.
/// Throws ResourceError when the clique count exceeds `clique_cap`.
bool helly_brute_oracle(const Graph& g, std::size_t clique_cap = kHellyOracleCliqueCap);

/// Vertices with at least two neighbors in cotriangle t.
/// Throws DomainError unless t is an independent triple of g.
VertexSet cotriangle_adjacent_vertices(const Graph& g, const VertexSet& t);

/// Cotriangles of the k-regular graph g adjacent to fewer than k vertices.
/// Empty whenever the complement of g is Helly. Throws DomainError if g is
/// not k-regular.
std::vector<VertexSet> check_cotriangle_cover(const Graph& g, std::size_t k);

}  // namespace cliquedyn
