#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabeled graph. Equal forms iff isomorphic graphs.
struct CanonicalForm {
  std::string bytes;

  std::uint64_t hash() const;
  /// First 16 hex digits of hash(), for traces.
  std::string hash_prefix() const;
  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  /// label[v] is the canonical position of vertex v.
  Permutation label;
  Graph canonical_graph;
  CanonicalForm form;
  /// Automorphism generators discovered during the search.
  std::vector<Permutation> automorphisms;
  std::size_t leaves_visited = 0;
};

/// Canonical labeling by individualization-refinement: equitable partition
/// refinement, a search tree over target-cell choices, pruning by refinement
/// traces and by orbits of automorphisms found at equivalent leaves.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Orders up to this also mix the triangle count into invariant_hash.
inline constexpr std::size_t kTriangleHashOrder = 2048;

/// Cheap relabeling-invariant fingerprint: order, edge count, the sorted
/// (degree, neighbor degree sum) profile and, for small orders, the triangle
/// count. Different fingerprints imply non-isomorphic.
std::uint64_t invariant_hash(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// True iff perm is a bijection preserving adjacency in both directions.
bool is_automorphism(const Graph& g, const Permutation& perm);

/// Searches for an automorphism sigma with allowed(v, sigma(v)) for every v.
/// The predicate is applied as vertices get paired, pruning the search early.
std::optional<Permutation> find_automorphism(
    const Graph& g, const std::function<bool(Vertex, Vertex)>& allowed);

/// An automorphism moving every vertex to a non-neighbor other than itself.
/// The empty graph has none by convention.
std::optional<Permutation> find_coaffination(const Graph& g);
bool is_coaffination(const Graph& g, const Permutation& perm);

}  // namespace cliquedyn
