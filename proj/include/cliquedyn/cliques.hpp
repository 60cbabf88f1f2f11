#pragma once

#include <cstddef>
#include <vector>

#include "cliquedyn/errors.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn {

inline constexpr std::size_t kDefaultCliqueCap = 2'000'000;

/// Maximal cliques of a host graph, sorted by member list and duplicate free.
struct CliqueList {
  std::size_t host_order = 0;
  std::vector<VertexSet> cliques;

  std::size_t size() const { return cliques.size(); }
};

/// Thrown when enumeration would exceed the configured cap.
class CliqueLimitExceeded : public ResourceError {
 public:
  CliqueLimitExceeded(std::size_t cap)
      : ResourceError("maximal clique count exceeds cap of " + std::to_string(cap), cap) {}
};

/// All maximal cliques of g (Bron-Kerbosch with Tomita pivoting on bit rows).
CliqueList maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// Intersection graph of the maximal cliques. Vertex i of the returned graph
/// is clique i of the returned list.
struct CliqueGraph {
  Graph graph;
  CliqueList cliques;
};
CliqueGraph clique_graph(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// Intersection graph of an explicit family of vertex sets.
Graph intersection_graph(const std::vector<VertexSet>& family, std::size_t universe);

/// True iff every pair of members of `s` is adjacent.
bool is_complete(const Graph& g, const VertexSet& s);
/// True iff s is complete and no outside vertex is adjacent to all of s.
bool is_maximal_complete(const Graph& g, const VertexSet& s);

}  // namespace cliquedyn
