#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquedyn/vertex_set.hpp"

namespace cliquedyn {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
/// perm[v] is the image of vertex v.
using Permutation = std::vector<Vertex>;

class GraphBuilder;

/// Immutable finite simple graph on vertices 0..n-1 with bit-row adjacency.
///
/// Rows are stored contiguously, `words_per_row()` words each, so a row can be
/// handed out as a span and intersected word by word. Edits (complement,
/// switches, relabeling) always produce a new value.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  /// Builds from raw rows (n rows of words_for(n) words). Throws DomainError
  /// unless the rows describe a symmetric irreflexive relation.
  static Graph from_rows(std::size_t n, std::vector<Word> rows);
  /// As from_rows, but trusts the caller; used by internal producers whose
  /// output is symmetric by construction.
  static Graph adopt_rows(std::size_t n, std::vector<Word> rows);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  std::size_t words_per_row() const { return w_; }

  bool adjacent(Vertex u, Vertex v) const {
    return bits::test(row(u), v);
  }
  std::span<const Word> row(Vertex v) const {
    return {rows_.data() + v * w_, w_};
  }
  VertexSet neighbors(Vertex v) const { return VertexSet::from_words(n_, row(v)); }
  std::size_t degree(Vertex v) const { return bits::count(row(v)); }
  std::vector<std::size_t> degrees() const;
  /// The common degree if the graph is regular (n = 0 counts as 0-regular).
  std::optional<std::size_t> regular_degree() const;

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph; vertex i of the result is `vertices[i]`.
  Graph induced(std::span<const Vertex> vertices) const;
  /// Relabeled copy: vertex v becomes perm[v]. perm must be a bijection.
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Vertex sets of the connected components, ordered by smallest member.
  std::vector<VertexSet> components() const;
  bool connected() const;

  /// Checks symmetry, irreflexivity and padding bits; throws DomainError.
  void validate() const;

  bool operator==(const Graph& o) const = default;

 private:
  friend class GraphBuilder;
  friend Graph complement(const Graph& g);
  Graph(std::size_t n, std::vector<Word> rows);

  std::size_t n_ = 0;
  std::size_t w_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> rows_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const { return n_; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;
  Graph build() &&;
  Graph build() const&;

 private:
  void check(Vertex u, Vertex v) const;

  std::size_t n_;
  std::size_t w_;
  std::vector<Word> rows_;
};

// Standard families.
Graph make_empty(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
/// Complement of m disjoint edges; vertices 2i and 2i+1 are the non-adjacent pairs.
Graph make_octahedron(std::size_t m);
/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
Graph make_complete_bipartite(std::size_t a, std::size_t b);
Graph make_petersen();

// Algebra.
Graph complement(const Graph& g);
/// Blocks laid out in list order, no cross-block edges.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union of a and b plus every edge between them.
Graph join(const Graph& a, const Graph& b);

/// N(a) ∩ N(b); requires a != b, both in range.
VertexSet common_neighbors(const Graph& g, Vertex a, Vertex b);

// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace cliquedyn
