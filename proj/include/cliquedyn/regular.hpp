#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

enum class GenMode { Exhaustive, Random };
enum class Connectivity { Any, ConnectedOnly };

struct RegularGenSpec {
  std::size_t k = 3;
  std::size_t n = 4;
  GenMode mode = GenMode::Exhaustive;
  std::size_t count = 0;  // random mode only
  std::uint64_t seed = 0;  // random mode only
  Connectivity connectivity = Connectivity::Any;

  /// nk even and k < n (k = 0 allowed).
  bool satisfiable() const;
};

/// Largest order enumerated exhaustively without an explicit override.
std::size_t default_exhaustive_ceiling(std::size_t k);

struct EnumerationOptions {
  std::optional<std::size_t> ceiling;
  /// Receives non-fatal notes (e.g. unsatisfiable parameters).
  std::function<void(const std::string&)> warn;
};

/// One representative per isomorphism class of k-regular graphs of order n,
/// each in canonical labeling, sorted by graph6 string.
///
/// Backtracking fills vertices in index order. Untouched vertices are
/// interchangeable, so only the lowest-indexed ones are ever chosen as new
/// neighbors; the remaining duplicates are removed by canonical form.
/// Throws DomainError when n exceeds the ceiling or the mode is not exhaustive.
std::vector<Graph> enumerate_regular(const RegularGenSpec& spec,
                                     const EnumerationOptions& options = {});

/// Pairing model with per-pair rejection of loops and repeated edges,
/// restarting when stuck, followed by 200n random 2-switch moves.
/// Deterministic for a given (k, n, seed). Throws DomainError on bad
/// parameters and ResourceError after too many restarts.
Graph random_regular(std::size_t k, std::size_t n, std::uint64_t seed);

/// Graphs for spec: the exhaustive list or `count` seeded samples (sample i
/// uses seed + i).
std::vector<Graph> generate_regular(const RegularGenSpec& spec,
                                    const EnumerationOptions& options = {});

/// Replaces edges {a,b}, {u,v} with {a,u}, {b,v}. Requires both edges
/// present, four distinct vertices, and {a,u}, {b,v} absent; otherwise throws
/// DomainError naming the failed pair.
Graph two_switch(const Graph& g, Edge ab, Edge uv);

/// t(g) + t(complement g) == lorden_rhs(n, k). DomainError if g is not regular.
bool verify_lorden(const Graph& g);

/// Number of independent triples T of g with at least two members adjacent to x.
std::uint64_t count_cotriangles_at_vertex(const Graph& g, Vertex x);

/// Sum over independent triples of the number of vertices adjacent to at
/// least two of its members.
std::uint64_t count_cotriangle_incidences(const Graph& g);

/// Per-vertex view of the independent-triple cap for a k-regular graph with n >= 4k.
struct VertexCapCheck {
  Vertex vertex = 0;
  std::uint64_t count = 0;
  std::int64_t cap = 0;
  bool component_is_kk = false;  // component of the vertex is K_{k,k}
  bool within() const { return static_cast<std::int64_t>(count) <= cap; }
  bool attains() const { return static_cast<std::int64_t>(count) == cap; }
};
/// DomainError unless g is regular with n >= 4k.
std::vector<VertexCapCheck> check_vertex_caps(const Graph& g);

}  // namespace cliquedyn
