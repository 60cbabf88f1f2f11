#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cliquedyn/canonical.hpp"
#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph.hpp"

namespace cliquedyn {

/// A maximal join factor of g: a connected component of the complement,
/// taken back as an induced subgraph of g.
struct JoinSummand {
  std::vector<Vertex> block;
  Graph graph;
};

/// Maximal join decomposition, ordered by smallest vertex. Throws DomainError
/// on the empty graph.
std::vector<JoinSummand> join_summands(const Graph& g);

enum class CertificateKind { Octahedron, CycleComplement, ThreeSummands, ConnectedSum };

std::string to_string(CertificateKind kind);

/// Re-checkable reason why a graph is divergent.
///
/// Octahedron / CycleComplement: `isomorphism[i]` is the image in g of vertex
/// i of the standard model (make_octahedron(m) or complement(make_cycle(n))),
/// and `parameter` is m or n.
///
/// ThreeSummands / ConnectedSum: `blocks` are the join summands and
/// `coaffinations[j]` acts on block j in local indices (position within the
/// block). `parameter` is the number of summands. With more than three
/// summands, the first two blocks and the join of the rest form the three
/// coaffinable factors (a join of coaffinable graphs is coaffinable).
struct DivergenceCertificate {
  CertificateKind kind = CertificateKind::Octahedron;
  std::size_t parameter = 0;
  Permutation isomorphism;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Permutation> coaffinations;
};

/// First applicable certificate in the fixed order Octahedron,
/// CycleComplement, ThreeSummands, ConnectedSum.
std::optional<DivergenceCertificate> divergence_certificate(const Graph& g);

/// Independent re-check of a certificate against g.
bool validate_certificate(const Graph& g, const DivergenceCertificate& cert);

struct BehaviorLimits {
  std::size_t max_iterations = 30;
  std::size_t max_vertices = 20'000;
  std::size_t max_cliques = kDefaultCliqueCap;
};

enum class LimitKind { Iterations, Vertices, Cliques };
std::string to_string(LimitKind kind);

struct IterateRecord {
  std::size_t order = 0;
  std::size_t edges = 0;
  std::uint64_t invariant = 0;
  /// Set only when the iterate had to be compared against an earlier one.
  std::optional<std::uint64_t> canonical;
};

struct Convergent {
  std::size_t tail = 0;
  std::size_t period = 1;
};
struct Divergent {
  DivergenceCertificate certificate;
  std::size_t detected_at = 0;
};
struct Unknown {
  std::size_t iterations_done = 0;
  std::size_t max_order_seen = 0;
  LimitKind limit = LimitKind::Iterations;
};

struct BehaviorResult {
  std::variant<Convergent, Divergent, Unknown> status;
  std::vector<IterateRecord> trace;

  bool convergent() const { return std::holds_alternative<Convergent>(status); }
  bool divergent() const { return std::holds_alternative<Divergent>(status); }
  bool unknown() const { return std::holds_alternative<Unknown>(status); }
  std::string status_name() const;
};

/// Iterates the clique operator from g. Each iterate is first tested for a
/// divergence certificate, then against earlier iterates for isomorphism
/// (cheap invariants first, canonical forms only on a match). Tripping a
/// limit yields Unknown.
BehaviorResult classify_behavior(const Graph& g, const BehaviorLimits& limits = {});

/// Recomputes K^tail(g) and K^(tail+period)(g) and compares canonical forms.
bool verify_convergence(const Graph& g, const Convergent& c,
                        std::size_t clique_cap = kDefaultCliqueCap);

/// K^i(g), throwing CliqueLimitExceeded if an intermediate step trips the cap.
Graph iterated_clique_graph(const Graph& g, std::size_t i,
                            std::size_t clique_cap = kDefaultCliqueCap);

}  // namespace cliquedyn
