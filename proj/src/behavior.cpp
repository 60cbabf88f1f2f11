#include "cliquedyn/behavior.hpp"

#include <algorithm>
#include <map>

#include "cliquedyn/errors.hpp"

namespace cliquedyn {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Octahedron: return "Octahedron";
    case CertificateKind::CycleComplement: return "CycleComplement";
    case CertificateKind::ThreeSummands: return "ThreeSummands";
    case CertificateKind::ConnectedSum: return "ConnectedSum";
  }
  return "?";
}

std::string to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::Iterations: return "iteration-cap";
    case LimitKind::Vertices: return "vertex-cap";
    case LimitKind::Cliques: return "clique-cap";
  }
  return "?";
}

std::string BehaviorResult::status_name() const {
  if (convergent()) return "Convergent";
  if (divergent()) return "Divergent";
  return "Unknown";
}

std::vector<JoinSummand> join_summands(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw DomainError("join_summands: empty graph");
  const std::size_t w = g.words_per_row();
  const VertexSet all = VertexSet::full(n);
  VertexSet unseen = all;
  std::vector<JoinSummand> out;
  while (!unseen.empty()) {
    VertexSet comp(n);
    VertexSet frontier(n);
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      bits::for_each(frontier.words(), [&](std::size_t v) {
        auto r = g.row(v);
        auto nw = next.words();
        for (std::size_t i = 0; i < w; ++i) nw[i] |= ~r[i];
      });
      next &= all;
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    JoinSummand s;
    s.block = comp.members();
    s.graph = g.induced(s.block);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::optional<DivergenceCertificate> octahedron_certificate(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 6 || n % 2 != 0) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != n - 2) return std::nullopt;
  DivergenceCertificate c;
  c.kind = CertificateKind::Octahedron;
  c.parameter = n / 2;
  c.isomorphism.reserve(n);
  std::vector<bool> used(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (used[v]) continue;
    VertexSet non = VertexSet::full(n) - g.neighbors(v);
    non.erase(v);
    const Vertex u = non.first();
    used[v] = used[u] = true;
    c.isomorphism.push_back(v);
    c.isomorphism.push_back(u);
  }
  return c;
}

std::optional<DivergenceCertificate> cycle_complement_certificate(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 8) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != n - 3) return std::nullopt;
  // The complement is 2-regular; walk it and require a single cycle.
  auto non_neighbors = [&](Vertex v) {
    VertexSet s = VertexSet::full(n) - g.neighbors(v);
    s.erase(v);
    return s.members();
  };
  Permutation walk;
  walk.reserve(n);
  Vertex prev = n, cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    walk.push_back(cur);
    const auto nn = non_neighbors(cur);
    const Vertex next = nn[0] != prev ? nn[0] : nn[1];
    prev = cur;
    cur = next;
  }
  if (cur != 0) return std::nullopt;
  std::vector<Vertex> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  DivergenceCertificate c;
  c.kind = CertificateKind::CycleComplement;
  c.parameter = n;
  c.isomorphism = std::move(walk);
  return c;
}

std::optional<DivergenceCertificate> summand_certificate(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  auto summands = join_summands(g);
  if (summands.size() < 2) return std::nullopt;
  if (summands.size() == 2 && !summands[0].graph.connected() && !summands[1].graph.connected())
    return std::nullopt;
  DivergenceCertificate c;
  c.parameter = summands.size();
  for (const auto& s : summands) {
    auto sigma = find_coaffination(s.graph);
    if (!sigma) return std::nullopt;
    c.blocks.push_back(s.block);
    c.coaffinations.push_back(std::move(*sigma));
  }
  c.kind = summands.size() >= 3 ? CertificateKind::ThreeSummands : CertificateKind::ConnectedSum;
  return c;
}

bool matches_model(const Graph& g, const Graph& model, const Permutation& iso) {
  if (model.order() != g.order() || iso.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : iso) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (Vertex i = 0; i < model.order(); ++i)
    for (Vertex j = i + 1; j < model.order(); ++j)
      if (model.adjacent(i, j) != g.adjacent(iso[i], iso[j])) return false;
  return true;
}

}  // namespace

std::optional<DivergenceCertificate> divergence_certificate(const Graph& g) {
  if (auto c = octahedron_certificate(g)) return c;
  if (auto c = cycle_complement_certificate(g)) return c;
  return summand_certificate(g);
}

bool validate_certificate(const Graph& g, const DivergenceCertificate& cert) {
  const std::size_t n = g.order();
  switch (cert.kind) {
    case CertificateKind::Octahedron:
      return cert.parameter >= 3 && 2 * cert.parameter == n &&
             matches_model(g, make_octahedron(cert.parameter), cert.isomorphism);
    case CertificateKind::CycleComplement:
      return cert.parameter >= 8 && cert.parameter == n &&
             matches_model(g, complement(make_cycle(cert.parameter)), cert.isomorphism);
    case CertificateKind::ThreeSummands:
    case CertificateKind::ConnectedSum:
      break;
  }
  const std::size_t parts = cert.blocks.size();
  if (parts != cert.coaffinations.size() || parts != cert.parameter) return false;
  if (cert.kind == CertificateKind::ThreeSummands && parts < 3) return false;
  if (cert.kind == CertificateKind::ConnectedSum && parts != 2) return false;
  std::vector<std::size_t> owner(n, parts);
  for (std::size_t b = 0; b < parts; ++b) {
    if (cert.blocks[b].empty()) return false;
    for (Vertex v : cert.blocks[b]) {
      if (v >= n || owner[v] != parts) return false;
      owner[v] = b;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] == parts) return false;
  // Every pair across blocks must be an edge of g.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (owner[u] != owner[v] && !g.adjacent(u, v)) return false;
  bool some_connected = false;
  for (std::size_t b = 0; b < parts; ++b) {
    const Graph part = g.induced(cert.blocks[b]);
    if (!is_coaffination(part, cert.coaffinations[b])) return false;
    some_connected = some_connected || part.connected();
  }
  return cert.kind == CertificateKind::ThreeSummands || some_connected;
}

Graph iterated_clique_graph(const Graph& g, std::size_t i, std::size_t clique_cap) {
  Graph cur = g;
  for (std::size_t step = 0; step < i; ++step) cur = clique_graph(cur, clique_cap).graph;
  return cur;
}

BehaviorResult classify_behavior(const Graph& g, const BehaviorLimits& limits) {
  BehaviorResult result;
  std::vector<Graph> iterates;
  std::vector<std::optional<CanonicalForm>> forms;
  std::size_t max_order = 0;
  auto form_of = [&](std::size_t i) -> const CanonicalForm& {
    if (!forms[i]) {
      forms[i] = canonical_form(iterates[i]);
      result.trace[i].canonical = forms[i]->hash();
    }
    return *forms[i];
  };

  Graph cur = g;
  for (std::size_t i = 0;; ++i) {
    max_order = std::max(max_order, cur.order());
    result.trace.push_back({cur.order(), cur.edge_count(), invariant_hash(cur), std::nullopt});
    iterates.push_back(cur);
    forms.emplace_back();

    if (auto cert = divergence_certificate(cur)) {
      result.status = Divergent{std::move(*cert), i};
      return result;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (result.trace[j].invariant != result.trace[i].invariant) continue;
      if (form_of(j) == form_of(i)) {
        result.status = Convergent{j, i - j};
        return result;
      }
    }
    if (i >= limits.max_iterations) {
      result.status = Unknown{i, max_order, LimitKind::Iterations};
      return result;
    }
    const bool clique_bound = limits.max_cliques <= limits.max_vertices;
    const std::size_t cap = clique_bound ? limits.max_cliques : limits.max_vertices;
    try {
      cur = clique_graph(cur, cap).graph;
    } catch (const CliqueLimitExceeded&) {
      result.status =
          Unknown{i, max_order, clique_bound ? LimitKind::Cliques : LimitKind::Vertices};
      return result;
    }
  }
}

bool verify_convergence(const Graph& g, const Convergent& c, std::size_t clique_cap) {
  if (c.period == 0) return false;
  const Graph a = iterated_clique_graph(g, c.tail, clique_cap);
  const Graph b = iterated_clique_graph(a, c.period, clique_cap);
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cliquedyn
