#include "cliquedyn/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <string>

#include "cliquedyn/errors.hpp"

namespace cliquedyn {

namespace {

std::string vstr(Vertex v) { return std::to_string(v); }

}  // namespace

Graph::Graph(std::size_t n, std::vector<Word> rows)
    : n_(n), w_(words_for(n)), rows_(std::move(rows)) {
  m_ = bits::count(rows_) / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::from_rows(std::size_t n, std::vector<Word> rows) {
  if (rows.size() != n * words_for(n))
    throw DomainError("row buffer has " + std::to_string(rows.size()) +
                      " words, expected " + std::to_string(n * words_for(n)));
  Graph g(n, std::move(rows));
  g.validate();
  return g;
}

Graph Graph::adopt_rows(std::size_t n, std::vector<Word> rows) {
  if (rows.size() != n * words_for(n))
    throw DomainError("row buffer has " + std::to_string(rows.size()) +
                      " words, expected " + std::to_string(n * words_for(n)));
  return Graph(n, std::move(rows));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const std::size_t k = degree(0);
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (std::size_t v = bits::next(row(u), u + 1); v < n_; v = bits::next(row(u), v + 1))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const std::size_t k = vertices.size();
  GraphBuilder b(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (vertices[i] >= n_) throw DomainError("induced: vertex " + vstr(vertices[i]) + " out of range");
    for (std::size_t j = i + 1; j < k; ++j)
      if (adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  }
  return std::move(b).build();
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw DomainError("relabel: permutation has wrong length");
  std::vector<bool> seen(n_, false);
  for (Vertex p : perm) {
    if (p >= n_ || seen[p]) throw DomainError("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<Word> rows(n_ * w_, 0);
  for (Vertex u = 0; u < n_; ++u) {
    std::span<Word> out(rows.data() + perm[u] * w_, w_);
    bits::for_each(row(u), [&](std::size_t v) { bits::set(out, perm[v]); });
  }
  return Graph(n_, std::move(rows));
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = VertexSet::full(n_);
  while (!unseen.empty()) {
    VertexSet comp(n_);
    VertexSet frontier(n_);
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n_);
      bits::for_each(frontier.words(), [&](std::size_t v) {
        auto r = row(v);
        auto nw = next.words();
        for (std::size_t i = 0; i < w_; ++i) nw[i] |= r[i];
      });
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return components().size() <= 1; }

void Graph::validate() const {
  if (rows_.size() != n_ * w_) throw DomainError("graph: row storage size mismatch");
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(u, u)) throw DomainError("graph: loop at vertex " + vstr(u));
    if (n_ % kWordBits != 0 && (row(u).back() >> (n_ % kWordBits)) != 0)
      throw DomainError("graph: stray bits beyond order in row " + vstr(u));
    bits::for_each(row(u), [&](std::size_t v) {
      if (!adjacent(v, u))
        throw DomainError("graph: asymmetric pair " + vstr(u) + "," + vstr(v));
    });
  }
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), w_(words_for(n)), rows_(n * w_, 0) {}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.n_), w_(g.w_), rows_(g.rows_) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw DomainError("edge {" + vstr(u) + "," + vstr(v) + "} out of range for order " + vstr(n_));
  if (u == v) throw DomainError("loop at vertex " + vstr(u));
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  bits::set({rows_.data() + u * w_, w_}, v);
  bits::set({rows_.data() + v * w_, w_}, u);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  bits::reset({rows_.data() + u * w_, w_}, v);
  bits::reset({rows_.data() + v * w_, w_}, u);
}

bool GraphBuilder::adjacent(Vertex u, Vertex v) const {
  check(u, v);
  return bits::test({rows_.data() + u * w_, w_}, v);
}

Graph GraphBuilder::build() && { return Graph(n_, std::move(rows_)); }
Graph GraphBuilder::build() const& { return Graph(n_, rows_); }

Graph make_empty(std::size_t n) { return GraphBuilder(n).build(); }

Graph make_complete(std::size_t n) { return complement(make_empty(n)); }

Graph make_path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices, got " + vstr(n));
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph make_octahedron(std::size_t m) {
  if (m < 1) throw DomainError("octahedron index must be at least 1");
  GraphBuilder b(2 * m);
  for (Vertex i = 0; i < m; ++i) b.add_edge(2 * i, 2 * i + 1);
  return complement(std::move(b).build());
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  return join(make_empty(a), make_empty(b));
}

Graph make_petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer cycle
    b.add_edge(i, i + 5);                // spokes
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t w = g.words_per_row();
  std::vector<Word> rows(n * w);
  const VertexSet all = VertexSet::full(n);
  for (Vertex u = 0; u < n; ++u) {
    auto r = g.row(u);
    for (std::size_t i = 0; i < w; ++i) rows[u * w + i] = ~r[i] & all.words()[i];
    bits::reset({rows.data() + u * w, w}, u);
  }
  return Graph(n, std::move(rows));
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw DomainError("disjoint_union of an empty list");
  std::size_t n = 0;
  for (const auto& p : parts) n += p.order();
  GraphBuilder b(n);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) b.add_edge(u + offset, v + offset);
    offset += p.order();
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

Graph join(const Graph& a, const Graph& b) {
  GraphBuilder out(disjoint_union(a, b));
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return std::move(out).build();
}

VertexSet common_neighbors(const Graph& g, Vertex a, Vertex b) {
  if (a >= g.order() || b >= g.order())
    throw DomainError("common_neighbors: vertex out of range");
  if (a == b) throw DomainError("common_neighbors: vertices must differ");
  return g.neighbors(a) & g.neighbors(b);
}

Graph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph parse_edge_list(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_number = [&](const char* what) -> std::size_t {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(std::string("edge list: expected ") + what, pos);
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      ++pos;
    }
    return value;
  };
  const std::size_t n = read_number("vertex count");
  const std::size_t m = read_number("edge count");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t at = pos;
    const std::size_t u = read_number("edge endpoint");
    const std::size_t v = read_number("edge endpoint");
    if (u >= n || v >= n || u == v)
      throw ParseError("edge list: invalid edge " + vstr(u) + " " + vstr(v), at);
    b.add_edge(u, v);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("edge list: trailing data", pos);
  return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cliquedyn
