#include "cliquedyn/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>
#include <numeric>
#include <span>

#include "cliquedyn/graph6.hpp"
#include "cliquedyn/helly.hpp"

namespace cliquedyn {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix(h ^ splitmix(v)); }

// Ordered partition of the vertex set. Cells are contiguous ranges of
// `elems`; cell_end is only meaningful at a cell's start position.
struct Partition {
  std::vector<Vertex> elems;
  std::vector<std::size_t> pos;
  std::vector<std::size_t> cell_start;
  std::vector<std::size_t> cell_end;
  std::size_t cells = 0;

  explicit Partition(std::size_t n) : elems(n), pos(n), cell_start(n, 0), cell_end(n, n) {
    std::iota(elems.begin(), elems.end(), Vertex{0});
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    cells = n ? 1 : 0;
  }

  std::size_t order() const { return elems.size(); }
  bool discrete() const { return cells == elems.size(); }

  std::size_t first_nonsingleton() const {
    for (std::size_t s = 0; s < order(); s = cell_end[s])
      if (cell_end[s] - s > 1) return s;
    return order();
  }

  /// Splits v off the front of its cell; returns the new singleton's start.
  std::size_t individualize(Vertex v) {
    const std::size_t s = cell_start[pos[v]];
    const std::size_t e = cell_end[s];
    const std::size_t pv = pos[v];
    std::swap(elems[s], elems[pv]);
    pos[elems[pv]] = pv;
    pos[v] = s;
    cell_end[s] = s + 1;
    cell_end[s + 1] = e;
    for (std::size_t i = s + 1; i < e; ++i) cell_start[i] = s + 1;
    ++cells;
    return s;
  }

  bool same_shape(const Partition& o) const {
    if (cells != o.cells) return false;
    for (std::size_t s = 0; s < order(); s = cell_end[s])
      if (o.cell_start[s] != s || o.cell_end[s] != cell_end[s]) return false;
    return true;
  }
};

// Equitable refinement. The returned trace hash depends only on cell
// positions and counts, so it commutes with relabeling.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), mask_(g.words_per_row()), count_(g.order()), in_queue_(g.order(), 0) {}

  std::uint64_t refine(Partition& p, std::span<const std::size_t> splitters) {
    for (std::size_t s : splitters) push(s);
    std::uint64_t h = 0x5eed;
    while (!queue_.empty()) {
      const std::size_t s = queue_.front();
      queue_.pop_front();
      in_queue_[s] = 0;
      if (p.discrete()) continue;
      h = split_by(p, s, h);
    }
    return mix(h, p.cells);
  }

 private:
  void push(std::size_t s) {
    if (!in_queue_[s]) {
      in_queue_[s] = 1;
      queue_.push_back(s);
    }
  }

  std::uint64_t split_by(Partition& p, std::size_t s, std::uint64_t h) {
    const std::size_t e = p.cell_end[s];
    const bool single = e - s == 1;
    const Vertex sv = p.elems[s];
    if (!single) {
      std::fill(mask_.begin(), mask_.end(), 0);
      for (std::size_t i = s; i < e; ++i) bits::set(mask_, p.elems[i]);
    }
    h = mix(mix(h, s), e - s);
    const std::size_t n = p.order();
    for (std::size_t x = 0, xend = 0; x < n; x = xend) {
      xend = p.cell_end[x];
      if (xend - x == 1) continue;
      bool uniform = true;
      for (std::size_t i = x; i < xend; ++i) {
        const Vertex v = p.elems[i];
        count_[i] = single ? (g_.adjacent(sv, v) ? 1 : 0) : bits::count_and(g_.row(v), mask_);
        uniform = uniform && count_[i] == count_[x];
      }
      if (uniform) continue;
      h = split_cell(p, x, xend, h);
    }
    return h;
  }

  std::uint64_t split_cell(Partition& p, std::size_t x, std::size_t xend, std::uint64_t h) {
    scratch_.clear();
    for (std::size_t i = x; i < xend; ++i) scratch_.emplace_back(count_[i], p.elems[i]);
    std::sort(scratch_.begin(), scratch_.end());
    for (std::size_t i = x; i < xend; ++i) {
      p.elems[i] = scratch_[i - x].second;
      p.pos[p.elems[i]] = i;
    }
    const bool was_queued = in_queue_[x] != 0;
    // Fragment boundaries.
    frag_.clear();
    for (std::size_t i = x; i < xend; ++i)
      if (i == x || scratch_[i - x].first != scratch_[i - x - 1].first) frag_.push_back(i);
    frag_.push_back(xend);
    std::size_t largest = 0;
    for (std::size_t j = 0; j + 1 < frag_.size(); ++j)
      if (frag_[j + 1] - frag_[j] > frag_[largest + 1] - frag_[largest]) largest = j;
    h = mix(h, x);
    for (std::size_t j = 0; j + 1 < frag_.size(); ++j) {
      const std::size_t fs = frag_[j], fe = frag_[j + 1];
      p.cell_end[fs] = fe;
      for (std::size_t i = fs; i < fe; ++i) p.cell_start[i] = fs;
      if (j > 0) ++p.cells;
      h = mix(mix(h, scratch_[fs - x].first), fe - fs);
      if (was_queued || j != largest) push(fs);
    }
    return h;
  }

  const Graph& g_;
  std::vector<Word> mask_;
  std::vector<std::size_t> count_;
  std::vector<char> in_queue_;
  std::deque<std::size_t> queue_;
  std::vector<std::pair<std::size_t, Vertex>> scratch_;
  std::vector<std::size_t> frag_;
};

std::uint64_t refine_from_scratch(Refiner& r, Partition& p) {
  if (p.order() == 0) return 0;
  const std::size_t all[] = {0};
  return r.refine(p, all);
}

std::uint64_t individualize_and_refine(Refiner& r, Partition& p, Vertex v) {
  const std::size_t s = p.cell_start[p.pos[v]];
  const std::size_t size = p.cell_end[s] - s;
  const std::size_t single[] = {p.individualize(v)};
  return mix(mix(r.refine(p, single), s), size);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), refiner_(g) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.canonical_graph = g_;
      out.form.bytes = to_graph6(g_);
      return out;
    }
    Partition root(n_);
    trace_.push_back(refine_from_scratch(refiner_, root));
    node(root, 0, /*cmp_best=*/0, /*eq_first=*/true);
    out.label = best_.label;
    out.canonical_graph = g_.relabeled(best_.label);
    out.form.bytes = to_graph6(out.canonical_graph);
    out.automorphisms = std::move(gens_);
    out.leaves_visited = leaves_;
    return out;
  }

 private:
  static constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

  struct Leaf {
    std::vector<std::uint64_t> trace;
    std::vector<Word> matrix;
    Permutation label;
    std::vector<Vertex> path;
  };

  // cmp_best: 0 while the current trace equals the best leaf's, 1 once it is
  // strictly greater (then every leaf below beats the best).
  std::size_t node(Partition& p, std::size_t level, int cmp_best, bool eq_first) {
    if (have_best_ && cmp_best == 0) {
      if (level >= best_.trace.size() || trace_[level] > best_.trace[level]) {
        cmp_best = 1;
      } else if (trace_[level] < best_.trace[level]) {
        return kNoJump;
      }
    }
    if (have_best_ && eq_first)
      eq_first = level < first_.trace.size() && trace_[level] == first_.trace[level];
    if (p.discrete()) return leaf(p, cmp_best, eq_first);

    const std::size_t s = p.first_nonsingleton();
    std::vector<Vertex> cell(p.elems.begin() + static_cast<std::ptrdiff_t>(s),
                             p.elems.begin() + static_cast<std::ptrdiff_t>(p.cell_end[s]));
    std::sort(cell.begin(), cell.end());

    const std::size_t version = best_version_;
    std::vector<Vertex> explored;
    std::size_t orbit_gens = std::numeric_limits<std::size_t>::max();
    UnionFind orbits(0);
    for (Vertex v : cell) {
      if (gens_.size() != orbit_gens) {
        orbits = stabilizer_orbits(level);
        orbit_gens = gens_.size();
      }
      const bool redundant = std::any_of(explored.begin(), explored.end(),
                                         [&](Vertex u) { return orbits.find(u) == orbits.find(v); });
      if (redundant) continue;
      explored.push_back(v);
      if (best_version_ != version) {
        // The best leaf (or the first one) now lies below this node, so the
        // prefix up to here matches it exactly.
        cmp_best = 0;
        eq_first = first_.path.size() >= level &&
                   std::equal(path_.begin(), path_.end(), first_.path.begin());
      }
      Partition child = p;
      trace_.push_back(individualize_and_refine(refiner_, child, v));
      path_.push_back(v);
      const std::size_t r = node(child, level + 1, cmp_best, eq_first);
      path_.pop_back();
      trace_.pop_back();
      if (r < level) return r;
    }
    return kNoJump;
  }

  UnionFind stabilizer_orbits(std::size_t level) {
    UnionFind uf(n_);
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (std::size_t i = 0; i < level && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
    }
    return uf;
  }

  std::vector<Word> permuted_matrix(const Partition& p) const {
    const std::size_t w = g_.words_per_row();
    std::vector<Word> m(n_ * w, 0);
    for (Vertex u = 0; u < n_; ++u) {
      std::span<Word> out(m.data() + p.pos[u] * w, w);
      bits::for_each(g_.row(u), [&](std::size_t v) { bits::set(out, p.pos[v]); });
    }
    return m;
  }

  std::size_t record_automorphism(const Leaf& target, const Permutation& label) {
    Permutation inverse(n_);
    for (Vertex v = 0; v < n_; ++v) inverse[target.label[v]] = v;
    Permutation gamma(n_);
    for (Vertex v = 0; v < n_; ++v) gamma[v] = inverse[label[v]];
    gens_.push_back(std::move(gamma));
    std::size_t common = 0;
    while (common < path_.size() && common < target.path.size() &&
           path_[common] == target.path[common])
      ++common;
    return common;
  }

  void set_best(std::vector<Word> matrix, Permutation label) {
    best_ = Leaf{trace_, std::move(matrix), std::move(label), path_};
    ++best_version_;
  }

  std::size_t leaf(const Partition& p, int cmp_best, bool eq_first) {
    ++leaves_;
    std::vector<Word> matrix = permuted_matrix(p);
    Permutation label(p.pos.begin(), p.pos.end());
    if (!have_best_) {
      have_best_ = true;
      set_best(std::move(matrix), std::move(label));
      first_ = best_;
      return kNoJump;
    }
    if (eq_first && trace_.size() == first_.trace.size() && matrix == first_.matrix)
      return record_automorphism(first_, label);
    if (cmp_best == 1) {
      set_best(std::move(matrix), std::move(label));
      return kNoJump;
    }
    if (trace_.size() < best_.trace.size()) return kNoJump;
    if (matrix > best_.matrix) {
      set_best(std::move(matrix), std::move(label));
      return kNoJump;
    }
    if (matrix == best_.matrix) return record_automorphism(best_, label);
    return kNoJump;
  }

  const Graph& g_;
  std::size_t n_;
  Refiner refiner_;
  bool have_best_ = false;
  std::size_t best_version_ = 0;
  Leaf best_;
  Leaf first_;
  std::vector<std::uint64_t> trace_;
  std::vector<Vertex> path_;
  std::vector<Permutation> gens_;
  std::size_t leaves_ = 0;
};

class PairSearch {
 public:
  PairSearch(const Graph& g, const std::function<bool(Vertex, Vertex)>& allowed)
      : g_(g), allowed_(allowed), refiner_(g) {}

  std::optional<Permutation> run() {
    Partition left(g_.order());
    refine_from_scratch(refiner_, left);
    Partition right = left;
    return descend(left, right);
  }

 private:
  bool singletons_allowed(const Partition& l, const Partition& r) const {
    for (std::size_t s = 0; s < l.order(); s = l.cell_end[s])
      if (l.cell_end[s] - s == 1 && !allowed_(l.elems[s], r.elems[s])) return false;
    return true;
  }

  std::optional<Permutation> descend(const Partition& l, const Partition& r) {
    if (!singletons_allowed(l, r)) return std::nullopt;
    if (l.discrete()) {
      Permutation sigma(l.order());
      for (std::size_t i = 0; i < l.order(); ++i) sigma[l.elems[i]] = r.elems[i];
      if (is_automorphism(g_, sigma)) return sigma;
      return std::nullopt;
    }
    const std::size_t s = l.first_nonsingleton();
    const std::size_t e = l.cell_end[s];
    const Vertex v = *std::min_element(l.elems.begin() + static_cast<std::ptrdiff_t>(s),
                                       l.elems.begin() + static_cast<std::ptrdiff_t>(e));
    Partition lc = l;
    const std::uint64_t hl = individualize_and_refine(refiner_, lc, v);
    std::vector<Vertex> images(r.elems.begin() + static_cast<std::ptrdiff_t>(s),
                               r.elems.begin() + static_cast<std::ptrdiff_t>(e));
    std::sort(images.begin(), images.end());
    for (Vertex w : images) {
      if (!allowed_(v, w)) continue;
      Partition rc = r;
      if (individualize_and_refine(refiner_, rc, w) != hl || !lc.same_shape(rc)) continue;
      if (auto found = descend(lc, rc)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const std::function<bool(Vertex, Vertex)>& allowed_;
  Refiner refiner_;
};

}  // namespace

std::uint64_t CanonicalForm::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

std::string CanonicalForm::hash_prefix() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return canonical_labeling(g).canonical_graph; }

std::uint64_t invariant_hash(const Graph& g) {
  const std::vector<std::size_t> deg = g.degrees();
  // (degree, sum of neighbor degrees) per vertex, as a sorted multiset.
  std::vector<std::pair<std::size_t, std::uint64_t>> profile(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::uint64_t s = 0;
    bits::for_each(g.row(v), [&](std::size_t w) { s += deg[w]; });
    profile[v] = {deg[v], s};
  }
  std::sort(profile.begin(), profile.end());
  std::uint64_t h = mix(mix(0, g.order()), g.edge_count());
  for (const auto& [d, s] : profile) h = mix(mix(h, d), s);
  if (g.order() <= kTriangleHashOrder) h = mix(h, triangle_count(g));
  return h;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (invariant_hash(g) != invariant_hash(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != g.degree(perm[u])) return false;
    bool ok = true;
    bits::for_each(g.row(u), [&](std::size_t v) { ok = ok && g.adjacent(perm[u], perm[v]); });
    if (!ok) return false;
  }
  return true;
}

std::optional<Permutation> find_automorphism(
    const Graph& g, const std::function<bool(Vertex, Vertex)>& allowed) {
  return PairSearch(g, allowed).run();
}

std::optional<Permutation> find_coaffination(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  // Each vertex needs a non-neighbor in its own cell of the equitable partition.
  Refiner refiner(g);
  Partition root(g.order());
  refine_from_scratch(refiner, root);
  for (std::size_t s = 0; s < root.order(); s = root.cell_end[s]) {
    VertexSet cell(g.order());
    for (std::size_t i = s; i < root.cell_end[s]; ++i) cell.insert(root.elems[i]);
    const std::size_t size = root.cell_end[s] - s;
    for (std::size_t i = s; i < root.cell_end[s]; ++i)
      if (size - 1 == bits::count_and(cell.words(), g.row(root.elems[i]))) return std::nullopt;
  }
  return find_automorphism(g, [&](Vertex v, Vertex w) { return v != w && !g.adjacent(v, w); });
}

bool is_coaffination(const Graph& g, const Permutation& perm) {
  if (g.order() == 0 || !is_automorphism(g, perm)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (perm[v] == v || g.adjacent(v, perm[v])) return false;
  return true;
}

}  // namespace cliquedyn
