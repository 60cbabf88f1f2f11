#include "cliquedyn/cliques.hpp"

#include <algorithm>

namespace cliquedyn {

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t cap) : g_(g), w_(g.words_per_row()), cap_(cap) {}

  std::vector<VertexSet> run() {
    const std::size_t n = g_.order();
    if (n == 0) return {};
    Frame& top = frame(0);
    std::fill(top.p.begin(), top.p.end(), 0);
    std::fill(top.x.begin(), top.x.end(), 0);
    for (Vertex v = 0; v < n; ++v) bits::set(top.p, v);
    expand(0);
    return std::move(found_);
  }

 private:
  struct Frame {
    std::vector<Word> p, x, cand;
  };

  Frame& frame(std::size_t depth) {
    while (frames_.size() <= depth)
      frames_.push_back({std::vector<Word>(w_), std::vector<Word>(w_), std::vector<Word>(w_)});
    return frames_[depth];
  }

  Vertex choose_pivot(const Frame& f) const {
    std::size_t lo = 0, hi = w_;
    while (!f.p[lo]) ++lo;
    while (!f.p[hi - 1]) --hi;
    const std::span<const Word> p(f.p.data() + lo, hi - lo);
    const std::size_t full = bits::count(p);
    Vertex best = 0;
    std::size_t best_count = 0;
    bool have = false, done = false, in_p = false;
    auto consider = [&](std::size_t u) {
      if (done) return;
      const std::size_t c = bits::count_and(g_.row(u).subspan(lo, hi - lo), p);
      if (!have || c > best_count) {
        best = u;
        best_count = c;
        have = true;
        done = c >= full || (in_p && c + 1 == full);
      }
    };
    bits::for_each(f.x, consider);
    in_p = true;
    bits::for_each(f.p, consider);
    return best;
  }

  void expand(std::size_t depth) {
    // frames_ may reallocate in the recursive call; index by depth each time.
    if (!bits::any(frames_[depth].p)) {
      if (!bits::any(frames_[depth].x)) report();
      return;
    }
    frame(depth + 1);
    {
      Frame& f = frames_[depth];
      const Vertex pivot = choose_pivot(f);
      auto prow = g_.row(pivot);
      for (std::size_t i = 0; i < w_; ++i) f.cand[i] = f.p[i] & ~prow[i];
    }
    for (std::size_t v = bits::next(frames_[depth].cand, 0); v < g_.order();
         v = bits::next(frames_[depth].cand, v + 1)) {
      frame(depth + 1);
      Frame& f = frames_[depth];
      Frame& child = frames_[depth + 1];
      auto vrow = g_.row(v);
      for (std::size_t i = 0; i < w_; ++i) {
        child.p[i] = f.p[i] & vrow[i];
        child.x[i] = f.x[i] & vrow[i];
      }
      current_.push_back(v);
      expand(depth + 1);
      current_.pop_back();
      Frame& back = frames_[depth];
      bits::reset(back.p, v);
      bits::set(back.x, v);
    }
  }

  void report() {
    if (found_.size() >= cap_) throw CliqueLimitExceeded(cap_);
    found_.emplace_back(g_.order(), std::span<const Vertex>(current_));
  }

  const Graph& g_;
  std::size_t w_;
  std::size_t cap_;
  std::vector<Frame> frames_;
  std::vector<Vertex> current_;
  std::vector<VertexSet> found_;
};

}  // namespace

CliqueList maximal_cliques(const Graph& g, std::size_t cap) {
  CliqueList out;
  out.host_order = g.order();
  out.cliques = BronKerbosch(g, cap).run();
  std::sort(out.cliques.begin(), out.cliques.end());
  return out;
}

Graph intersection_graph(const std::vector<VertexSet>& family, std::size_t universe) {
  const std::size_t m = family.size();
  const std::size_t wm = words_for(m);
  // containing[v] = bit row over the family of members that contain v.
  std::vector<Word> containing(universe * wm, 0);
  for (std::size_t c = 0; c < m; ++c)
    bits::for_each(family[c].words(),
                   [&](std::size_t v) { bits::set({containing.data() + v * wm, wm}, c); });
  std::vector<Word> rows(m * wm, 0);
  for (std::size_t c = 0; c < m; ++c) {
    Word* out = rows.data() + c * wm;
    bits::for_each(family[c].words(), [&](std::size_t v) {
      const Word* in = containing.data() + v * wm;
      for (std::size_t i = 0; i < wm; ++i) out[i] |= in[i];
    });
    bits::reset({out, wm}, c);
  }
  return Graph::adopt_rows(m, std::move(rows));
}

CliqueGraph clique_graph(const Graph& g, std::size_t cap) {
  CliqueList list = maximal_cliques(g, cap);
  Graph k = intersection_graph(list.cliques, g.order());
  return {std::move(k), std::move(list)};
}

bool is_complete(const Graph& g, const VertexSet& s) {
  bool ok = true;
  bits::for_each(s.words(), [&](std::size_t v) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

bool is_maximal_complete(const Graph& g, const VertexSet& s) {
  if (!is_complete(g, s)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    if (s.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

}  // namespace cliquedyn
