#include <doctest.h>

#include <random>

#include "cliquedyn/canonical.hpp"
#include "cliquedyn/regular.hpp"
#include "oracles.hpp"

using namespace cliquedyn;

TEST_CASE("canonical forms of named graphs") {
  CHECK(canonical_form(make_cycle(5)) == canonical_form(complement(make_cycle(5))));
  CHECK(canonical_form(make_cycle(6)) != canonical_form(disjoint_union(make_cycle(3), make_cycle(3))));
  CHECK(canonical_form(Graph{}) == canonical_form(Graph{}));
  CHECK(canonical_form(make_empty(1)) != canonical_form(Graph{}));
}

TEST_CASE("isomorphism checks") {
  CHECK(are_isomorphic(make_cycle(4), make_octahedron(2)));
  CHECK(are_isomorphic(make_complete_bipartite(3, 3),
                       complement(disjoint_union(make_cycle(3), make_cycle(3)))));
  CHECK_FALSE(are_isomorphic(make_cycle(6), disjoint_union(make_cycle(3), make_cycle(3))));
  CHECK(oracle::isomorphic(make_cycle(4), make_octahedron(2)));
  CHECK_FALSE(oracle::isomorphic(make_cycle(6), disjoint_union(make_cycle(3), make_cycle(3))));
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(77);
  std::vector<Graph> pool{make_petersen(), make_octahedron(5), complement(make_cycle(11)),
                          disjoint_union(make_complete_bipartite(3, 3), make_complete_bipartite(3, 3))};
  for (const Graph& g : enumerate_regular({3, 12})) pool.push_back(g);
  for (int i = 0; i < 1000; ++i) {
    const Graph& g = i < 500 ? pool[i % pool.size()] : oracle::random_graph(1 + rng() % 30, 0.4, rng);
    Graph h = g.relabeled(oracle::random_permutation(g.order(), rng));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical labeling reproduces the canonical graph") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(rng() % 25, 0.3, rng);
    CanonicalLabeling c = canonical_labeling(g);
    CHECK(g.relabeled(c.label) == c.canonical_graph);
    for (const auto& a : c.automorphisms) CHECK(is_automorphism(g, a));
  }
}

TEST_CASE("canonizer agrees with brute-force isomorphism on small graphs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1500; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const double p = (1 + rng() % 9) / 10.0;
    Graph g = oracle::random_graph(n, p, rng);
    Graph h = oracle::random_graph(n, p, rng);
    if (g.edge_count() != h.edge_count()) continue;
    CHECK((canonical_form(g) == canonical_form(h)) == oracle::isomorphic(g, h));
  }
  // All cubic graphs on 8 vertices: pairwise distinct by both methods.
  auto cubic8 = enumerate_regular({3, 8});
  for (std::size_t i = 0; i < cubic8.size(); ++i)
    for (std::size_t j = i + 1; j < cubic8.size(); ++j) {
      CHECK_FALSE(oracle::isomorphic(cubic8[i], cubic8[j]));
      CHECK(canonical_form(cubic8[i]) != canonical_form(cubic8[j]));
    }
}

TEST_CASE("invariant hash and automorphism check") {
  CHECK(invariant_hash(make_cycle(6)) != invariant_hash(disjoint_union(make_cycle(3), make_cycle(3))));
  CHECK(invariant_hash(make_cycle(5)) == invariant_hash(complement(make_cycle(5))));
  Graph c6 = make_cycle(6);
  CHECK(is_automorphism(c6, {1, 2, 3, 4, 5, 0}));
  CHECK_FALSE(is_automorphism(c6, {1, 0, 2, 3, 4, 5}));
  CHECK_FALSE(is_automorphism(c6, {0, 0, 2, 3, 4, 5}));
  CHECK_FALSE(is_automorphism(c6, {0, 1, 2}));
}

TEST_CASE("coaffinations") {
  Graph cc6 = complement(make_cycle(6));
  Permutation rot{1, 2, 3, 4, 5, 0};
  CHECK(is_coaffination(cc6, rot));
  CHECK(find_coaffination(cc6));
  CHECK_FALSE(find_coaffination(make_complete(2)));
  Graph two_k2 = disjoint_union(make_complete(2), make_complete(2));
  CHECK(is_coaffination(two_k2, {2, 3, 0, 1}));
  auto s = find_coaffination(two_k2);
  REQUIRE(s);
  CHECK(is_coaffination(two_k2, *s));
  CHECK_FALSE(find_coaffination(Graph{}));
  CHECK_FALSE(find_coaffination(make_empty(1)));
  CHECK(find_coaffination(make_empty(2)));
  for (std::size_t n = 3; n <= 12; ++n) {
    Graph c = complement(make_cycle(n));
    auto sigma = find_coaffination(c);
    REQUIRE(sigma);
    CHECK(is_coaffination(c, *sigma));
  }
  // Octahedra have huge groups; a witness is still quick to find.
  auto big = find_coaffination(make_octahedron(12));
  REQUIRE(big);
  CHECK(is_coaffination(make_octahedron(12), *big));
}

TEST_CASE("coaffination search agrees with brute force on small graphs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::random_graph(1 + rng() % 7, 0.4, rng);
    bool brute = false;
    std::vector<std::size_t> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    do {
      if (is_coaffination(g, p)) {
        brute = true;
        break;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(find_coaffination(g).has_value() == brute);
  }
}

TEST_CASE("constrained automorphism search") {
  Graph c5 = make_cycle(5);
  auto fixed_free = find_automorphism(c5, [](Vertex v, Vertex w) { return v != w; });
  REQUIRE(fixed_free);
  CHECK(is_automorphism(c5, *fixed_free));
  auto none = find_automorphism(make_path(3), [](Vertex v, Vertex w) { return v != w; });
  CHECK_FALSE(none);
}
