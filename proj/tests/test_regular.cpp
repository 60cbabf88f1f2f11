#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "cliquedyn/bounds.hpp"
#include "cliquedyn/canonical.hpp"
#include "cliquedyn/errors.hpp"
#include "cliquedyn/graph6.hpp"
#include "cliquedyn/helly.hpp"
#include "cliquedyn/regular.hpp"
#include "oracles.hpp"

using namespace cliquedyn;

namespace {

std::size_t count_connected(const std::vector<Graph>& gs) {
  std::size_t c = 0;
  for (const auto& g : gs) c += g.connected();
  return c;
}

// Independent triples with >= 2 members adjacent to x, by brute force.
std::uint64_t brute_at_vertex(const Graph& g, Vertex x) {
  const auto m = oracle::matrix(g);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      for (std::size_t c = b + 1; c < m.size(); ++c) {
        if (m[a][b] || m[b][c] || m[a][c]) continue;
        count += (m[x][a] + m[x][b] + m[x][c]) >= 2;
      }
  return count;
}

Graph random_cubic(std::mt19937_64& rng, std::size_t n) { return random_regular(3, n, rng()); }

}  // namespace

TEST_CASE("small exhaustive lists") {
  auto k3n4 = enumerate_regular({3, 4});
  REQUIRE(k3n4.size() == 1);
  CHECK(are_isomorphic(k3n4[0], make_complete(4)));

  auto k3n6 = enumerate_regular({3, 6, GenMode::Exhaustive, 0, 0, Connectivity::ConnectedOnly});
  REQUIRE(k3n6.size() == 2);
  Graph prism = complement(make_cycle(6));
  const bool expected = (are_isomorphic(k3n6[0], make_complete_bipartite(3, 3)) &&
                         are_isomorphic(k3n6[1], prism)) ||
                        (are_isomorphic(k3n6[1], make_complete_bipartite(3, 3)) &&
                         are_isomorphic(k3n6[0], prism));
  CHECK(expected);

  auto k2n9 = enumerate_regular({2, 9});
  REQUIRE(k2n9.size() == 4);
  std::set<std::string> got, want;
  for (const auto& g : k2n9) got.insert(canonical_form(g).bytes);
  want.insert(canonical_form(make_cycle(9)).bytes);
  want.insert(canonical_form(disjoint_union(make_cycle(3), make_cycle(6))).bytes);
  want.insert(canonical_form(disjoint_union(make_cycle(4), make_cycle(5))).bytes);
  want.insert(canonical_form(
      disjoint_union(std::vector<Graph>{make_cycle(3), make_cycle(3), make_cycle(3)})).bytes);
  CHECK(got == want);
}

TEST_CASE("exhaustive lists are sorted canonical representatives") {
  auto gs = enumerate_regular({3, 10});
  CHECK(gs.size() == 21);
  CHECK(count_connected(gs) == 19);
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) CHECK(to_graph6(gs[i]) < to_graph6(gs[i + 1]));
  for (const auto& g : gs) CHECK(canonical_graph(g) == g);
}

TEST_CASE("cubic class counts") {
  const std::pair<std::size_t, std::size_t> expected[] = {{1, 1}, {2, 2}, {6, 5}, {21, 19}, {94, 85}};
  std::size_t n = 4;
  for (const auto& [all, connected] : expected) {
    auto gs = enumerate_regular({3, n});
    CHECK(gs.size() == all);
    CHECK(count_connected(gs) == connected);
    auto only = enumerate_regular({3, n, GenMode::Exhaustive, 0, 0, Connectivity::ConnectedOnly});
    CHECK(only.size() == connected);
    n += 2;
  }
}

TEST_CASE("2-regular classes are partitions into parts of size at least 3") {
  // p(n) restricted to parts >= 3.
  auto partitions = [](std::size_t n) {
    std::vector<std::size_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::size_t part = 3; part <= n; ++part)
      for (std::size_t s = part; s <= n; ++s) ways[s] += ways[s - part];
    return ways[n];
  };
  for (std::size_t n = 3; n <= 16; ++n) CHECK(enumerate_regular({2, n}).size() == partitions(n));
}

TEST_CASE("exhaustive enumeration matches a labeled brute force via orbit counting") {
  // Sum over classes of n!/|Aut(G)| counts labeled graphs; compare with a
  // direct labeled enumeration. Also check classes are pairwise distinct.
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      if ((n * k) % 2) continue;
      auto classes = enumerate_regular({k, n});
      std::uint64_t orbit_sum = 0;
      for (const auto& g : classes) orbit_sum += oracle::factorial(n) / oracle::automorphism_count(g);
      const std::uint64_t labeled = oracle::LabeledRegular(n, k).count();
      CHECK_MESSAGE(orbit_sum == labeled, "n=" << n << " k=" << k);
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
          CHECK_FALSE(oracle::isomorphic(classes[i], classes[j]));
    }
  CHECK(oracle::LabeledRegular(8, 3).count() == 19355);
  CHECK(oracle::LabeledRegular(6, 3).count() == 70);
}

TEST_CASE("enumeration limits and unsatisfiable parameters") {
  CHECK_THROWS_AS(enumerate_regular({3, 16}), DomainError);
  CHECK_THROWS_AS(enumerate_regular({3, 6, GenMode::Random, 5, 0}), DomainError);
  std::vector<std::string> warnings;
  EnumerationOptions opts;
  opts.warn = [&](const std::string& w) { warnings.push_back(w); };
  CHECK(enumerate_regular({3, 7}, opts).empty());
  CHECK(warnings.size() == 1);
  CHECK(enumerate_regular({5, 5}, opts).empty());
  CHECK(warnings.size() == 2);
  opts.ceiling = 6;
  CHECK_THROWS_AS(enumerate_regular({2, 7}, opts), DomainError);
  CHECK(enumerate_regular({0, 3}).size() == 1);
}

TEST_CASE("random regular graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(are_isomorphic(random_regular(1, 6, seed),
                         disjoint_union(std::vector<Graph>{make_complete(2), make_complete(2), make_complete(2)})));
    CHECK(are_isomorphic(random_regular(2, 5, seed), make_cycle(5)));
  }
  CHECK(random_regular(3, 20, 42) == random_regular(3, 20, 42));
  CHECK(random_regular(3, 20, 42).edges() == random_regular(3, 20, 42).edges());
  CHECK(random_regular(3, 20, 42) != random_regular(3, 20, 43));
  for (std::size_t k = 0; k <= 6; ++k)
    for (std::size_t n = k + 1; n <= 30; n += 3) {
      if ((n * k) % 2) continue;
      Graph g = random_regular(k, n, n * 100 + k);
      g.validate();
      CHECK(g.regular_degree() == std::optional<std::size_t>(k));
    }
  CHECK_THROWS_AS(random_regular(3, 7, 0), DomainError);
  CHECK_THROWS_AS(random_regular(4, 4, 0), DomainError);

  RegularGenSpec spec{3, 12, GenMode::Random, 8, 5, Connectivity::Any};
  auto a = generate_regular(spec);
  CHECK(a.size() == 8);
  CHECK(a[3] == random_regular(3, 12, 8));
  spec.connectivity = Connectivity::ConnectedOnly;
  for (const auto& g : generate_regular(spec)) CHECK(g.connected());
}

TEST_CASE("random samples visit several classes") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 300; ++seed) seen.insert(canonical_form(random_regular(3, 8, seed)).bytes);
  CHECK(seen.size() == 6);
}

TEST_CASE("2-switch") {
  // C_4 = 0-1-2-3-0, switch {1,2},{3,0} to {1,3},{2,0}.
  Graph c4 = make_cycle(4);
  Graph s = two_switch(c4, {1, 2}, {3, 0});
  CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(are_isomorphic(s, c4));

  // C_6, switch {0,1},{3,4} to {0,3},{1,4}: the result is again a single
  // 6-cycle 0-3-2-1-4-5-0, not two triangles.
  Graph c6 = two_switch(make_cycle(6), {0, 1}, {3, 4});
  CHECK(c6.edges() == std::vector<Edge>{{0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {4, 5}});
  CHECK(oracle::component_count(c6) == 1);
  CHECK(oracle::triangle_count(c6) == 0);
  CHECK(oracle::isomorphic(c6, make_cycle(6)));
  CHECK_FALSE(oracle::isomorphic(c6, disjoint_union(make_cycle(3), make_cycle(3))));

  std::mt19937_64 rng(10);
  int done = 0;
  while (done < 1000) {
    Graph g = random_cubic(rng, 4 + 2 * (rng() % 10));
    auto edges = g.edges();
    auto [a, b] = edges[rng() % edges.size()];
    auto [u, v] = edges[rng() % edges.size()];
    if (rng() % 2) std::swap(a, b);
    if (a == u || a == v || b == u || b == v || g.adjacent(a, u) || g.adjacent(b, v)) continue;
    Graph h = two_switch(g, {a, b}, {u, v});
    CHECK(h.degrees() == g.degrees());
    CHECK(h.edge_count() == g.edge_count());
    ++done;
  }
}

TEST_CASE("2-switch errors name the failing pair") {
  Graph c6 = make_cycle(6);
  auto message = [&](Edge e1, Edge e2) {
    try {
      two_switch(c6, e1, e2);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({0, 2}, {3, 4}).find("{0,2}") != std::string::npos);
  CHECK(message({0, 1}, {3, 5}).find("{3,5}") != std::string::npos);
  CHECK(message({0, 1}, {2, 3}).empty());
  CHECK(message({0, 1}, {3, 2}).find("{1,2}") != std::string::npos);
  CHECK(message({0, 1}, {1, 2}).find("not distinct") != std::string::npos);
  CHECK(message({0, 1}, {5, 4}).find("{0,5}") != std::string::npos);
}

TEST_CASE("triangle identity on regular graphs") {
  CHECK(verify_lorden(make_petersen()));
  CHECK(verify_lorden(make_complete_bipartite(3, 3)));
  CHECK(verify_lorden(make_cycle(7)));
  CHECK_THROWS_AS(verify_lorden(make_path(4)), DomainError);
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      if ((n * k) % 2 || n > default_exhaustive_ceiling(k)) continue;
      for (const auto& g : enumerate_regular({k, n})) {
        CHECK(verify_lorden(g));
        CHECK(oracle::triangle_count(g) + oracle::triangle_count(complement(g)) ==
              static_cast<std::size_t>(lorden_rhs(n, k)));
      }
    }
}

TEST_CASE("independent-triple counts at a vertex") {
  for (Vertex x = 0; x < 6; ++x) CHECK(count_cotriangles_at_vertex(make_complete(6), x) == 0);
  Graph two_k33 = disjoint_union(make_complete_bipartite(3, 3), make_complete_bipartite(3, 3));
  for (Vertex x = 0; x < 12; ++x) {
    CHECK(count_cotriangles_at_vertex(two_k33, x) == 19);
    CHECK(brute_at_vertex(two_k33, x) == 19);
  }
  CHECK(count_cotriangles_at_vertex(make_cycle(6), 0) == 1);
  CHECK_THROWS_AS(count_cotriangles_at_vertex(make_cycle(6), 6), DomainError);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    Graph g = oracle::random_graph(rng() % 12, 0.35, rng);
    std::uint64_t by_vertex = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto c = count_cotriangles_at_vertex(g, x);
      CHECK(c == brute_at_vertex(g, x));
      by_vertex += c;
    }
    CHECK(count_cotriangle_incidences(g) == by_vertex);
  }
  CHECK(count_cotriangle_incidences(make_complete(5)) == 0);
  CHECK(count_cotriangle_incidences(make_cycle(6)) == 6);
}

TEST_CASE("independent triples meet the lower bound") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      if ((n * k) % 2 || n > default_exhaustive_ceiling(k)) continue;
      for (const auto& g : enumerate_regular({k, n}))
        CHECK(Rational(static_cast<std::int64_t>(cotriangle_count(g))) >=
              cnk_lower_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
    }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t k = 1 + seed % 6;
    std::size_t n = k + 1 + seed % 24;
    if ((n * k) % 2) ++n;
    Graph g = random_regular(k, n, seed);
    CHECK(Rational(static_cast<std::int64_t>(cotriangle_count(g))) >=
          cnk_lower_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
  }
}

TEST_CASE("vertex cap and its equality case") {
  auto check_graph = [](const Graph& g) {
    for (const auto& c : check_vertex_caps(g)) {
      CHECK(c.within());
      CHECK(c.attains() == c.component_is_kk);
    }
  };
  Graph two_k33 = disjoint_union(make_complete_bipartite(3, 3), make_complete_bipartite(3, 3));
  for (const auto& c : check_vertex_caps(two_k33)) {
    CHECK(c.cap == 19);
    CHECK(c.attains());
  }
  for (const auto& g : enumerate_regular({3, 12})) check_graph(g);
  for (const auto& g : enumerate_regular({2, 8})) check_graph(g);
  for (const auto& g : enumerate_regular({1, 4})) check_graph(g);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + rng() % 4;
    std::size_t n = 4 * k + rng() % 10;
    if ((n * k) % 2) ++n;
    check_graph(random_regular(k, n, rng()));
  }
  CHECK_THROWS_AS(check_vertex_caps(make_cycle(7)), DomainError);  // n < 4k
  CHECK_THROWS_AS(check_vertex_caps(make_path(9)), DomainError);
}

TEST_CASE("Helly complements force covered independent triples") {
  std::size_t helly = 0;
  for (std::size_t n = 4; n <= 12; n += 2)
    for (const auto& g : enumerate_regular({3, n})) {
      if (!is_helly(complement(g)).is_helly) continue;
      ++helly;
      CHECK(check_cotriangle_cover(g, 3).empty());
      CHECK(3 * cotriangle_count(g) <= count_cotriangle_incidences(g));
    }
  for (std::size_t n = 3; n <= 12; ++n)
    for (const auto& g : enumerate_regular({2, n})) {
      if (!is_helly(complement(g)).is_helly) continue;
      ++helly;
      CHECK(check_cotriangle_cover(g, 2).empty());
    }
  CHECK(helly > 0);
}
