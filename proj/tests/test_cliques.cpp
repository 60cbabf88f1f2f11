#include <doctest.h>

#include <random>

#include "cliquedyn/canonical.hpp"
#include "cliquedyn/cliques.hpp"
#include "oracles.hpp"

using namespace cliquedyn;

namespace {

oracle::Family as_family(const CliqueList& list) {
  oracle::Family f;
  for (const auto& c : list.cliques) f.insert(c.members());
  return f;
}

std::vector<Graph> named_graphs() {
  return {make_complete(4),
          make_cycle(4),
          make_cycle(5),
          make_octahedron(3),
          make_petersen(),
          complement(make_petersen()),
          make_complete_bipartite(3, 3),
          complement(disjoint_union(make_cycle(3), make_cycle(4))),
          complement(disjoint_union(make_cycle(3), make_cycle(5))),
          complement(make_cycle(8)),
          disjoint_union(make_complete_bipartite(3, 3), make_complete_bipartite(3, 3))};
}

}  // namespace

TEST_CASE("maximal cliques of small named graphs") {
  CliqueList k4 = maximal_cliques(make_complete(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4.cliques[0].members() == std::vector<std::size_t>{0, 1, 2, 3});

  CliqueList c4 = maximal_cliques(make_cycle(4));
  CHECK(c4.size() == 4);
  for (const auto& c : c4.cliques) CHECK(c.size() == 2);

  CliqueList o3 = maximal_cliques(make_octahedron(3));
  CHECK(o3.size() == 8);
  CHECK(as_family(o3) == oracle::maximal_cliques(make_octahedron(3)));
  for (const auto& c : o3.cliques) CHECK(c.size() == 3);

  CHECK(maximal_cliques(Graph{}).size() == 0);
  CHECK(maximal_cliques(make_empty(3)).size() == 3);
}

TEST_CASE("clique lists are sorted, complete and maximal") {
  for (const Graph& g : named_graphs()) {
    CliqueList list = maximal_cliques(g);
    CHECK(std::is_sorted(list.cliques.begin(), list.cliques.end()));
    CHECK(std::adjacent_find(list.cliques.begin(), list.cliques.end()) == list.cliques.end());
    VertexSet covered(g.order());
    for (const auto& c : list.cliques) {
      CHECK(is_complete(g, c));
      CHECK(is_maximal_complete(g, c));
      covered |= c;
    }
    CHECK(covered.size() == g.order());
  }
}

TEST_CASE("clique enumeration agrees with subset filtering") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const std::size_t n = 1 + rng() % 7;
    Graph g = oracle::random_graph(n, (1 + rng() % 9) / 10.0, rng);
    CHECK(as_family(maximal_cliques(g)) == oracle::maximal_cliques(g));
    ++checked;
  }
  for (const Graph& g : named_graphs())
    if (g.order() <= 16) CHECK(as_family(maximal_cliques(g)) == oracle::maximal_cliques(g));
  CHECK(checked == 5000);
}

TEST_CASE("clique cap raises a resource error") {
  try {
    maximal_cliques(make_octahedron(5), 10);
    FAIL("expected the cap to trip");
  } catch (const CliqueLimitExceeded& e) {
    CHECK(e.partial() == 10);
  }
  CHECK(maximal_cliques(make_octahedron(5), 32).size() == 32);
}

TEST_CASE("clique graphs") {
  CHECK(clique_graph(make_complete(6)).graph == make_complete(1));
  CHECK(canonical_form(clique_graph(make_cycle(4)).graph) == canonical_form(make_cycle(4)));
  CHECK(canonical_form(clique_graph(make_octahedron(3)).graph) ==
        canonical_form(make_octahedron(4)));
  CHECK(canonical_form(clique_graph(make_octahedron(2)).graph) ==
        canonical_form(make_octahedron(2)));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    Graph g = oracle::random_graph(1 + rng() % 7, 0.5, rng);
    CliqueGraph kg = clique_graph(g);
    CHECK(kg.graph.order() == kg.cliques.size());
    // Both the library and the oracle list cliques in lexicographic order.
    CHECK(kg.graph == oracle::clique_graph(g));
  }
}

TEST_CASE("intersection graph of an explicit family") {
  std::vector<VertexSet> fam{VertexSet(4, {0, 1}), VertexSet(4, {1, 2}), VertexSet(4, {3})};
  Graph g = intersection_graph(fam, 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}
