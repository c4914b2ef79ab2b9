#include <doctest.h>

#include <algorithm>

#include "locc/generators.hpp"
#include "locc/graph.hpp"
#include "oracles.hpp"

using namespace locc;

namespace {

Graph p3() { return Graph::from_edge_list({{"a", "b"}, {"b", "c"}}); }

Graph c5_named() {
  return Graph::from_edge_list({{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v1"}});
}

}  // namespace

TEST_CASE("from_edge_list basics") {
  Graph g = p3();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(g.index_of("a"), g.index_of("b")));
  CHECK(!g.adjacent(g.index_of("a"), g.index_of("c")));

  Graph single = Graph::from_edge_list({}, {"x"});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph dedup = Graph::from_edge_list({{"a", "b"}, {"b", "a"}, {"a", "b"}});
  CHECK(dedup.vertex_count() == 2);
  CHECK(dedup.edge_count() == 1);

  CHECK_THROWS_AS(Graph::from_edge_list({{"a", "a"}}), InvalidInput);
}

TEST_CASE("numeric label order kicks in when all labels are integers") {
  Graph g = Graph::from_edge_list({{"2", "10"}}, {"9"});
  CHECK(g.labels() == std::vector<std::string>{"2", "9", "10"});
  Graph mixed = Graph::from_edge_list({{"2", "10"}}, {"a"});
  CHECK(mixed.labels() == std::vector<std::string>{"10", "2", "a"});
}

TEST_CASE("distances") {
  Graph g = p3();
  auto dist = distances_from(g, "a");
  CHECK(dist[g.index_of("a")] == 0);
  CHECK(dist[g.index_of("b")] == 1);
  CHECK(dist[g.index_of("c")] == 2);

  Graph c5 = make_cycle(5);
  auto d5 = distances_from(c5, "1");
  std::vector<int> sorted(d5);
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 1, 2, 2});

  Graph two = Graph::from_edge_list({}, {"a", "b"});
  auto d2 = distances_from(two, "a");
  CHECK(d2[two.index_of("b")] == -1);

  CHECK_THROWS_AS(distances_from(g, "nope"), InvalidInput);
}

TEST_CASE("ball follows the strict edge rule") {
  Graph tri = Graph::from_edge_list({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  Ball b = ball(tri, "a", 2);
  CHECK(b.subgraph.vertex_count() == 3);
  CHECK(b.subgraph.edge_count() == 2);  // bc excluded: 1 + 1 = 2, not < 2
  CHECK(!b.subgraph.adjacent(b.subgraph.index_of("b"), b.subgraph.index_of("c")));

  Graph g = p3();
  Ball whole = ball(g, "b", 2);
  CHECK(whole.subgraph.vertex_count() == 3);
  CHECK(whole.subgraph.edge_count() == 2);

  Graph c5 = c5_named();
  Ball b3 = ball(c5, "v1", 3);
  CHECK(b3.subgraph.labels() == std::vector<std::string>{"v1", "v2", "v5"});
  CHECK(b3.subgraph.edge_count() == 2);
  CHECK(b3.subgraph == oracle::ball_oracle(c5, "v1", 3));
}

TEST_CASE("ball invariants on random graphs") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = oracle::random_graph(9, 25, rng);
    for (int r = 0; r <= 7; ++r) {
      std::string center = g.label(static_cast<int>(rng.below(g.vertex_count())));
      Ball b = ball(g, center, r);
      CHECK(b.subgraph == oracle::ball_oracle(g, center, r));

      // Odd r: the ball is the induced subgraph on the distance-floor(r/2) set.
      if (r % 2 == 1) {
        auto dist = distances_from(g, center);
        std::vector<int> inside;
        for (int u = 0; u < g.vertex_count(); ++u)
          if (dist[u] >= 0 && 2 * dist[u] <= r) inside.push_back(u);
        CHECK(b.subgraph == induced_subgraph(g, inside));
      }

      // Monotone in r as subgraphs.
      Ball bigger = ball(g, center, r + 1);
      for (auto [x, y] : b.subgraph.edge_pairs()) {
        int bx = bigger.subgraph.index_of(b.subgraph.label(x));
        int by = bigger.subgraph.index_of(b.subgraph.label(y));
        CHECK(bx >= 0);
        CHECK(by >= 0);
        CHECK(bigger.subgraph.adjacent(bx, by));
      }
    }

    // Saturation: r beyond twice the eccentricity captures the component.
    int c = static_cast<int>(rng.below(g.vertex_count()));
    int r_sat = 2 * eccentricity(g, c) + 1;
    Ball sat = ball(g, g.label(c), r_sat);
    auto comps = components(g);
    for (const auto& comp : comps) {
      if (std::find(comp.begin(), comp.end(), c) == comp.end()) continue;
      CHECK(sat.subgraph == induced_subgraph(g, comp));
    }
  }
}

TEST_CASE("induced subgraphs") {
  Graph c5 = c5_named();
  Graph path = induced_subgraph(c5, std::vector<std::string>{"v1", "v2", "v3"});
  CHECK(path.edge_count() == 2);
  Graph pair = induced_subgraph(c5, std::vector<std::string>{"v1", "v3"});
  CHECK(pair.edge_count() == 0);
  Graph k4 = make_complete(4);
  Graph tri = induced_subgraph(k4, std::vector<std::string>{"1", "2", "4"});
  CHECK(tri.edge_count() == 3);
  CHECK_THROWS_AS(induced_subgraph(c5, std::vector<std::string>{"zz"}), InvalidInput);
}

TEST_CASE("acyclicity and components") {
  CHECK(is_acyclic(p3()));
  CHECK(!is_acyclic(make_cycle(5)));
  CHECK(is_acyclic(Graph{}));
  CHECK(components(p3()).size() == 1);
  CHECK(components(Graph::from_edge_list({}, {"a", "b"})).size() == 2);

  Graph c5_plus_k3 = Graph::from_edge_list(
      {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}, {"6", "7"}, {"7", "8"}, {"6", "8"}});
  CHECK(components(c5_plus_k3).size() == 2);
}

TEST_CASE("girth") {
  CHECK(girth(make_cycle(5)) == 5);
  CHECK(!girth(make_path(6)).has_value());
  CHECK(girth(make_petersen()) == 5);
  CHECK(oracle::brute_girth(make_petersen()) == 5);
  CHECK(!girth(make_cycle(7), 6).has_value());
  CHECK(girth(make_cycle(7), 7) == 7);

  auto cyc = shortest_cycle(make_petersen());
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 5);
  CHECK(oracle::cycle_is_induced(make_petersen(), *cyc));
}

TEST_CASE("girth agrees with brute-force cycle enumeration") {
  SplitMix64 rng(977);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(4 + static_cast<int>(rng.below(8)), 10 + static_cast<int>(rng.below(40)), rng);
    CHECK(girth(g) == oracle::brute_girth(g));
    auto cyc = shortest_cycle(g);
    if (cyc) {
      CHECK(static_cast<int>(cyc->size()) == *oracle::brute_girth(g));
    }
  }
}

TEST_CASE("isomorphism") {
  Graph c5 = make_cycle(5);
  Graph c5_relabelled = Graph::from_edge_list(
      {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "t"}, {"t", "p"}});
  CHECK(is_isomorphic_small(c5, c5_relabelled));
  CHECK(!is_isomorphic_small(c5, make_path(5)));

  // Petersen under a nontrivial relabelling.
  Graph pet = make_petersen();
  std::vector<std::string> perm{"d", "h", "a", "f", "b", "j", "c", "i", "g", "e"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : pet.edge_pairs()) edges.emplace_back(perm[u], perm[v]);
  CHECK(is_isomorphic_small(pet, Graph::from_edge_list(edges)));

  Graph c6 = make_cycle(6);
  Graph two_triangles = Graph::from_edge_list(
      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"e", "f"}, {"d", "f"}});
  CHECK(!is_isomorphic_small(c6, two_triangles));

  std::vector<std::pair<std::string, std::string>> big;
  for (int i = 0; i < 65; ++i) big.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  Graph long_path = Graph::from_edge_list(big);
  CHECK_THROWS_AS(is_isomorphic_small(long_path, long_path), TooLarge);
}
