#include <doctest.h>

#include <algorithm>

#include "locc/decompose.hpp"
#include "locc/generators.hpp"
#include "oracles.hpp"

using namespace locc;

namespace {

Graph diamond() {
  return Graph::from_edge_list({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

}  // namespace

TEST_CASE("decompose on the smallest examples") {
  auto p3 = decompose(Graph::from_edge_list({{"a", "b"}, {"b", "c"}}));
  CHECK(p3.edge_ids.size() == 1);
  CHECK(p3.total_weight() == 1);

  auto dia = decompose(diamond());
  CHECK(dia.edge_ids.size() == 1);
  CHECK(dia.total_weight() == 2);
  CHECK(dia.total_weight() == weight_target(diamond()));

  auto c5 = decompose(make_cycle(5));
  CHECK(c5.edge_ids.size() == 5);
  CHECK(c5.total_weight() == 5);
  CHECK(is_isomorphic_small(c5.model_graph(), make_cycle(5)));

  auto k4 = decompose(make_complete(4));
  CHECK(k4.kg.node_count() == 1);
  CHECK(k4.edge_ids.empty());
  CHECK(k4.total_weight() == 0);
}

TEST_CASE("decompose rejects wheels with a witness") {
  CHECK_THROWS_AS(decompose(make_wheel(4)), NotLocallyChordal);
  try {
    decompose(make_wheel(6));
  } catch (const NotLocallyChordal& e) {
    CHECK(e.witness.rim.size() >= 4);
  }
  auto raw = decompose_unchecked(make_wheel(4));
  CHECK(!raw.guaranteed);
}

TEST_CASE("kruskal over restricted node sets") {
  // Single edge.
  auto kg1 = clique_intersection_graph(diamond());
  auto forest1 = kruskal_max_weight(kg1, {0, 1});
  CHECK(forest1.size() == 1);

  // Weights 2 then 1 on a path of three cliques.
  Graph g = Graph::from_edge_list(
      {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
  auto kg2 = clique_intersection_graph(g);
  auto all2 = kruskal_max_weight(kg2, {0, 1, 2});
  CHECK(all2.size() == 2);

  // Equal-weight 𝐊 triangle from a star: the first two edges of the global
  // order survive.
  Graph star = Graph::from_edge_list({{"b", "a"}, {"b", "c"}, {"b", "d"}});
  auto kg3 = clique_intersection_graph(star);
  REQUIRE(kg3.node_count() == 3);
  REQUIRE(kg3.edge_count() == 3);
  auto forest3 = kruskal_max_weight(kg3, {0, 1, 2});
  CHECK(forest3 == std::vector<int>{0, 1});
}

TEST_CASE("graph decomposition view") {
  auto dia = as_graph_decomposition(decompose(diamond()));
  REQUIRE(dia.bags.size() == 2);
  CHECK(dia.bags[dia.model.require_vertex("a,b,c")] == std::vector<std::string>{"a", "b", "c"});
  CHECK(dia.bags[dia.model.require_vertex("b,c,d")] == std::vector<std::string>{"b", "c", "d"});
  CHECK(width(dia) == 3);

  auto kn = as_graph_decomposition(decompose(make_complete(6)));
  CHECK(kn.bags.size() == 1);
  CHECK(width(kn) == 6);

  auto c5 = as_graph_decomposition(decompose(make_cycle(5)));
  CHECK(c5.bags.size() == 5);
  CHECK(width(c5) == 2);
  CHECK(is_isomorphic_small(c5.model, make_cycle(5)));
}

TEST_CASE("parallel and sequential runs agree for any task count") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g;
    if (trial % 3 == 0)
      g = gen_chordal(20, 4, rng.next());
    else if (trial % 3 == 1)
      g = gen_high_girth(24, 5, 4, rng.next());
    else
      g = gen_clique_glued(make_cycle(7), 2, rng.next()).graph;
    auto seq = decompose(g, DecomposeMode::sequential, 1);
    for (int threads : {1, 2, 3, 8}) {
      auto par = decompose(g, DecomposeMode::parallel, threads);
      CHECK(par.edge_ids == seq.edge_ids);
    }
  }
}

TEST_CASE("chordal inputs give maximum-weight spanning forests") {
  SplitMix64 rng(211);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = gen_chordal(4 + static_cast<int>(rng.below(40)), 4, rng.next());
    auto h = decompose(g);
    CHECK(is_acyclic(h.model_graph()));
    CHECK(h.total_weight() == oracle::prim_max_weight_forest(h.kg));
    CHECK(h.total_weight() == weight_target(g));
  }
}

TEST_CASE("order-preserving relabelling maps the output edge for edge") {
  auto relabel = [](const Graph& g, const std::string& prefix) {
    // Index order is the label order, so a prefix over the index keeps it.
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> isolated;
    auto named = [&](int v) {
      std::string tag = std::to_string(v);
      return prefix + std::string(3 - tag.size(), '0') + tag;
    };
    for (auto [u, v] : g.edge_pairs()) edges.emplace_back(named(u), named(v));
    for (int v = 0; v < g.vertex_count(); ++v) isolated.push_back(named(v));
    return Graph::from_edge_list(edges, isolated);
  };

  SplitMix64 rng(307);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = trial % 2 == 0 ? gen_clique_glued(make_cycle(5), 1, 0).graph
                             : gen_high_girth(12, 5, 4, rng.next());
    Graph mapped = relabel(g, "x");
    auto h1 = decompose(g);
    auto h2 = decompose(mapped);
    REQUIRE(h1.edge_ids.size() == h2.edge_ids.size());
    // Same positions in the global order on both sides.
    CHECK(h1.edge_ids == h2.edge_ids);
  }
}
