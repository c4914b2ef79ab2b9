#include <doctest.h>

#include <algorithm>

#include "locc/decompose.hpp"
#include "locc/generators.hpp"
#include "locc/verify.hpp"
#include "oracles.hpp"

using namespace locc;

namespace {

Graph graph_from_mask(int n, unsigned mask) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    isolated.push_back(std::to_string(i));
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (1u << bit)) edges.emplace_back(std::to_string(i), std::to_string(j));
  }
  return Graph::from_edge_list(edges, isolated);
}

bool brute_wheel_free(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!oracle::brute_is_chordal(induced_subgraph(g, g.neighbors(v)))) return false;
  return true;
}

}  // namespace

TEST_CASE("every 5-vertex graph: recognition and decomposition against brute force") {
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    Graph g = graph_from_mask(5, mask);
    CAPTURE(mask);

    bool chordal = oracle::brute_is_chordal(g);
    CHECK(is_chordal(g).chordal == chordal);

    auto hole_len = oracle::brute_shortest_hole_len(g);
    auto hole = shortest_hole(g);
    CHECK(hole.has_value() == hole_len.has_value());
    if (hole) CHECK(static_cast<int>(hole->size()) == *hole_len);

    bool wheel_free = brute_wheel_free(g);
    CHECK(is_wheel_free(g).wheel_free == wheel_free);

    auto rep = locality(g);
    if (chordal) {
      CHECK(rep.status == LocalityStatus::chordal);
    } else if (wheel_free) {
      REQUIRE(rep.status == LocalityStatus::locally_chordal);
      CHECK(*rep.r_star == *hole_len - 1);
    } else {
      CHECK(rep.status == LocalityStatus::not_locally_chordal);
    }

    if (!wheel_free) continue;
    auto h = decompose(g);
    CHECK(check_clique_graph(h).pass);
    CHECK(check_per_ball_clique_trees(h).pass);
    CHECK(check_weight_certificate(h).pass);
    auto max_k = max_k_acyclic_brute(g, co_part_family(h), false).max_k;
    if (chordal) {
      CHECK(!max_k.has_value());
    } else {
      CHECK(max_k == *hole_len - 1);
    }
  }
}

TEST_CASE("output weight is optimal among 2-acyclic spanning subgraphs") {
  auto optimal_weight = [](const CliqueIntersectionGraph& kg, const Graph& g) {
    int m = kg.edge_count();
    REQUIRE(m <= 12);
    long long best = -1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      CliqueGraph cand;
      cand.kg = kg;
      for (int e = 0; e < m; ++e)
        if (mask & (1u << e)) cand.edge_ids.push_back(e);
      if (!check_k_acyclic_brute(g, co_part_family(cand), 2, false).pass) continue;
      best = std::max(best, cand.total_weight());
    }
    return best;
  };

  std::vector<Graph> inputs;
  inputs.push_back(make_cycle(4));
  inputs.push_back(make_cycle(5));
  inputs.push_back(Graph::from_edge_list({{"b", "a"}, {"b", "c"}, {"b", "d"}}));
  inputs.push_back(Graph::from_edge_list(
      {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}, {"d", "e"}}));
  inputs.push_back(gen_clique_glued(make_cycle(5), 1, 0).graph);
  SplitMix64 rng(3030);
  while (inputs.size() < 10) {
    Graph g = oracle::random_graph(6, 30 + static_cast<int>(rng.below(30)), rng);
    if (!is_wheel_free(g).wheel_free) continue;
    if (clique_intersection_graph(g).edge_count() > 12) continue;
    inputs.push_back(g);
  }

  for (const auto& g : inputs) {
    auto h = decompose(g);
    CHECK(h.total_weight() == optimal_weight(h.kg, g));
  }
}
