#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locc/graph.hpp"

namespace locc {

/// 64-bit mixing PRNG, written out so other implementations can reproduce
/// the corpora bit-exactly:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// below(n) reduces by plain modulo.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

/// Intersection graph of subtrees of a tree; vertex i of the result stands
/// for subtrees[i], labels are decimal indices.
Graph subtree_intersection_graph(const Graph& tree, const std::vector<std::vector<int>>& subtrees);

/// Random tree on n nodes plus n random subtrees grown by up to `density`
/// expansion steps; the subtree intersection graph is chordal by
/// construction.
Graph gen_chordal(int n, int density, std::uint64_t seed);

struct GluedGraph {
  Graph graph;
  Graph model;
  std::optional<int> r_star;  // girth(model) - 1; nullopt = infinite (forest model)
  int clique_count = 0;
};

/// One clique per model node: `private_size` private vertices plus one
/// shared vertex per incident model edge. The cliques are exactly K(G),
/// 𝐊(G) is isomorphic to the model, and r* = girth(model) - 1.
/// Requires girth(model) >= 4 or a forest model; private_size 0 needs
/// minimum model degree >= 2.
GluedGraph gen_clique_glued(const Graph& model, int private_size, std::uint64_t seed);

/// Random connected graph with girth >= girth_min and maximum degree at
/// most max_degree: a degree-capped random tree plus rejected random edge
/// additions (an edge is accepted when the endpoints are at distance at
/// least girth_min - 1). attempt_budget <= 0 defaults to 20 * n.
Graph gen_high_girth(int n, int girth_min, int max_degree, std::uint64_t seed,
                     long long attempt_budget = 0);

Graph make_cycle(int n);                 // labels "1".."n"
Graph make_path(int n);                  // labels "1".."n"
Graph make_complete(int n);              // labels "1".."n"
Graph make_wheel(int rim_length);        // hub "0", rim "1".."n"; rim_length >= 4
Graph make_petersen();                   // labels "0".."9"

}  // namespace locc
