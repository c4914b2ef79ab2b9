#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "locc/graph.hpp"

namespace locc {

struct MaximalClique {
  std::vector<int> members;  // host vertex indices, ascending
  std::string key;           // member labels joined by ","
};

struct KEdge {
  int a = 0, b = 0;  // node ids, a < b
  int weight = 0;    // |K_a ∩ K_b|
};

/// The intersection graph of the maximal cliques of a host graph. Nodes are
/// sorted by their member lists (host vertex order); edges join cliques with
/// nonempty intersection, weighted by intersection size, and are stored in
/// the one global order every per-ball run consumes:
///   weight decreasing, then the sorted vertex list of the union, then the
///   (members(a), members(b)) pair, all in host vertex order.
class CliqueIntersectionGraph {
 public:
  static CliqueIntersectionGraph build(const Graph& host);

  const Graph& host() const { return host_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const MaximalClique& node(int id) const { return nodes_[id]; }
  const std::vector<MaximalClique>& nodes() const { return nodes_; }

  /// Edges in global order; edge ids are positions in this list.
  const std::vector<KEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edge id for a node pair, -1 when the cliques are disjoint.
  int edge_id(int a, int b) const;

  /// K_G(v): ids of the cliques containing host vertex v, ascending.
  const std::vector<int>& membership(int host_vertex) const { return membership_[host_vertex]; }

  /// Node ids of the host's 𝐊-neighbors of a node, ascending.
  const std::vector<int>& node_neighbors(int id) const { return node_adj_[id]; }

 private:
  Graph host_;
  std::vector<MaximalClique> nodes_;
  std::vector<KEdge> edges_;
  std::vector<std::vector<int>> membership_;
  std::vector<std::vector<int>> node_adj_;
  std::unordered_map<std::uint64_t, int> edge_index_;
};

/// All inclusion-maximal cliques, as ascending index lists sorted
/// lexicographically. Bron–Kerbosch with pivoting.
std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g);

CliqueIntersectionGraph clique_intersection_graph(const Graph& g);

/// W(G) = sum of |K| over maximal cliques K minus |V(G)| — the exact total
/// weight of every 2-acyclic clique graph.
long long weight_target(const Graph& g);
long long weight_target(const CliqueIntersectionGraph& kg);

/// Comparator realizing the global edge order documented on
/// CliqueIntersectionGraph. Exposed for tests and restricted re-sorts.
bool global_edge_less(const CliqueIntersectionGraph& kg, const KEdge& x, const KEdge& y);

/// The global order as an explicit edge list (a copy of edges()).
std::vector<KEdge> global_edge_order(const CliqueIntersectionGraph& kg);

}  // namespace locc
