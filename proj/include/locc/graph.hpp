#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locc/errors.hpp"

namespace locc {

/// Immutable finite simple graph. Vertices carry string labels; internally
/// they are dense indices sorted by the label order, so index order is the
/// one strict total order used for tie-breaking everywhere downstream.
///
/// Label order: when every label of the (top-level) graph parses as a
/// decimal integer, labels compare numerically (leading zeros ignored,
/// ties broken by the raw string); otherwise plain lexicographic. Subgraphs
/// inherit the host's mode so vertex order is stable under restriction.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(const std::vector<std::pair<std::string, std::string>>& pairs,
                              const std::vector<std::string>& isolated = {});

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  long long edge_count() const { return edge_count_; }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label, -1 when absent.
  int index_of(const std::string& lab) const;
  /// Index of a label; throws InvalidInput when absent.
  int require_vertex(const std::string& lab) const;
  bool has_vertex(const std::string& lab) const { return index_of(lab) >= 0; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  /// All edges as index pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edge_pairs() const;

  bool numeric_label_order() const { return numeric_order_; }

  /// Subgraph on a vertex subset with an explicit edge subset (edges must
  /// join vertices of the subset). Inherits the label-order mode.
  Graph subgraph(const std::vector<int>& vertices,
                 const std::vector<std::pair<int, int>>& edges) const;

  bool operator==(const Graph& other) const;

 private:
  static Graph build(std::vector<std::string> labels,
                     const std::vector<std::pair<int, int>>& index_edges, bool numeric_order);

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::string, int> index_;
  long long edge_count_ = 0;
  bool numeric_order_ = false;
};

/// True when the label consists solely of decimal digits.
bool numeric_label(const std::string& s);
/// The label order described on Graph.
bool label_less(const std::string& a, const std::string& b, bool numeric_mode);

struct Ball {
  std::string center;
  int radius_numerator = 0;  // radius is radius_numerator / 2
  Graph subgraph;
};

/// BFS distances from v; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int v);
std::vector<int> distances_from(const Graph& g, const std::string& v);

/// Ball of radius r/2: vertices at distance <= floor(r/2); an edge xy is
/// kept iff dist(x) + dist(y) < r.
Ball ball(const Graph& g, const std::string& v, int r);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& vertex_labels);

bool is_acyclic(const Graph& g);

/// Connected components as sorted index lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

/// A shortest cycle as a vertex index sequence (no repeated start), or
/// nullopt when there is no cycle of length <= max_len.
std::optional<std::vector<int>> shortest_cycle(const Graph& g,
                                               std::optional<int> max_len = std::nullopt);

/// Length of a shortest cycle; nullopt when acyclic (or none within max_len).
std::optional<int> girth(const Graph& g, std::optional<int> max_len = std::nullopt);

int eccentricity(const Graph& g, int v);

/// Exact isomorphism by backtracking with 1-WL color pruning. Throws
/// TooLarge above max_vertices.
bool is_isomorphic_small(const Graph& g1, const Graph& g2, int max_vertices = 64);

}  // namespace locc
