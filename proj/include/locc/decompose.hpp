#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locc/cliques.hpp"
#include "locc/graph.hpp"
#include "locc/recognition.hpp"

namespace locc {

/// Raised by decompose() when the input contains an induced wheel.
class NotLocallyChordal : public std::runtime_error {
 public:
  explicit NotLocallyChordal(WheelWitness w)
      : std::runtime_error("input graph has an induced wheel at hub '" + w.hub + "'"),
        witness(std::move(w)) {}
  WheelWitness witness;
};

/// A spanning subgraph H of 𝐊(G), held as the sorted list of selected
/// global-edge-order positions. Node set is always all of K(G).
struct CliqueGraph {
  CliqueIntersectionGraph kg;
  std::vector<int> edge_ids;  // ascending
  bool guaranteed = true;     // false for decompose_unchecked output

  bool has_edge(int edge_id) const;
  long long total_weight() const;

  /// Co-part H[K_G(v)]: the membership node ids plus the H-edges joining
  /// them (as global edge ids).
  std::vector<int> co_part_edges(int host_vertex) const;

  /// H as a labeled graph (node labels = clique keys).
  Graph model_graph() const;
};

enum class DecomposeMode { parallel, sequential };

struct DecomposeStats {
  double wall_ms = 0.0;
  double per_vertex_max_ms = 0.0;
  int threads_used = 1;
};

/// Per-vertex Kruskal on 𝐊(B_{3/2}(v)) under the restriction of the global
/// edge order, unioned over all vertices. Throws NotLocallyChordal when the
/// input is not wheel-free. task_count <= 0 picks the hardware parallelism.
CliqueGraph decompose(const Graph& g, DecomposeMode mode = DecomposeMode::parallel,
                      int task_count = 0, DecomposeStats* stats = nullptr);

/// Same construction without the wheel-freeness gate; the result carries no
/// guarantees and is marked accordingly.
CliqueGraph decompose_unchecked(const Graph& g, DecomposeMode mode = DecomposeMode::parallel,
                                int task_count = 0, DecomposeStats* stats = nullptr);

/// Maximum-weight spanning forest (Kruskal) of 𝐊(G) restricted to a node
/// subset, consuming the global order; returns selected global edge ids.
std::vector<int> kruskal_max_weight(const CliqueIntersectionGraph& kg,
                                    const std::vector<int>& node_subset);

/// Model graph + bags; bags are member-label lists aligned with the model's
/// vertex indexing. Co-parts are the induced model[W_v].
struct GraphDecomposition {
  Graph target;
  Graph model;
  std::vector<std::vector<std::string>> bags;

  /// W_v: model node indices whose bag contains the label.
  std::vector<int> co_bag(const std::string& vertex_label) const;
};

using TreeDecomposition = GraphDecomposition;

/// Bags are the maximal cliques themselves.
GraphDecomposition as_graph_decomposition(const CliqueGraph& h);

/// Maximum bag size; 0 for an empty decomposition.
int width(const GraphDecomposition& d);

}  // namespace locc
