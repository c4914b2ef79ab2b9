#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locc/decompose.hpp"
#include "locc/graph.hpp"

namespace locc {

// Cycle enumeration guard for the separation checker.
inline constexpr int kCycleEnumGuard = 20;

/// {E0, X, E1}: a bipartition of the edges leaving X. Boundary edges are
/// stored as (x, w) with x in X.
struct PreSeparation {
  std::vector<int> X;  // host vertex ids, ascending
  std::vector<std::pair<int, int>> E0, E1;
  std::optional<std::pair<int, int>> origin;  // kg node ids of the inducing 𝐊-edge

  std::vector<std::string> x_labels(const Graph& g) const;
};

/// The pre-separation induced by an H-edge f = {K1, K2}: X = K1 ∩ K2, and a
/// boundary edge vw goes to the side of the co-part tree H[K_G(v)] - f whose
/// component holds a bag containing w. Requires co-parts to be trees with
/// connected pairwise intersections along edges; throws PreconditionFailed.
PreSeparation edge_pre_separation(const CliqueGraph& h, int edge_id);

struct LocalSeparationCertificate {
  int r = 0;
  bool is_local_separation = false;
  std::vector<int> witness_walk;  // vertex ids; starts and ends in X

  std::vector<std::string> walk_labels(const Graph& g) const;
};

/// No cycle of length <= r may carry an X-walk whose first and last edges
/// fall in different classes. Brute-force over all short cycles; the parity
/// of boundary crossings per cycle is verified along the way.
LocalSeparationCertificate check_r_local_separation(const Graph& g, const PreSeparation& p, int r);

struct LocallyInduced {
  GraphDecomposition dec;  // target = the r/2-ball
  std::vector<std::string> disconnected_co_parts;  // ball vertices with disconnected co-parts
};

/// Restriction of a decomposition to the r/2-ball around v: model nodes and
/// edges from co-parts of vertices at distance < r/2, bags cut to the ball.
/// For even r the boundary co-parts may be disconnected; they are flagged,
/// not rejected.
LocallyInduced locally_induced(const GraphDecomposition& d, const std::string& v, int r);

/// Tree-decomposition of the r/2-ball into cliques. Odd r: the locally
/// induced decomposition. Even r: the (r-1)-induced decomposition plus one
/// leaf node per boundary vertex u with bag {u} ∪ (N(u) ∩ N^{r/2-1}(v)),
/// attached to the least model node whose bag contains that neighborhood.
TreeDecomposition locally_derived(const GraphDecomposition& d, const std::string& v, int r);

}  // namespace locc
