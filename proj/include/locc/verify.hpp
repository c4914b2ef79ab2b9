#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locc/decompose.hpp"
#include "locc/recognition.hpp"

namespace locc {

// Guards for the brute-force enumerators; the structures being certified
// all have witnesses of at most ten vertices.
inline constexpr int kBruteSubsetGuard = 16;
inline constexpr int kBruteConnectedGuard = 20;

/// A family of regions: the induced subgraphs model[member_nodes[i]].
/// For co-part families the index set is the host's vertex set and names
/// are the host labels.
struct RegionFamily {
  Graph model;
  std::vector<std::vector<int>> member_nodes;  // ascending model node ids
  std::vector<std::string> names;
};

RegionFamily co_part_family(const CliqueGraph& h);
RegionFamily co_part_family(const GraphDecomposition& d);

struct CliqueGraphCheck {
  bool pass = false;
  std::string disconnected_vertex;
};

/// Spanning + every co-part H[K_G(v)] connected.
CliqueGraphCheck check_clique_graph(const CliqueGraph& h);

struct PerBallCheck {
  bool pass = false;
  std::string vertex;
  std::string neighbor;  // set when an adhesion intersection is the problem
  std::string reason;
};

/// H[K_G(v)] a clique tree of B_{3/2}(v) for every v: co-parts are trees and
/// co-parts of adjacent vertices intersect in a connected subgraph.
PerBallCheck check_per_ball_clique_trees(const CliqueGraph& h);

struct AcyclicityCheck {
  bool pass = false;
  std::vector<std::string> witness;  // failing member names
};

/// Every union of at most k members acyclic; connected_only restricts the
/// candidate index sets to those connected in `host`.
AcyclicityCheck check_k_acyclic_brute(const Graph& host, const RegionFamily& fam, int k,
                                      bool connected_only);

struct MaxAcyclicity {
  std::optional<int> max_k;  // nullopt = every union acyclic
  std::vector<std::string> witness;
};

MaxAcyclicity max_k_acyclic_brute(const Graph& host, const RegionFamily& fam, bool connected_only);

struct CertifiedAcyclicity {
  std::optional<int> k;  // nullopt = infinite
  bool via_fast = false;
};

/// Per-ball clique trees imply 2-acyclic, hence Helly and 3-acyclic, hence
/// k-acyclic exactly up to the locality r*; otherwise downgrade to brute.
CertifiedAcyclicity check_k_acyclic_fast(const CliqueGraph& h, const LocalityReport& rep);

struct HellyCheck {
  bool pass = false;
  std::array<std::string, 3> witness_triple;
};

/// Triple-wise Helly, sufficient for the full property on 2-acyclic
/// families; refuses non-2-acyclic input with PreconditionFailed.
HellyCheck check_helly_triples(const RegionFamily& fam);

struct WeightCheck {
  bool pass = false;
  long long weight = 0;
  long long target = 0;
  bool double_counting_ok = false;
};

/// Total weight of H equals W(G), plus the double-counting identity
/// sum of edge weights == sum over v of |E(H[K_G(v)])|.
WeightCheck check_weight_certificate(const CliqueGraph& h);

struct TreeDecompositionCheck {
  bool pass = false;
  std::string reason;
  std::vector<std::string> witness;
};

TreeDecompositionCheck check_tree_decomposition(const GraphDecomposition& t, const Graph& target,
                                                bool into_cliques);

struct GirthBoundCheck {
  bool pass = false;
  std::optional<int> short_cycle_length;
};

/// girth(H) > r.
GirthBoundCheck check_girth_bound(const CliqueGraph& h, int r);

/// Visits every connected vertex set of the given size exactly once, as an
/// ascending index list; stops early when visit returns false (and then
/// returns false). Drives the connected-only acyclicity checks.
bool for_each_connected_subset(const Graph& g, int size,
                               const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace locc
