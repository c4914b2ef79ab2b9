#include "locc/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace locc {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Connectivity of an induced subgraph of the kg node set under the H edges.
bool h_connected(const CliqueGraph& h, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::unordered_map<int, int> pos;
  pos.reserve(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) pos.emplace(nodes[i], static_cast<int>(i));
  std::vector<char> seen(nodes.size(), 0);
  std::deque<int> queue{nodes[0]};
  seen[0] = 1;
  size_t reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : h.kg.node_neighbors(u)) {
      auto it = pos.find(w);
      if (it == pos.end() || seen[it->second]) continue;
      int id = h.kg.edge_id(u, w);
      if (id < 0 || !h.has_edge(id)) continue;
      seen[it->second] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached == nodes.size();
}

int count_h_edges_within(const CliqueGraph& h, const std::vector<int>& nodes) {
  int count = 0;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      int id = h.kg.edge_id(nodes[i], nodes[j]);
      if (id >= 0 && h.has_edge(id)) ++count;
    }
  return count;
}

// Shared machinery for union-acyclicity over a region family.
class FamilyAnalyzer {
 public:
  explicit FamilyAnalyzer(const RegionFamily& fam) : fam_(fam) {
    int n = fam.model.vertex_count();
    auto edges = fam.model.edge_pairs();
    std::unordered_map<std::uint64_t, int> edge_idx;
    edge_idx.reserve(edges.size());
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      edge_idx.emplace(key(edges[e].first, edges[e].second), e);
    edge_ends_ = std::move(edges);
    member_edges_.resize(fam.member_nodes.size());
    for (size_t i = 0; i < fam.member_nodes.size(); ++i) {
      const auto& nodes = fam.member_nodes[i];
      for (int u : nodes)
        for (int w : fam.model.neighbors(u))
          if (u < w && std::binary_search(nodes.begin(), nodes.end(), w))
            member_edges_[i].push_back(edge_idx.at(key(u, w)));
      std::sort(member_edges_[i].begin(), member_edges_[i].end());
    }
    parent_.assign(n, 0);
    node_epoch_.assign(n, -1);
    edge_epoch_.assign(edge_ends_.size(), -1);
  }

  int size() const { return static_cast<int>(fam_.member_nodes.size()); }

  // Acyclicity of the union of induced subgraphs over the member set.
  bool union_acyclic(const std::vector<int>& members) {
    ++epoch_;
    for (int i : members) {
      for (int e : member_edges_[i]) {
        if (edge_epoch_[e] == epoch_) continue;
        edge_epoch_[e] = epoch_;
        if (!unite(edge_ends_[e].first, edge_ends_[e].second)) return false;
      }
    }
    return true;
  }

  bool members_intersect(int i, int j) const {
    const auto& a = fam_.member_nodes[i];
    const auto& b = fam_.member_nodes[j];
    size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
      if (a[x] == b[y]) return true;
      a[x] < b[y] ? ++x : ++y;
    }
    return false;
  }

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }

  int find(int x) {
    if (node_epoch_[x] != epoch_) {
      node_epoch_[x] = epoch_;
      parent_[x] = x;
    }
    while (true) {
      if (node_epoch_[parent_[x]] != epoch_) {
        node_epoch_[parent_[x]] = epoch_;
        parent_[parent_[x]] = parent_[x];
      }
      if (parent_[x] == x) return x;
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

  const RegionFamily& fam_;
  std::vector<std::pair<int, int>> edge_ends_;
  std::vector<std::vector<int>> member_edges_;
  std::vector<int> parent_, node_epoch_, edge_epoch_;
  int epoch_ = -1;
};

// All size-exact subsets in lexicographic order; visit returns false to stop.
template <typename F>
bool for_each_subset_of_size(int n, int size, F&& visit) {
  if (size > n) return true;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    if (!visit(pick)) return false;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Connected subsets of exact size, each enumerated once: the minimum vertex
// opens the set, the frontier is processed in order, and a frontier vertex
// skipped at some level stays banned for everything below it.
template <typename F>
bool for_each_connected_subset_of_size(const Graph& g, int size, F&& visit) {
  if (size <= 0) return true;
  int n = g.vertex_count();
  std::vector<int> subset;
  std::vector<char> in_subset(n, 0), banned(n, 0), in_frontier(n, 0);

  auto rec = [&](auto&& self, int start, const std::vector<int>& frontier) -> bool {
    if (static_cast<int>(subset.size()) == size) return visit(subset);
    std::vector<int> local_banned;
    bool keep_going = true;
    for (size_t idx = 0; idx < frontier.size() && keep_going; ++idx) {
      int v = frontier[idx];
      if (banned[v]) continue;
      std::vector<int> next(frontier.begin() + idx + 1, frontier.end());
      std::vector<int> added;
      for (int w : g.neighbors(v))
        if (w > start && !in_subset[w] && !banned[w] && !in_frontier[w]) {
          next.push_back(w);
          in_frontier[w] = 1;
          added.push_back(w);
        }
      subset.push_back(v);
      in_subset[v] = 1;
      keep_going = self(self, start, next);
      in_subset[v] = 0;
      subset.pop_back();
      for (int w : added) in_frontier[w] = 0;
      banned[v] = 1;
      local_banned.push_back(v);
    }
    for (int v : local_banned) banned[v] = 0;
    return keep_going;
  };

  for (int s = 0; s < n; ++s) {
    subset = {s};
    in_subset[s] = 1;
    std::vector<int> frontier;
    for (int w : g.neighbors(s))
      if (w > s) {
        frontier.push_back(w);
        in_frontier[w] = 1;
      }
    bool keep_going = rec(rec, s, frontier);
    for (int w : frontier) in_frontier[w] = 0;
    in_subset[s] = 0;
    if (!keep_going) return false;
  }
  return true;
}

std::vector<std::string> member_names(const RegionFamily& fam, const std::vector<int>& members) {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (int i : members) out.push_back(fam.names[i]);
  return out;
}

}  // namespace

RegionFamily co_part_family(const CliqueGraph& h) {
  RegionFamily fam;
  fam.model = h.model_graph();
  const Graph& host = h.kg.host();
  fam.member_nodes.resize(host.vertex_count());
  fam.names.reserve(host.vertex_count());
  for (int v = 0; v < host.vertex_count(); ++v) {
    fam.names.push_back(host.label(v));
    for (int id : h.kg.membership(v)) fam.member_nodes[v].push_back(fam.model.require_vertex(h.kg.node(id).key));
    std::sort(fam.member_nodes[v].begin(), fam.member_nodes[v].end());
  }
  return fam;
}

RegionFamily co_part_family(const GraphDecomposition& d) {
  RegionFamily fam;
  fam.model = d.model;
  fam.member_nodes.resize(d.target.vertex_count());
  fam.names = d.target.labels();
  for (int h = 0; h < d.model.vertex_count(); ++h)
    for (const auto& lab : d.bags[h]) fam.member_nodes[d.target.require_vertex(lab)].push_back(h);
  for (auto& nodes : fam.member_nodes) std::sort(nodes.begin(), nodes.end());
  return fam;
}

CliqueGraphCheck check_clique_graph(const CliqueGraph& h) {
  const Graph& host = h.kg.host();
  for (int v = 0; v < host.vertex_count(); ++v) {
    if (!h_connected(h, h.kg.membership(v))) return CliqueGraphCheck{false, host.label(v)};
  }
  return CliqueGraphCheck{true, {}};
}

PerBallCheck check_per_ball_clique_trees(const CliqueGraph& h) {
  const Graph& host = h.kg.host();
  for (int v = 0; v < host.vertex_count(); ++v) {
    const auto& nodes = h.kg.membership(v);
    if (!h_connected(h, nodes))
      return PerBallCheck{false, host.label(v), {}, "co-part disconnected"};
    if (count_h_edges_within(h, nodes) != static_cast<int>(nodes.size()) - 1)
      return PerBallCheck{false, host.label(v), {}, "co-part contains a cycle"};
  }
  for (auto [u, v] : host.edge_pairs()) {
    auto shared = sorted_intersection(h.kg.membership(u), h.kg.membership(v));
    if (shared.empty() || !h_connected(h, shared))
      return PerBallCheck{false, host.label(u), host.label(v), "co-part intersection disconnected"};
  }
  return PerBallCheck{true, {}, {}, {}};
}

AcyclicityCheck check_k_acyclic_brute(const Graph& host, const RegionFamily& fam, int k,
                                      bool connected_only) {
  if (k < 1) throw InvalidInput("k-acyclicity needs k >= 1");
  int guard = connected_only ? kBruteConnectedGuard : kBruteSubsetGuard;
  if (host.vertex_count() > guard)
    throw TooLarge("brute-force acyclicity limited to " + std::to_string(guard) + " vertices");
  FamilyAnalyzer analyzer(fam);
  std::vector<int> witness;
  for (int size = 1; size <= std::min(k, analyzer.size()); ++size) {
    auto visit = [&](const std::vector<int>& subset) {
      if (!analyzer.union_acyclic(subset)) {
        witness = subset;
        return false;
      }
      return true;
    };
    bool complete = connected_only ? for_each_connected_subset_of_size(host, size, visit)
                                   : for_each_subset_of_size(analyzer.size(), size, visit);
    if (!complete) return AcyclicityCheck{false, member_names(fam, witness)};
  }
  return AcyclicityCheck{true, {}};
}

MaxAcyclicity max_k_acyclic_brute(const Graph& host, const RegionFamily& fam, bool connected_only) {
  int guard = connected_only ? kBruteConnectedGuard : kBruteSubsetGuard;
  if (host.vertex_count() > guard)
    throw TooLarge("brute-force acyclicity limited to " + std::to_string(guard) + " vertices");
  FamilyAnalyzer analyzer(fam);
  std::vector<int> witness;
  for (int size = 1; size <= analyzer.size(); ++size) {
    auto visit = [&](const std::vector<int>& subset) {
      if (!analyzer.union_acyclic(subset)) {
        witness = subset;
        return false;
      }
      return true;
    };
    bool complete = connected_only ? for_each_connected_subset_of_size(host, size, visit)
                                   : for_each_subset_of_size(analyzer.size(), size, visit);
    if (!complete) return MaxAcyclicity{size - 1, member_names(fam, witness)};
  }
  return MaxAcyclicity{std::nullopt, {}};
}

CertifiedAcyclicity check_k_acyclic_fast(const CliqueGraph& h, const LocalityReport& rep) {
  auto per_ball = check_per_ball_clique_trees(h);
  if (per_ball.pass) {
    if (rep.status == LocalityStatus::chordal) return CertifiedAcyclicity{std::nullopt, true};
    if (rep.status == LocalityStatus::locally_chordal) return CertifiedAcyclicity{rep.r_star, true};
  }
  auto brute = max_k_acyclic_brute(h.kg.host(), co_part_family(h), false);
  return CertifiedAcyclicity{brute.max_k, false};
}

HellyCheck check_helly_triples(const RegionFamily& fam) {
  FamilyAnalyzer analyzer(fam);
  int n = analyzer.size();
  for (int i = 0; i < n; ++i) {
    if (!analyzer.union_acyclic({i}))
      throw PreconditionFailed("family is not 1-acyclic at member " + fam.names[i]);
    for (int j = i + 1; j < n; ++j)
      if (!analyzer.union_acyclic({i, j}))
        throw PreconditionFailed("family is not 2-acyclic at members " + fam.names[i] + ", " +
                                 fam.names[j]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!analyzer.members_intersect(i, j)) continue;
      for (int l = j + 1; l < n; ++l) {
        if (!analyzer.members_intersect(i, l) || !analyzer.members_intersect(j, l)) continue;
        auto common = sorted_intersection(sorted_intersection(fam.member_nodes[i], fam.member_nodes[j]),
                                          fam.member_nodes[l]);
        if (common.empty())
          return HellyCheck{false, {fam.names[i], fam.names[j], fam.names[l]}};
      }
    }
  }
  return HellyCheck{true, {}};
}

WeightCheck check_weight_certificate(const CliqueGraph& h) {
  WeightCheck res;
  res.weight = h.total_weight();
  res.target = weight_target(h.kg);
  long long per_vertex_edges = 0;
  for (int v = 0; v < h.kg.host().vertex_count(); ++v)
    per_vertex_edges += static_cast<long long>(h.co_part_edges(v).size());
  res.double_counting_ok = per_vertex_edges == res.weight;
  res.pass = res.weight == res.target && res.double_counting_ok;
  return res;
}

TreeDecompositionCheck check_tree_decomposition(const GraphDecomposition& t, const Graph& target,
                                                bool into_cliques) {
  for (const auto& bag : t.bags)
    for (const auto& lab : bag)
      if (!target.has_vertex(lab)) return {false, "bag member outside target", {lab}};

  if (!is_acyclic(t.model)) return {false, "model contains a cycle", {}};
  if (components(t.model).size() != components(target).size())
    return {false, "model component count differs from target", {}};

  // Coverage: every target vertex and edge inside some bag.
  std::vector<std::vector<int>> cobags(target.vertex_count());
  for (int h = 0; h < t.model.vertex_count(); ++h)
    for (const auto& lab : t.bags[h]) cobags[target.require_vertex(lab)].push_back(h);
  for (int v = 0; v < target.vertex_count(); ++v)
    if (cobags[v].empty()) return {false, "vertex not covered by any bag", {target.label(v)}};
  for (auto [u, v] : target.edge_pairs()) {
    bool covered = false;
    for (int h : cobags[u]) {
      const auto& bag = t.bags[h];
      if (std::find(bag.begin(), bag.end(), target.label(v)) != bag.end()) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, "edge not covered by any bag", {target.label(u), target.label(v)}};
  }

  // Co-bags induce connected, hence subtree, model subgraphs.
  for (int v = 0; v < target.vertex_count(); ++v) {
    auto& nodes = cobags[v];
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    Graph sub = induced_subgraph(t.model, nodes);
    if (components(sub).size() != 1)
      return {false, "co-bag does not induce a subtree", {target.label(v)}};
  }

  if (into_cliques) {
    for (int h = 0; h < t.model.vertex_count(); ++h) {
      const auto& bag = t.bags[h];
      for (size_t i = 0; i < bag.size(); ++i)
        for (size_t j = i + 1; j < bag.size(); ++j)
          if (!target.adjacent(target.require_vertex(bag[i]), target.require_vertex(bag[j])))
            return {false, "bag is not a clique", {bag[i], bag[j]}};
    }
  }
  return {true, {}, {}};
}

GirthBoundCheck check_girth_bound(const CliqueGraph& h, int r) {
  auto g = girth(h.model_graph(), r);
  return GirthBoundCheck{!g.has_value(), g};
}

bool for_each_connected_subset(const Graph& g, int size,
                               const std::function<bool(const std::vector<int>&)>& visit) {
  return for_each_connected_subset_of_size(g, size, [&](const std::vector<int>& subset) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    return visit(sorted);
  });
}

}  // namespace locc
