#include "locc/cliques.hpp"

#include <algorithm>
#include <cassert>

namespace locc {

namespace {

// P and X are ascending; R is the current clique.
void bron_kerbosch(const Graph& g, std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  // Pivot: vertex of P ∪ X with the most neighbors in P.
  int pivot = -1, pivot_score = -1;
  for (const auto* side : {&P, &X}) {
    for (int u : *side) {
      int score = 0;
      for (int w : g.neighbors(u))
        score += std::binary_search(P.begin(), P.end(), w);
      if (score > pivot_score) {
        pivot = u;
        pivot_score = score;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : P)
    if (pivot < 0 || !g.adjacent(pivot, v)) candidates.push_back(v);

  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (g.adjacent(v, w)) P2.push_back(w);
    for (int w : X)
      if (g.adjacent(v, w)) X2.push_back(w);
    R.push_back(v);
    bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.insert(std::lower_bound(X.begin(), X.end(), v), v);
  }
}

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::string clique_key(const Graph& g, const std::vector<int>& members) {
  std::string key;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) key += ',';
    key += g.label(members[i]);
  }
  return key;
}

}  // namespace

std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  std::vector<int> R, P(g.vertex_count()), X;
  for (int i = 0; i < g.vertex_count(); ++i) P[i] = i;
  std::vector<std::vector<int>> out;
  bron_kerbosch(g, R, std::move(P), std::move(X), out);
  for (auto& clique : out) std::sort(clique.begin(), clique.end());
  std::sort(out.begin(), out.end());
  return out;
}

CliqueIntersectionGraph CliqueIntersectionGraph::build(const Graph& host) {
  CliqueIntersectionGraph kg;
  kg.host_ = host;
  auto cliques = enumerate_maximal_cliques(host);
  kg.nodes_.reserve(cliques.size());
  for (auto& members : cliques) {
    MaximalClique node;
    node.key = clique_key(host, members);
    node.members = std::move(members);
    kg.nodes_.push_back(std::move(node));
  }

  kg.membership_.assign(host.vertex_count(), {});
  for (int id = 0; id < kg.node_count(); ++id)
    for (int v : kg.nodes_[id].members) kg.membership_[v].push_back(id);

  // Weight of {K1,K2} = number of shared vertices, accumulated per vertex.
  std::unordered_map<std::uint64_t, int> weights;
  for (int v = 0; v < host.vertex_count(); ++v) {
    const auto& ids = kg.membership_[v];
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j) ++weights[pair_key(ids[i], ids[j])];
  }
  kg.edges_.reserve(weights.size());
  for (const auto& [pk, w] : weights)
    kg.edges_.push_back(KEdge{static_cast<int>(pk >> 32), static_cast<int>(pk & 0xffffffffu), w});

  // Sort with per-edge cached union keys; allocating inside the comparator
  // dominates the build on large inputs.
  std::vector<std::vector<int>> unions(kg.edges_.size());
  for (size_t i = 0; i < kg.edges_.size(); ++i) {
    const auto& a = kg.nodes_[kg.edges_[i].a].members;
    const auto& b = kg.nodes_[kg.edges_[i].b].members;
    unions[i].reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(unions[i]));
  }
  std::vector<int> order(kg.edges_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&kg, &unions](int x, int y) {
    const KEdge& ex = kg.edges_[x];
    const KEdge& ey = kg.edges_[y];
    if (ex.weight != ey.weight) return ex.weight > ey.weight;
    if (unions[x] != unions[y]) return unions[x] < unions[y];
    if (kg.nodes_[ex.a].members != kg.nodes_[ey.a].members)
      return kg.nodes_[ex.a].members < kg.nodes_[ey.a].members;
    return kg.nodes_[ex.b].members < kg.nodes_[ey.b].members;
  });
  std::vector<KEdge> sorted_edges;
  sorted_edges.reserve(kg.edges_.size());
  for (int i : order) sorted_edges.push_back(kg.edges_[i]);
  kg.edges_ = std::move(sorted_edges);

  kg.edge_index_.reserve(kg.edges_.size());
  kg.node_adj_.assign(kg.node_count(), {});
  for (int id = 0; id < kg.edge_count(); ++id) {
    const KEdge& e = kg.edges_[id];
    kg.edge_index_.emplace(pair_key(e.a, e.b), id);
    kg.node_adj_[e.a].push_back(e.b);
    kg.node_adj_[e.b].push_back(e.a);
  }
  for (auto& nbrs : kg.node_adj_) std::sort(nbrs.begin(), nbrs.end());
  return kg;
}

int CliqueIntersectionGraph::edge_id(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = edge_index_.find(pair_key(a, b));
  return it == edge_index_.end() ? -1 : it->second;
}

CliqueIntersectionGraph clique_intersection_graph(const Graph& g) {
  return CliqueIntersectionGraph::build(g);
}

long long weight_target(const CliqueIntersectionGraph& kg) {
  long long total = 0;
  for (const auto& node : kg.nodes()) total += static_cast<long long>(node.members.size());
  return total - kg.host().vertex_count();
}

long long weight_target(const Graph& g) {
  long long total = 0;
  for (const auto& clique : enumerate_maximal_cliques(g)) total += static_cast<long long>(clique.size());
  return total - g.vertex_count();
}

bool global_edge_less(const CliqueIntersectionGraph& kg, const KEdge& x, const KEdge& y) {
  if (x.weight != y.weight) return x.weight > y.weight;
  const auto& xa = kg.node(x.a).members;
  const auto& xb = kg.node(x.b).members;
  const auto& ya = kg.node(y.a).members;
  const auto& yb = kg.node(y.b).members;
  std::vector<int> ux, uy;
  ux.reserve(xa.size() + xb.size());
  uy.reserve(ya.size() + yb.size());
  std::set_union(xa.begin(), xa.end(), xb.begin(), xb.end(), std::back_inserter(ux));
  std::set_union(ya.begin(), ya.end(), yb.begin(), yb.end(), std::back_inserter(uy));
  if (ux != uy) return ux < uy;
  if (xa != ya) return xa < ya;
  return xb < yb;
}

std::vector<KEdge> global_edge_order(const CliqueIntersectionGraph& kg) { return kg.edges(); }

}  // namespace locc
