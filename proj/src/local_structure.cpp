#include "locc/local_structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "locc/verify.hpp"

namespace locc {

namespace {

std::vector<std::string> labels_of(const Graph& g, const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int v : ids) out.push_back(g.label(v));
  return out;
}

}  // namespace

std::vector<std::string> PreSeparation::x_labels(const Graph& g) const { return labels_of(g, X); }

std::vector<std::string> LocalSeparationCertificate::walk_labels(const Graph& g) const {
  return labels_of(g, witness_walk);
}

PreSeparation edge_pre_separation(const CliqueGraph& h, int edge_id) {
  if (edge_id < 0 || edge_id >= h.kg.edge_count() || !h.has_edge(edge_id))
    throw InvalidInput("edge id is not an edge of H");
  auto per_ball = check_per_ball_clique_trees(h);
  if (!per_ball.pass)
    throw PreconditionFailed("pre-separations need per-ball clique trees; failed at vertex '" +
                             per_ball.vertex + "' (" + per_ball.reason + ")");

  const Graph& g = h.kg.host();
  const KEdge& f = h.kg.edges()[edge_id];
  const auto& ka = h.kg.node(f.a).members;
  const auto& kb = h.kg.node(f.b).members;

  PreSeparation pre;
  pre.origin = std::make_pair(f.a, f.b);
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(pre.X));

  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : pre.X) in_x[v] = 1;

  for (int v : pre.X) {
    // Components of the co-part tree H[K_G(v)] - f, as a side index per node.
    const auto& nodes = h.kg.membership(v);
    std::unordered_map<int, int> side;
    side.reserve(nodes.size());
    std::deque<int> queue;
    side[f.a] = 0;
    side[f.b] = 1;
    queue.push_back(f.a);
    queue.push_back(f.b);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : h.kg.node_neighbors(u)) {
        if (!std::binary_search(nodes.begin(), nodes.end(), w) || side.count(w)) continue;
        int id = h.kg.edge_id(u, w);
        if (id < 0 || id == edge_id || !h.has_edge(id)) continue;
        side[w] = side[u];
        queue.push_back(w);
      }
    }

    for (int w : g.neighbors(v)) {
      if (in_x[w]) continue;
      // Some clique contains the edge vw; its component decides the side.
      int assigned = -1;
      for (int node : h.kg.membership(w)) {
        auto it = side.find(node);
        if (it != side.end()) {
          if (assigned >= 0 && assigned != it->second)
            throw PreconditionFailed("boundary edge reaches both sides of the split co-part");
          assigned = it->second;
        }
      }
      if (assigned < 0)
        throw PreconditionFailed("boundary edge reaches no side of the split co-part");
      (assigned == 0 ? pre.E0 : pre.E1).emplace_back(v, w);
    }
  }
  std::sort(pre.E0.begin(), pre.E0.end());
  std::sort(pre.E1.begin(), pre.E1.end());
  return pre;
}

namespace {

void validate_pre_separation(const Graph& g, const PreSeparation& p) {
  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : p.X) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidInput("separator vertex out of range");
    in_x[v] = 1;
  }
  std::map<std::pair<int, int>, int> sides;
  auto ingest = [&](const std::vector<std::pair<int, int>>& es, int side) {
    for (auto [x, w] : es) {
      if (x < 0 || x >= g.vertex_count() || w < 0 || w >= g.vertex_count() || !g.adjacent(x, w))
        throw InvalidInput("boundary entry is not an edge of the graph");
      if (!in_x[x] || in_x[w]) throw InvalidInput("boundary edge must have exactly one end in X");
      if (!sides.emplace(std::make_pair(x, w), side).second)
        throw InvalidInput("boundary edge classified twice");
    }
  };
  ingest(p.E0, 0);
  ingest(p.E1, 1);
  for (int x : p.X)
    for (int w : g.neighbors(x))
      if (!in_x[w] && !sides.count({x, w}))
        throw InvalidInput("boundary edge missing from both classes");
}

// All cycles of length <= max_len, as vertex sequences starting at their
// minimum vertex, second vertex smaller than the last (one orientation each).
template <typename F>
void for_each_cycle(const Graph& g, int max_len, F&& visit) {
  int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  auto dfs = [&](auto&& self, int s, int u) -> void {
    for (int w : g.neighbors(u)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) visit(path);
      if (w <= s || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, s, w);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
}

}  // namespace

LocalSeparationCertificate check_r_local_separation(const Graph& g, const PreSeparation& p, int r) {
  if (r < 1) throw InvalidInput("local separation radius must be at least 1");
  if (g.vertex_count() > kCycleEnumGuard)
    throw TooLarge("cycle enumeration limited to " + std::to_string(kCycleEnumGuard) + " vertices");
  validate_pre_separation(g, p);

  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : p.X) in_x[v] = 1;
  std::map<std::pair<int, int>, int> side;
  for (auto [x, w] : p.E0) side[{x, w}] = 0;
  for (auto [x, w] : p.E1) side[{x, w}] = 1;

  LocalSeparationCertificate cert;
  cert.r = r;
  cert.is_local_separation = true;
  bool parity_ok = true;

  for_each_cycle(g, r, [&](const std::vector<int>& cycle) {
    if (!cert.is_local_separation) return;
    int len = static_cast<int>(cycle.size());
    std::vector<int> x_positions;
    for (int i = 0; i < len; ++i)
      if (in_x[cycle[i]]) x_positions.push_back(i);
    if (x_positions.empty()) return;

    int crossings[2] = {0, 0};
    for (int i = 0; i < len; ++i) {
      int a = cycle[i], b = cycle[(i + 1) % len];
      if (in_x[a] != in_x[b]) {
        auto it = in_x[a] ? side.find({a, b}) : side.find({b, a});
        ++crossings[it->second];
      }
    }

    // X-walks on the cycle are the arcs between consecutive X-visits (the
    // whole loop when the cycle meets X once).
    int visits = static_cast<int>(x_positions.size());
    for (int t = 0; t < visits; ++t) {
      int i = x_positions[t];
      int j = x_positions[(t + 1) % visits];
      int arc_len = (j - i + len) % len;
      if (arc_len == 0) arc_len = len;  // single visit: once around
      if (arc_len == 1) continue;       // single edge with both ends in X
      int first_side = side.at({cycle[i], cycle[(i + 1) % len]});
      int last_side = side.at({cycle[j], cycle[(j - 1 + len) % len]});
      if (first_side != last_side) {
        cert.is_local_separation = false;
        cert.witness_walk.clear();
        for (int s = 0; s <= arc_len; ++s) cert.witness_walk.push_back(cycle[(i + s) % len]);
        return;
      }
    }
    if (crossings[0] % 2 != 0 || crossings[1] % 2 != 0) parity_ok = false;
  });

  if (cert.is_local_separation && !parity_ok)
    throw std::logic_error("local separation with odd boundary crossings on a short cycle");
  return cert;
}

namespace {

// Union of the induced co-parts model[W_u] over a vertex set, as node ids
// and edge pairs of the model.
struct CoPartUnion {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
};

CoPartUnion co_part_union(const GraphDecomposition& d,
                          const std::vector<std::vector<int>>& cobags, const std::vector<int>& vertices) {
  std::vector<char> node_in(d.model.vertex_count(), 0);
  std::map<std::pair<int, int>, char> edge_in;
  for (int u : vertices) {
    const auto& nodes = cobags[u];
    for (int h : nodes) node_in[h] = 1;
    for (int h : nodes)
      for (int h2 : d.model.neighbors(h))
        if (h < h2 && std::binary_search(nodes.begin(), nodes.end(), h2)) edge_in[{h, h2}] = 1;
  }
  CoPartUnion out;
  for (int h = 0; h < d.model.vertex_count(); ++h)
    if (node_in[h]) out.nodes.push_back(h);
  for (const auto& [e, _] : edge_in) out.edges.push_back(e);
  return out;
}

std::vector<std::vector<int>> cobags_of(const GraphDecomposition& d) {
  std::vector<std::vector<int>> cobags(d.target.vertex_count());
  for (int h = 0; h < d.model.vertex_count(); ++h)
    for (const auto& lab : d.bags[h]) cobags[d.target.require_vertex(lab)].push_back(h);
  for (auto& nodes : cobags) std::sort(nodes.begin(), nodes.end());
  return cobags;
}

bool subgraph_connected(const std::vector<int>& nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes.empty()) return false;
  std::unordered_map<int, int> pos;
  for (size_t i = 0; i < nodes.size(); ++i) pos.emplace(nodes[i], static_cast<int>(i));
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [a, b] : edges) {
    adj[pos.at(a)].push_back(pos.at(b));
    adj[pos.at(b)].push_back(pos.at(a));
  }
  std::vector<char> seen(nodes.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == nodes.size();
}

}  // namespace

LocallyInduced locally_induced(const GraphDecomposition& d, const std::string& v, int r) {
  if (r < 1) throw InvalidInput("locally induced decompositions need r >= 1");
  const Graph& g = d.target;
  int center = g.require_vertex(v);
  auto dist = distances_from(g, center);
  auto cobags = cobags_of(d);

  std::vector<int> near;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (dist[u] >= 0 && 2 * dist[u] < r) near.push_back(u);
  CoPartUnion model_union = co_part_union(d, cobags, near);

  Ball b = ball(g, v, r);
  LocallyInduced out;
  out.dec.target = b.subgraph;

  // Model on the selected nodes, relabeled through the original model labels.
  std::vector<std::string> model_labels;
  std::vector<std::pair<std::string, std::string>> model_edges;
  model_labels.reserve(model_union.nodes.size());
  for (int h : model_union.nodes) model_labels.push_back(d.model.label(h));
  for (auto [a, bnode] : model_union.edges)
    model_edges.emplace_back(d.model.label(a), d.model.label(bnode));
  out.dec.model = Graph::from_edge_list(model_edges, model_labels);

  out.dec.bags.assign(out.dec.model.vertex_count(), {});
  for (int h : model_union.nodes) {
    std::vector<std::string> bag;
    for (const auto& lab : d.bags[h])
      if (b.subgraph.has_vertex(lab)) bag.push_back(lab);
    out.dec.bags[out.dec.model.require_vertex(d.model.label(h))] = std::move(bag);
  }

  // Boundary co-parts H_u ∩ H^{v,r} can be disconnected for even r; flag them.
  auto induced_cobags = cobags_of(out.dec);
  for (int u = 0; u < out.dec.target.vertex_count(); ++u) {
    const auto& nodes = induced_cobags[u];
    std::vector<std::pair<int, int>> edges;
    for (int h : nodes)
      for (int h2 : out.dec.model.neighbors(h))
        if (h < h2 && std::binary_search(nodes.begin(), nodes.end(), h2)) edges.emplace_back(h, h2);
    if (!subgraph_connected(nodes, edges)) out.disconnected_co_parts.push_back(out.dec.target.label(u));
  }
  return out;
}

TreeDecomposition locally_derived(const GraphDecomposition& d, const std::string& v, int r) {
  if (r < 3) throw InvalidInput("locally derived decompositions need r >= 3");
  if (r % 2 == 1) {
    auto induced = locally_induced(d, v, r);
    if (!induced.disconnected_co_parts.empty())
      throw PreconditionFailed("locally induced decomposition has a disconnected co-part at '" +
                               induced.disconnected_co_parts.front() + "'");
    return induced.dec;
  }

  auto induced = locally_induced(d, v, r - 1);
  if (!induced.disconnected_co_parts.empty())
    throw PreconditionFailed("locally induced decomposition has a disconnected co-part at '" +
                             induced.disconnected_co_parts.front() + "'");

  const Graph& g = d.target;
  int center = g.require_vertex(v);
  auto dist = distances_from(g, center);

  Ball b = ball(g, v, r);
  TreeDecomposition out;
  out.target = b.subgraph;

  std::vector<std::pair<std::string, std::string>> model_edges;
  std::vector<std::string> model_labels = induced.dec.model.labels();
  for (auto [a, bnode] : induced.dec.model.edge_pairs())
    model_edges.emplace_back(induced.dec.model.label(a), induced.dec.model.label(bnode));

  struct Leaf {
    std::string label;
    std::vector<std::string> bag;
  };
  std::vector<Leaf> leaves;

  for (int u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] < 0 || 2 * dist[u] != r) continue;
    std::vector<int> nbhd_ids;
    for (int w : g.neighbors(u))
      if (dist[w] >= 0 && 2 * dist[w] == r - 2) nbhd_ids.push_back(w);
    std::vector<std::string> nbhd;
    nbhd.reserve(nbhd_ids.size());
    for (int w : nbhd_ids) nbhd.push_back(g.label(w));

    // Least model node whose bag contains the whole neighborhood.
    int attach = -1;
    for (int hnode = 0; hnode < induced.dec.model.vertex_count() && attach < 0; ++hnode) {
      const auto& bag = induced.dec.bags[hnode];
      bool contains = true;
      for (const auto& lab : nbhd)
        if (std::find(bag.begin(), bag.end(), lab) == bag.end()) {
          contains = false;
          break;
        }
      if (contains) attach = hnode;
    }
    if (attach < 0)
      throw PreconditionFailed("no bag contains the ball neighborhood of boundary vertex '" +
                               g.label(u) + "'");

    std::string leaf_label = "@" + g.label(u);
    while (std::find(model_labels.begin(), model_labels.end(), leaf_label) != model_labels.end())
      leaf_label = "@" + leaf_label;
    model_labels.push_back(leaf_label);
    model_edges.emplace_back(leaf_label, induced.dec.model.label(attach));

    Leaf leaf;
    leaf.label = leaf_label;
    std::vector<int> bag_ids = nbhd_ids;
    bag_ids.push_back(u);
    std::sort(bag_ids.begin(), bag_ids.end());
    for (int w : bag_ids) leaf.bag.push_back(g.label(w));
    leaves.push_back(std::move(leaf));
  }

  out.model = Graph::from_edge_list(model_edges, model_labels);
  out.bags.assign(out.model.vertex_count(), {});
  for (int h = 0; h < induced.dec.model.vertex_count(); ++h)
    out.bags[out.model.require_vertex(induced.dec.model.label(h))] = induced.dec.bags[h];
  for (const auto& leaf : leaves) out.bags[out.model.require_vertex(leaf.label)] = leaf.bag;
  return out;
}

}  // namespace locc
