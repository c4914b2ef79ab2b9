#include "locc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "locc/disjoint_sets.hpp"

namespace locc {

bool numeric_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool label_less(const std::string& a, const std::string& b, bool numeric_mode) {
  if (numeric_mode) {
    size_t ia = a.find_first_not_of('0');
    size_t ib = b.find_first_not_of('0');
    std::string_view va = ia == std::string::npos ? std::string_view("0") : std::string_view(a).substr(ia);
    std::string_view vb = ib == std::string::npos ? std::string_view("0") : std::string_view(b).substr(ib);
    if (va.size() != vb.size()) return va.size() < vb.size();
    if (va != vb) return va < vb;
    return a < b;  // equal value, e.g. "7" vs "007"
  }
  return a < b;
}

Graph Graph::build(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& index_edges,
                   bool numeric_order) {
  Graph g;
  g.numeric_order_ = numeric_order;
  g.labels_ = std::move(labels);
  g.adj_.assign(g.labels_.size(), {});
  g.index_.reserve(g.labels_.size());
  for (int i = 0; i < static_cast<int>(g.labels_.size()); ++i) g.index_.emplace(g.labels_[i], i);
  for (auto [u, v] : index_edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += static_cast<long long>(nbrs.size());
  }
  g.edge_count_ /= 2;
  return g;
}

Graph Graph::from_edge_list(const std::vector<std::pair<std::string, std::string>>& pairs,
                            const std::vector<std::string>& isolated) {
  std::vector<std::string> labels;
  for (const auto& [a, b] : pairs) {
    if (a == b) throw InvalidInput("self-loop on vertex '" + a + "'");
    labels.push_back(a);
    labels.push_back(b);
  }
  labels.insert(labels.end(), isolated.begin(), isolated.end());

  bool numeric = !labels.empty();
  for (const auto& lab : labels)
    if (!numeric_label(lab)) numeric = false;

  std::sort(labels.begin(), labels.end(),
            [numeric](const std::string& a, const std::string& b) { return label_less(a, b, numeric); });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::unordered_map<std::string, int> idx;
  idx.reserve(labels.size());
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx.emplace(labels[i], i);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.emplace_back(idx[a], idx[b]);
  return build(std::move(labels), edges, numeric);
}

int Graph::index_of(const std::string& lab) const {
  auto it = index_.find(lab);
  return it == index_.end() ? -1 : it->second;
}

int Graph::require_vertex(const std::string& lab) const {
  int v = index_of(lab);
  if (v < 0) throw InvalidInput("unknown vertex '" + lab + "'");
  return v;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::subgraph(const std::vector<int>& vertices,
                      const std::vector<std::pair<int, int>>& edges) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  std::unordered_map<int, int> remap;
  remap.reserve(sorted.size());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    labels.push_back(labels_[sorted[i]]);
    remap.emplace(sorted[i], i);
  }
  std::vector<std::pair<int, int>> remapped;
  remapped.reserve(edges.size());
  for (auto [u, v] : edges) {
    auto iu = remap.find(u), iv = remap.find(v);
    if (iu == remap.end() || iv == remap.end()) throw InvalidInput("subgraph edge outside vertex subset");
    remapped.emplace_back(iu->second, iv->second);
  }
  return build(std::move(labels), remapped, numeric_order_);
}

bool Graph::operator==(const Graph& other) const {
  return labels_ == other.labels_ && adj_ == other.adj_;
}

std::vector<int> distances_from(const Graph& g, int v) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue;
  dist[v] = 0;
  queue.push_back(v);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> distances_from(const Graph& g, const std::string& v) {
  return distances_from(g, g.require_vertex(v));
}

Ball ball(const Graph& g, const std::string& v, int r) {
  if (r < 0) throw InvalidInput("ball radius numerator must be nonnegative");
  int center = g.require_vertex(v);
  std::vector<int> dist = distances_from(g, center);
  std::vector<int> vertices;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (dist[u] >= 0 && 2 * dist[u] <= r) vertices.push_back(u);
  // Adjacent vertices differ in distance by at most one, so both ends of a
  // kept edge are ball vertices automatically.
  std::vector<std::pair<int, int>> edges;
  for (int x : vertices)
    for (int y : g.neighbors(x))
      if (x < y && dist[y] >= 0 && dist[x] + dist[y] < r) edges.emplace_back(x, y);
  return Ball{v, r, g.subgraph(vertices, edges)};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex index out of range");
    in[v] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : vertices)
    for (int w : g.neighbors(u))
      if (u < w && in[w]) edges.emplace_back(u, w);
  return g.subgraph(vertices, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& vertex_labels) {
  std::vector<int> vertices;
  vertices.reserve(vertex_labels.size());
  for (const auto& lab : vertex_labels) vertices.push_back(g.require_vertex(lab));
  return induced_subgraph(g, vertices);
}

bool is_acyclic(const Graph& g) {
  DisjointSets dsu(g.vertex_count());
  for (auto [u, v] : g.edge_pairs())
    if (!dsu.unite(u, v)) return false;
  return true;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

struct CycleCandidate {
  int length = 0;
  int source = -1;
  int u = -1, w = -1;  // the non-tree edge closing the cycle
};

// One truncated BFS from s. Candidates d(u)+d(w)+1 over scanned non-tree
// edges; with the parent skip every candidate bounds a genuine cycle from
// above, and the minimum over all sources is exactly the girth.
void scan_from(const Graph& g, int s, int depth_limit, CycleCandidate& best, std::vector<int>& dist,
               std::vector<int>& parent, std::vector<int>& stamp, int round) {
  std::deque<int> queue{s};
  dist[s] = 0;
  parent[s] = -1;
  stamp[s] = round;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (stamp[w] != round) {
        if (dist[u] >= depth_limit) continue;
        stamp[w] = round;
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u] && dist[w] >= dist[u]) {
        int len = dist[u] + dist[w] + 1;
        if (best.length == 0 || len < best.length) best = CycleCandidate{len, s, u, w};
      }
    }
  }
}

std::vector<int> extract_cycle(const Graph& g, const CycleCandidate& c) {
  std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
  std::deque<int> queue{c.source};
  dist[c.source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> up;  // u .. source
  for (int x = c.u; x >= 0; x = parent[x]) up.push_back(x);
  std::vector<int> down;  // w .. source
  for (int x = c.w; x >= 0; x = parent[x]) down.push_back(x);
  std::reverse(up.begin(), up.end());  // source .. u
  std::vector<int> cycle = up;
  cycle.insert(cycle.end(), down.begin(), down.end() - 1);  // w .. (excluding source)
  return cycle;
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle(const Graph& g, std::optional<int> max_len) {
  CycleCandidate best;
  std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1), stamp(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    int cap = best.length > 0 ? best.length - 1 : (max_len ? *max_len : g.vertex_count());
    if (max_len && *max_len < cap) cap = *max_len;
    if (cap < 3) break;
    scan_from(g, s, cap / 2 + 1, best, dist, parent, stamp, s);
  }
  if (best.length == 0) return std::nullopt;
  if (max_len && best.length > *max_len) return std::nullopt;
  std::vector<int> cycle = extract_cycle(g, best);
  // At the global minimum the two BFS branches are disjoint, so the
  // extracted walk is a simple cycle of exactly the candidate length.
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (static_cast<int>(cycle.size()) != best.length || distinct.size() != cycle.size())
    throw std::logic_error("shortest_cycle extraction produced a non-simple walk");
  return cycle;
}

std::optional<int> girth(const Graph& g, std::optional<int> max_len) {
  auto cycle = shortest_cycle(g, max_len);
  if (!cycle) return std::nullopt;
  return static_cast<int>(cycle->size());
}

int eccentricity(const Graph& g, int v) {
  auto dist = distances_from(g, v);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  return ecc;
}

namespace {

// 1-WL color refinement; returns per-vertex colors normalized to dense ints.
std::vector<int> wl_colors(const Graph& g) {
  std::vector<int> color(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) color[v] = g.degree(v);
  for (int round = 0; round < g.vertex_count(); ++round) {
    std::map<std::pair<int, std::vector<int>>, int> next_id;
    std::vector<int> next(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> nbr_colors;
      nbr_colors.reserve(g.degree(v));
      for (int w : g.neighbors(v)) nbr_colors.push_back(color[w]);
      std::sort(nbr_colors.begin(), nbr_colors.end());
      auto key = std::make_pair(color[v], std::move(nbr_colors));
      auto [it, _] = next_id.emplace(std::move(key), static_cast<int>(next_id.size()));
      next[v] = it->second;
    }
    bool stable = next == color;
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

bool extend_mapping(const Graph& g1, const Graph& g2, const std::vector<int>& order, size_t pos,
                    const std::vector<int>& color1, const std::vector<int>& color2,
                    std::vector<int>& map12, std::vector<char>& used2) {
  if (pos == order.size()) return true;
  int v = order[pos];
  for (int cand = 0; cand < g2.vertex_count(); ++cand) {
    if (used2[cand] || color2[cand] != color1[v]) continue;
    bool ok = true;
    for (size_t i = 0; i < pos && ok; ++i) {
      int u = order[i];
      if (g1.adjacent(v, u) != g2.adjacent(cand, map12[u])) ok = false;
    }
    if (!ok) continue;
    map12[v] = cand;
    used2[cand] = 1;
    if (extend_mapping(g1, g2, order, pos + 1, color1, color2, map12, used2)) return true;
    used2[cand] = 0;
    map12[v] = -1;
  }
  return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& g1, const Graph& g2, int max_vertices) {
  if (g1.vertex_count() > max_vertices || g2.vertex_count() > max_vertices)
    throw TooLarge("isomorphism check limited to " + std::to_string(max_vertices) + " vertices");
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;

  std::vector<int> color1 = wl_colors(g1);
  std::vector<int> color2 = wl_colors(g2);
  std::vector<int> hist1 = color1, hist2 = color2;
  std::sort(hist1.begin(), hist1.end());
  std::sort(hist2.begin(), hist2.end());
  if (hist1 != hist2) return false;

  // Map vertices in an order that keeps the partial mapping connected where
  // possible, rarest color class first.
  std::vector<int> class_size(g1.vertex_count() + 1, 0);
  for (int c : color1) ++class_size[c];
  std::vector<int> order;
  std::vector<char> placed(g1.vertex_count(), 0);
  while (static_cast<int>(order.size()) < g1.vertex_count()) {
    int pick = -1;
    int best_attached = -1, best_class = 1 << 30;
    for (int v = 0; v < g1.vertex_count(); ++v) {
      if (placed[v]) continue;
      int attached = 0;
      for (int w : g1.neighbors(v)) attached += placed[w];
      if (attached > best_attached ||
          (attached == best_attached && class_size[color1[v]] < best_class)) {
        pick = v;
        best_attached = attached;
        best_class = class_size[color1[v]];
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<int> map12(g1.vertex_count(), -1);
  std::vector<char> used2(g2.vertex_count(), 0);
  return extend_mapping(g1, g2, order, 0, color1, color2, map12, used2);
}

}  // namespace locc
