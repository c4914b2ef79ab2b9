#include "locc/recognition.hpp"

#include <algorithm>
#include <deque>

namespace locc {

namespace {

std::vector<std::string> to_labels(const Graph& g, const std::vector<int>& vertices) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (int v : vertices) out.push_back(g.label(v));
  return out;
}

// Maximum-cardinality search; returns the visit sequence (reverse of an
// elimination order when g is chordal).
std::vector<int> mcs_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    visited[pick] = 1;
    order.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!visited[w]) ++weight[w];
  }
  return order;
}

// BFS path from source to target inside the vertex set where allowed[] is
// set; empty when disconnected. Shortest, hence chordless within the mask.
std::vector<int> masked_path(const Graph& g, int source, int target, const std::vector<char>& allowed) {
  std::vector<int> parent(g.vertex_count(), -2);
  std::deque<int> queue{source};
  parent[source] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == target) break;
    for (int w : g.neighbors(u)) {
      if (!allowed[w] || parent[w] != -2) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[target] == -2) return {};
  std::vector<int> path;
  for (int x = target; x >= 0; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// Hole through v given two nonadjacent neighbors x, y: v plus a shortest
// x-y path avoiding the rest of N[v]. Empty when x, y are disconnected
// outside N[v].
std::vector<int> hole_via_triple(const Graph& g, int v, int x, int y) {
  std::vector<char> allowed(g.vertex_count(), 1);
  allowed[v] = 0;
  for (int w : g.neighbors(v)) allowed[w] = 0;
  allowed[x] = allowed[y] = 1;
  auto path = masked_path(g, x, y, allowed);
  if (path.empty()) return {};
  std::vector<int> hole{v};
  hole.insert(hole.end(), path.begin(), path.end());
  return hole;
}

// Any hole of a graph known to be non-chordal: a shortest cycle when the
// graph is triangle-free there, otherwise a scan over neighborhood triples.
std::vector<int> find_any_hole(const Graph& g) {
  auto cycle = shortest_cycle(g);
  if (cycle && cycle->size() >= 4) return *cycle;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        auto hole = hole_via_triple(g, v, nbrs[i], nbrs[j]);
        if (!hole.empty()) return hole;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> visit = mcs_order(g);
  std::vector<int> pos(n);  // elimination position: last visited is eliminated first
  for (int i = 0; i < n; ++i) pos[visit[i]] = n - 1 - i;

  // Elimination check: the later neighbors of each vertex minus the
  // earliest of them must lie in that earliest neighbor's neighborhood.
  std::vector<char> mark(n, 0);
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    if (parent < 0) continue;
    for (int w : g.neighbors(parent)) mark[w] = 1;
    int bad = -1;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v] && w != parent && !mark[w]) bad = w;
    for (int w : g.neighbors(parent)) mark[w] = 0;
    if (bad < 0) continue;

    ChordalityResult res;
    res.chordal = false;
    auto hole = hole_via_triple(g, v, parent, bad);
    if (hole.empty()) hole = find_any_hole(g);
    if (hole.empty()) throw std::logic_error("failed elimination check without a hole");
    res.hole = to_labels(g, hole);
    return res;
  }

  ChordalityResult res;
  res.chordal = true;
  std::vector<int> elim(visit.rbegin(), visit.rend());
  res.elimination_order = to_labels(g, elim);
  return res;
}

WheelFreeResult is_wheel_free(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nbhd = is_chordal(induced_subgraph(g, g.neighbors(v)));
    if (!nbhd.chordal) {
      WheelFreeResult res;
      res.wheel_free = false;
      res.wheel = WheelWitness{g.label(v), *nbhd.hole};
      return res;
    }
  }
  return WheelFreeResult{true, std::nullopt};
}

LocalChordalityResult is_r_locally_chordal(const Graph& g, int r) {
  if (r < 3) throw InvalidInput("local chordality needs r >= 3");
  for (int v = 0; v < g.vertex_count(); ++v) {
    Ball b = ball(g, g.label(v), r);
    auto res = is_chordal(b.subgraph);
    if (!res.chordal) return LocalChordalityResult{false, BallWitness{g.label(v), *res.hole}};
  }
  return LocalChordalityResult{true, std::nullopt};
}

std::optional<Hole> shortest_hole(const Graph& g, std::optional<int> max_len) {
  auto cycle = shortest_cycle(g, max_len);
  if (cycle && cycle->size() >= 4) return to_labels(g, *cycle);
  if (!cycle) return std::nullopt;  // acyclic within the bound

  // Girth 3: scan triples (v; x, y) with x, y nonadjacent neighbors of v
  // above v, shrinking the search bound as holes are found. For the minimal
  // vertex of a shortest hole this is exact.
  int bound = max_len ? *max_len : g.vertex_count();
  std::vector<int> best;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    std::vector<char> allowed(g.vertex_count(), 1);
    allowed[v] = 0;
    for (int w : nbrs) allowed[w] = 0;
    for (size_t i = 0; i < nbrs.size(); ++i) {
      int x = nbrs[i];
      if (x < v) continue;
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int y = nbrs[j];
        if (y < v || g.adjacent(x, y)) continue;
        allowed[x] = allowed[y] = 1;
        auto path = masked_path(g, x, y, allowed);
        allowed[x] = allowed[y] = 0;
        if (path.empty()) continue;
        int len = static_cast<int>(path.size()) + 1;
        if (len <= bound && (best.empty() || len < static_cast<int>(best.size()))) {
          best = {v};
          best.insert(best.end(), path.begin(), path.end());
          bound = len - 1;
        }
      }
    }
  }
  if (best.empty()) return std::nullopt;
  return to_labels(g, best);
}

LocalityReport locality(const Graph& g) {
  LocalityReport report;
  auto chordality = is_chordal(g);
  if (chordality.chordal) {
    report.status = LocalityStatus::chordal;
    return report;
  }
  auto wf = is_wheel_free(g);
  if (!wf.wheel_free) {
    report.status = LocalityStatus::not_locally_chordal;
    report.wheel = wf.wheel;
    return report;
  }
  auto hole = shortest_hole(g);
  if (!hole) throw std::logic_error("non-chordal wheel-free graph must contain a hole");
  report.status = LocalityStatus::locally_chordal;
  report.r_star = static_cast<int>(hole->size()) - 1;
  report.hole = hole;
  return report;
}

}  // namespace locc
