#include "locc/decompose.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "locc/disjoint_sets.hpp"

namespace locc {

bool CliqueGraph::has_edge(int edge_id) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), edge_id);
}

long long CliqueGraph::total_weight() const {
  long long w = 0;
  for (int id : edge_ids) w += kg.edges()[id].weight;
  return w;
}

std::vector<int> CliqueGraph::co_part_edges(int host_vertex) const {
  const auto& nodes = kg.membership(host_vertex);
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      int id = kg.edge_id(nodes[i], nodes[j]);
      if (id >= 0 && has_edge(id)) out.push_back(id);
    }
  }
  return out;
}

Graph CliqueGraph::model_graph() const {
  std::vector<std::string> isolated;
  isolated.reserve(kg.node_count());
  for (const auto& node : kg.nodes()) isolated.push_back(node.key);
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(edge_ids.size());
  for (int id : edge_ids) {
    const KEdge& e = kg.edges()[id];
    pairs.emplace_back(kg.node(e.a).key, kg.node(e.b).key);
  }
  return Graph::from_edge_list(pairs, isolated);
}

namespace {

// Kruskal over an ascending list of global edge ids; node ids are compacted
// through the sorted subset.
void kruskal_run(const CliqueIntersectionGraph& kg, const std::vector<int>& subset,
                 const std::vector<int>& candidate_ids, std::vector<int>& accepted) {
  DisjointSets dsu(static_cast<int>(subset.size()));
  auto local = [&subset](int node) {
    return static_cast<int>(std::lower_bound(subset.begin(), subset.end(), node) - subset.begin());
  };
  for (int id : candidate_ids) {
    const KEdge& e = kg.edges()[id];
    if (dsu.unite(local(e.a), local(e.b))) accepted.push_back(id);
  }
}

std::vector<int> candidate_edges(const CliqueIntersectionGraph& kg, const std::vector<int>& subset) {
  std::vector<int> ids;
  ids.reserve(subset.size() * (subset.size() - 1) / 2);
  for (size_t i = 0; i < subset.size(); ++i) {
    for (size_t j = i + 1; j < subset.size(); ++j) {
      int id = kg.edge_id(subset[i], subset[j]);
      if (id >= 0) ids.push_back(id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

CliqueGraph run_decomposition(const Graph& g, DecomposeMode mode, int task_count,
                              DecomposeStats* stats, bool guaranteed) {
  auto wall_start = std::chrono::steady_clock::now();
  CliqueGraph h;
  h.kg = clique_intersection_graph(g);
  h.guaranteed = guaranteed;

  int n = g.vertex_count();
  int threads = 1;
  if (mode == DecomposeMode::parallel) {
    threads = task_count > 0 ? task_count : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, std::max(1, n));
  }

  std::vector<std::vector<char>> selected(threads, std::vector<char>(h.kg.edge_count(), 0));
  std::vector<double> task_max_ms(threads, 0.0);

  // Contiguous vertex ranges in label order; every task consumes the same
  // immutable kg and global order and keeps its own selection bitmap, so the
  // merged result is range-independent.
  auto worker = [&](int t, int lo, int hi) {
    std::vector<int> accepted;
    for (int v = lo; v < hi; ++v) {
      auto t0 = std::chrono::steady_clock::now();
      const auto& subset = h.kg.membership(v);
      accepted.clear();
      kruskal_run(h.kg, subset, candidate_edges(h.kg, subset), accepted);
      for (int id : accepted) selected[t][id] = 1;
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      task_max_ms[t] = std::max(task_max_ms[t], ms);
    }
  };

  if (threads == 1) {
    worker(0, 0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      int lo = std::min(n, t * chunk);
      int hi = std::min(n, lo + chunk);
      pool.emplace_back(worker, t, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (int id = 0; id < h.kg.edge_count(); ++id) {
    for (int t = 0; t < threads; ++t) {
      if (selected[t][id]) {
        h.edge_ids.push_back(id);
        break;
      }
    }
  }

  if (stats) {
    stats->wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               wall_start)
                         .count();
    stats->per_vertex_max_ms = *std::max_element(task_max_ms.begin(), task_max_ms.end());
    stats->threads_used = threads;
  }
  return h;
}

}  // namespace

CliqueGraph decompose(const Graph& g, DecomposeMode mode, int task_count, DecomposeStats* stats) {
  auto wf = is_wheel_free(g);
  if (!wf.wheel_free) throw NotLocallyChordal(*wf.wheel);
  return run_decomposition(g, mode, task_count, stats, true);
}

CliqueGraph decompose_unchecked(const Graph& g, DecomposeMode mode, int task_count,
                                DecomposeStats* stats) {
  auto wf = is_wheel_free(g);
  return run_decomposition(g, mode, task_count, stats, wf.wheel_free);
}

std::vector<int> kruskal_max_weight(const CliqueIntersectionGraph& kg,
                                    const std::vector<int>& node_subset) {
  std::vector<int> subset = node_subset;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<int> accepted;
  kruskal_run(kg, subset, candidate_edges(kg, subset), accepted);
  return accepted;
}

std::vector<int> GraphDecomposition::co_bag(const std::string& vertex_label) const {
  std::vector<int> out;
  for (int h = 0; h < model.vertex_count(); ++h) {
    const auto& bag = bags[h];
    if (std::find(bag.begin(), bag.end(), vertex_label) != bag.end()) out.push_back(h);
  }
  return out;
}

GraphDecomposition as_graph_decomposition(const CliqueGraph& h) {
  GraphDecomposition d;
  d.target = h.kg.host();
  d.model = h.model_graph();
  d.bags.assign(d.model.vertex_count(), {});
  for (const auto& node : h.kg.nodes()) {
    int idx = d.model.require_vertex(node.key);
    std::vector<std::string> members;
    members.reserve(node.members.size());
    for (int v : node.members) members.push_back(h.kg.host().label(v));
    d.bags[idx] = std::move(members);
  }
  return d;
}

int width(const GraphDecomposition& d) {
  size_t w = 0;
  for (const auto& bag : d.bags) w = std::max(w, bag.size());
  return static_cast<int>(w);
}

}  // namespace locc
