#include "locc/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace locc {

namespace {

std::string dec(int i) { return std::to_string(i); }

std::vector<std::string> dec_labels(int n, int from = 0) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = from; i < from + n; ++i) out.push_back(dec(i));
  return out;
}

}  // namespace

Graph subtree_intersection_graph(const Graph& tree, const std::vector<std::vector<int>>& subtrees) {
  int n = static_cast<int>(subtrees.size());
  std::vector<std::vector<int>> sorted(subtrees);
  for (auto& s : sorted) {
    if (s.empty()) throw InvalidInput("subtree must be nonempty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int node : s)
      if (node < 0 || node >= tree.vertex_count()) throw InvalidInput("subtree node out of range");
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> common;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(), sorted[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) edges.emplace_back(dec(i), dec(j));
    }
  return Graph::from_edge_list(edges, dec_labels(n));
}

Graph gen_chordal(int n, int density, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("gen_chordal needs n >= 1");
  if (density < 0) throw InvalidInput("gen_chordal needs density >= 0");
  SplitMix64 rng(seed);

  // Random tree on n nodes: node i attaches to a uniform earlier node.
  std::vector<std::vector<int>> tree_adj(n);
  std::vector<std::pair<std::string, std::string>> tree_edges;
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng.below(i));
    tree_adj[i].push_back(parent);
    tree_adj[parent].push_back(i);
    tree_edges.emplace_back(dec(parent), dec(i));
  }
  Graph tree = Graph::from_edge_list(tree_edges, dec_labels(n));

  std::vector<std::vector<int>> subtrees(n);
  for (int i = 0; i < n; ++i) {
    std::set<int> nodes{static_cast<int>(rng.below(n))};
    int steps = static_cast<int>(rng.below(static_cast<std::uint64_t>(density) + 1));
    for (int s = 0; s < steps; ++s) {
      std::vector<int> frontier;
      for (int u : nodes)
        for (int w : tree_adj[u])
          if (!nodes.count(w)) frontier.push_back(w);
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      if (frontier.empty()) break;
      nodes.insert(frontier[rng.below(frontier.size())]);
    }
    subtrees[i].assign(nodes.begin(), nodes.end());
  }
  return subtree_intersection_graph(tree, subtrees);
}

GluedGraph gen_clique_glued(const Graph& model, int private_size, std::uint64_t seed) {
  (void)seed;  // construction is fully determined by the model
  if (private_size < 0) throw InvalidInput("private_size must be nonnegative");
  auto model_girth = girth(model);
  if (model_girth && *model_girth < 4)
    throw InvalidInput("glued model must have girth >= 4 or be a forest");
  if (private_size == 0) {
    for (int i = 0; i < model.vertex_count(); ++i)
      if (model.degree(i) <= 1)
        throw InvalidInput("private_size 0 needs every model node to have degree >= 2");
  }

  // Vertex names: privates "<node>#j", shared "<a>~<b>" per model edge a-b.
  std::vector<std::vector<std::string>> clique_members(model.vertex_count());
  for (int i = 0; i < model.vertex_count(); ++i)
    for (int j = 0; j < private_size; ++j)
      clique_members[i].push_back(model.label(i) + "#" + dec(j));
  for (auto [a, b] : model.edge_pairs()) {
    std::string shared = model.label(a) + "~" + model.label(b);
    clique_members[a].push_back(shared);
    clique_members[b].push_back(shared);
  }

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (const auto& members : clique_members) {
    if (members.size() == 1) isolated.push_back(members[0]);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }

  GluedGraph out;
  out.graph = Graph::from_edge_list(edges, isolated);
  long long expected =
      static_cast<long long>(model.vertex_count()) * private_size + model.edge_count();
  if (out.graph.vertex_count() != expected)
    throw InvalidInput("model labels collide under the glued naming scheme");
  out.model = model;
  out.clique_count = model.vertex_count();
  if (model_girth) out.r_star = *model_girth - 1;
  return out;
}

Graph gen_high_girth(int n, int girth_min, int max_degree, std::uint64_t seed,
                     long long attempt_budget) {
  if (n < 1) throw InvalidInput("gen_high_girth needs n >= 1");
  if (girth_min < 3) throw InvalidInput("gen_high_girth needs girth_min >= 3");
  if (max_degree < 1 && n > 1) throw GenerationFailed("degree cap too small for a connected graph");
  if (attempt_budget <= 0) attempt_budget = 20LL * n;
  SplitMix64 rng(seed);

  std::vector<std::vector<int>> adj(n);
  auto degree_ok = [&](int v) { return static_cast<int>(adj[v].size()) < max_degree; };

  // Degree-capped random tree.
  for (int i = 1; i < n; ++i) {
    std::vector<int> candidates;
    for (int p = 0; p < i; ++p)
      if (degree_ok(p)) candidates.push_back(p);
    if (candidates.empty()) throw GenerationFailed("degree cap exhausted while growing the tree");
    int parent = candidates[rng.below(candidates.size())];
    adj[i].push_back(parent);
    adj[parent].push_back(i);
  }

  // dist(u, v) >= girth_min - 1 keeps every new cycle at length >= girth_min.
  std::vector<int> dist(n, -1), touched;
  auto far_enough = [&](int u, int v) {
    int limit = girth_min - 2;
    touched.clear();
    std::deque<int> queue{u};
    dist[u] = 0;
    touched.push_back(u);
    bool reached = false;
    while (!queue.empty() && !reached) {
      int x = queue.front();
      queue.pop_front();
      if (dist[x] >= limit) continue;
      for (int w : adj[x]) {
        if (dist[w] >= 0) continue;
        if (w == v) {
          reached = true;
          break;
        }
        dist[w] = dist[x] + 1;
        touched.push_back(w);
        queue.push_back(w);
      }
    }
    for (int x : touched) dist[x] = -1;
    return !reached;
  };

  for (long long attempt = 0; attempt < attempt_budget; ++attempt) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    if (u == v || !degree_ok(u) || !degree_ok(v)) continue;
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
    if (!far_enough(u, v)) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (int u = 0; u < n; ++u)
    for (int w : adj[u])
      if (u < w) edges.emplace_back(dec(u), dec(w));
  return Graph::from_edge_list(edges, dec_labels(n));
}

Graph make_cycle(int n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(dec(i), dec(i % n + 1));
  return Graph::from_edge_list(edges);
}

Graph make_path(int n) {
  if (n < 1) throw InvalidInput("path needs n >= 1");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(dec(i), dec(i + 1));
  return Graph::from_edge_list(edges, {dec(1)});
}

Graph make_complete(int n) {
  if (n < 1) throw InvalidInput("complete graph needs n >= 1");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(dec(i), dec(j));
  return Graph::from_edge_list(edges, {dec(1)});
}

Graph make_wheel(int rim_length) {
  if (rim_length < 4) throw InvalidInput("wheel needs rim length >= 4");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= rim_length; ++i) {
    edges.emplace_back(dec(i), dec(i % rim_length + 1));
    edges.emplace_back(dec(0), dec(i));
  }
  return Graph::from_edge_list(edges);
}

Graph make_petersen() {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(dec(i), dec((i + 1) % 5));          // outer 5-cycle
    edges.emplace_back(dec(5 + i), dec(5 + (i + 2) % 5));  // inner pentagram
    edges.emplace_back(dec(i), dec(5 + i));                // spokes
  }
  return Graph::from_edge_list(edges);
}

}  // namespace locc
