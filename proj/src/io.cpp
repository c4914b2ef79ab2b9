#include "locc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace locc {

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (first == "!") {
      std::string v;
      if (!(ls >> v)) throw InvalidInput("line " + std::to_string(lineno) + ": '!' needs a vertex");
      isolated.push_back(v);
      continue;
    }
    std::string second;
    if (!(ls >> second))
      throw InvalidInput("line " + std::to_string(lineno) + ": expected two vertex labels");
    std::string extra;
    if (ls >> extra)
      throw InvalidInput("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    edges.emplace_back(first, second);
  }
  return Graph::from_edge_list(edges, isolated);
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  std::vector<char> covered(g.vertex_count(), 0);
  for (auto [u, v] : g.edge_pairs()) {
    covered[u] = covered[v] = 1;
    out << g.label(u) << ' ' << g.label(v) << '\n';
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) out << "! " << g.label(v) << '\n';
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (const auto& v : j.value("vertices", nlohmann::json::array()))
    isolated.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("edge entries must be [u, v] pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph::from_edge_list(edges, isolated);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edge_pairs()) edges.push_back({g.label(u), g.label(v)});
  j["edges"] = edges;
  return j;
}

Graph load_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    nlohmann::json j = nlohmann::json::parse(text);
    return graph_from_json(j);
  }
  return parse_edge_list_text(text);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return load_graph(in);
}

nlohmann::json kg_to_json(const CliqueIntersectionGraph& kg) {
  nlohmann::json j;
  auto nodes = nlohmann::json::array();
  for (const auto& node : kg.nodes()) nodes.push_back(node.key);
  j["nodes"] = nodes;
  auto edges = nlohmann::json::array();
  for (const auto& e : kg.edges()) edges.push_back({kg.node(e.a).key, kg.node(e.b).key, e.weight});
  j["edges"] = edges;
  return j;
}

nlohmann::json decomposition_to_json(const CliqueGraph& h, const LocalityReport& rep) {
  nlohmann::json j;
  auto nodes = nlohmann::json::array();
  for (const auto& node : h.kg.nodes()) nodes.push_back(node.key);
  j["nodes"] = nodes;
  auto edges = nlohmann::json::array();
  for (int id : h.edge_ids) {
    const KEdge& e = h.kg.edges()[id];
    edges.push_back({h.kg.node(e.a).key, h.kg.node(e.b).key, e.weight});
  }
  j["edges"] = edges;
  nlohmann::json bags;
  for (const auto& node : h.kg.nodes()) {
    std::vector<std::string> members;
    members.reserve(node.members.size());
    for (int v : node.members) members.push_back(h.kg.host().label(v));
    bags[node.key] = members;
  }
  j["bags"] = bags;

  nlohmann::json meta;
  if (!h.guaranteed) {
    meta["r_star"] = nullptr;
    meta["guaranteed"] = false;
  } else if (rep.status == LocalityStatus::chordal) {
    meta["r_star"] = "infinity";
  } else if (rep.status == LocalityStatus::locally_chordal) {
    meta["r_star"] = *rep.r_star;
  } else {
    meta["r_star"] = nullptr;
    meta["guaranteed"] = false;
  }
  meta["weight"] = h.total_weight();
  meta["target_weight"] = weight_target(h.kg);
  j["meta"] = meta;
  return j;
}

CliqueGraph decomposition_from_json(const Graph& g, const nlohmann::json& j) {
  CliqueGraph h;
  h.kg = clique_intersection_graph(g);

  std::vector<std::string> file_nodes;
  for (const auto& key : j.at("nodes")) file_nodes.push_back(key.get<std::string>());
  std::vector<std::string> expected;
  expected.reserve(h.kg.node_count());
  for (const auto& node : h.kg.nodes()) expected.push_back(node.key);
  std::vector<std::string> sorted_file = file_nodes;
  std::sort(sorted_file.begin(), sorted_file.end());
  std::vector<std::string> sorted_expected = expected;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  if (sorted_file != sorted_expected)
    throw InvalidInput("decomposition nodes do not match the maximal cliques of the graph");

  std::unordered_map<std::string, int> node_of;
  for (int id = 0; id < h.kg.node_count(); ++id) node_of.emplace(h.kg.node(id).key, id);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2) throw InvalidInput("decomposition edge must be [key1, key2, w]");
    auto a = node_of.find(e[0].get<std::string>());
    auto b = node_of.find(e[1].get<std::string>());
    if (a == node_of.end() || b == node_of.end())
      throw InvalidInput("decomposition edge references an unknown clique");
    int id = h.kg.edge_id(a->second, b->second);
    if (id < 0) throw InvalidInput("decomposition edge joins disjoint cliques");
    h.edge_ids.push_back(id);
  }
  std::sort(h.edge_ids.begin(), h.edge_ids.end());
  h.edge_ids.erase(std::unique(h.edge_ids.begin(), h.edge_ids.end()), h.edge_ids.end());
  if (j.contains("meta") && j["meta"].contains("guaranteed"))
    h.guaranteed = false;
  return h;
}

nlohmann::json locality_to_json(const LocalityReport& rep) {
  nlohmann::json j;
  switch (rep.status) {
    case LocalityStatus::chordal:
      j["status"] = "chordal";
      j["r_star"] = "infinity";
      break;
    case LocalityStatus::locally_chordal:
      j["status"] = "locally_chordal";
      j["r_star"] = *rep.r_star;
      break;
    case LocalityStatus::not_locally_chordal:
      j["status"] = "not_locally_chordal";
      j["r_star"] = nullptr;
      break;
  }
  if (rep.hole) j["hole"] = *rep.hole;
  if (rep.wheel) {
    j["wheel"] = {{"hub", rep.wheel->hub}, {"rim", rep.wheel->rim}};
  }
  return j;
}

nlohmann::json pre_separation_to_json(const Graph& g, const PreSeparation& p,
                                      const LocalSeparationCertificate& cert) {
  nlohmann::json j;
  j["X"] = p.x_labels(g);
  auto side = [&g](const std::vector<std::pair<int, int>>& es) {
    auto arr = nlohmann::json::array();
    for (auto [x, w] : es) arr.push_back({g.label(x), g.label(w)});
    return arr;
  };
  j["E0"] = side(p.E0);
  j["E1"] = side(p.E1);
  j["r"] = cert.r;
  j["status"] = cert.is_local_separation ? "local_separation" : "violated";
  if (!cert.is_local_separation) j["witness"] = cert.walk_labels(g);
  return j;
}

std::string dot_export(const CliqueGraph& h) {
  std::ostringstream out;
  out << "graph cliquegraph {\n";
  for (const auto& node : h.kg.nodes()) out << "  \"" << node.key << "\";\n";
  for (int id = 0; id < h.kg.edge_count(); ++id) {
    const KEdge& e = h.kg.edges()[id];
    out << "  \"" << h.kg.node(e.a).key << "\" -- \"" << h.kg.node(e.b).key << "\" [label=\""
        << e.weight << "\"";
    if (!h.has_edge(id)) out << ", style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace locc
