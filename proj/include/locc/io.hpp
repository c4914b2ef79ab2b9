#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "locc/decompose.hpp"
#include "locc/graph.hpp"
#include "locc/local_structure.hpp"
#include "locc/recognition.hpp"

namespace locc {

/// Text edge-list format: one edge per line "u v", lines starting with "#"
/// ignored, duplicates and reversed duplicates tolerated, isolated vertices
/// declared via lines "! u".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
std::string serialize_edge_list(const Graph& g);

/// Graph JSON: {"vertices": [...], "edges": [[u, v], ...]}.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Reads either format, deciding by the first non-space byte.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

/// 𝐊(G): nodes as canonical keys, edges as [key1, key2, weight] with the
/// endpoints in clique order, edge list in the global order.
nlohmann::json kg_to_json(const CliqueIntersectionGraph& kg);

/// Decomposition: nodes, H-edges in global order, bags, and meta
/// {r_star, weight, target_weight} (r_star "infinity" when chordal, null
/// when no guarantee is carried).
nlohmann::json decomposition_to_json(const CliqueGraph& h, const LocalityReport& rep);

/// Rebuilds a CliqueGraph against a freshly computed kg of `g`; throws
/// InvalidInput when the node set or an edge does not match K(G).
CliqueGraph decomposition_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json locality_to_json(const LocalityReport& rep);
nlohmann::json pre_separation_to_json(const Graph& g, const PreSeparation& p,
                                      const LocalSeparationCertificate& cert);

/// DOT of 𝐊(G) with H edges solid and the remaining 𝐊 edges dotted,
/// edge labels carrying the weights.
std::string dot_export(const CliqueGraph& h);

}  // namespace locc
