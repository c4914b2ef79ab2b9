// locc: recognize locally chordal graphs, compute their clique graphs, and
// verify the structural guarantees. JSON on stdout is the machine interface;
// exit codes: 0 success/pass, 1 domain failure, 2 usage or parse error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "locc/decompose.hpp"
#include "locc/generators.hpp"
#include "locc/io.hpp"
#include "locc/local_structure.hpp"
#include "locc/recognition.hpp"
#include "locc/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw locc::InvalidInput("cannot write '" + path + "'");
  out << content;
}

int default_threads() {
  if (const char* env = std::getenv("LOCC_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;  // decompose() resolves 0 to the hardware parallelism
}

std::string r_star_text(const locc::LocalityReport& rep) {
  switch (rep.status) {
    case locc::LocalityStatus::chordal:
      return "infinity";
    case locc::LocalityStatus::locally_chordal:
      return std::to_string(*rep.r_star);
    default:
      return "undefined";
  }
}

locc::Graph model_by_name(const std::string& spec) {
  auto split = spec.find(':');
  std::string kind = spec.substr(0, split);
  int n = split == std::string::npos ? 0 : std::atoi(spec.c_str() + split + 1);
  if (kind == "petersen") return locc::make_petersen();
  if (kind == "cycle") return locc::make_cycle(n);
  if (kind == "path") return locc::make_path(n);
  if (kind == "complete") return locc::make_complete(n);
  if (kind == "wheel") return locc::make_wheel(n);
  return locc::load_graph_file(spec);
}

int run_recognize(const std::string& input, std::optional<int> require_r, bool as_json,
                  bool locality_only) {
  locc::Graph g = locc::load_graph_file(input);
  auto rep = locc::locality(g);
  json j = locc::locality_to_json(rep);
  if (!locality_only) {
    j["chordal"] = rep.status == locc::LocalityStatus::chordal;
    j["wheel_free"] = rep.status != locc::LocalityStatus::not_locally_chordal;
  }
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else if (rep.status == locc::LocalityStatus::not_locally_chordal) {
    std::cout << "not locally chordal; wheel witness hub=" << rep.wheel->hub << " rim=[";
    for (size_t i = 0; i < rep.wheel->rim.size(); ++i)
      std::cout << (i ? " " : "") << rep.wheel->rim[i];
    std::cout << "]\n";
  } else if (rep.status == locc::LocalityStatus::chordal) {
    std::cout << "chordal, r*=infinity\n";
  } else {
    std::cout << "locally chordal, r*=" << *rep.r_star << "\n";
  }

  if (require_r) {
    if (*require_r < 3) throw locc::InvalidInput("--require-r needs r >= 3");
    if (!locc::is_r_locally_chordal(g, *require_r).holds) return kExitDomainFailure;
  }
  return kExitPass;
}

int run_cliques(const std::string& input, const std::string& out) {
  locc::Graph g = locc::load_graph_file(input);
  auto kg = locc::clique_intersection_graph(g);
  write_output(out, locc::kg_to_json(kg).dump(2));
  return kExitPass;
}

int run_decompose(const std::string& input, const std::string& mode, int threads,
                  const std::string& out, const std::string& dot, bool unchecked) {
  locc::Graph g = locc::load_graph_file(input);
  auto m = mode == "sequential" ? locc::DecomposeMode::sequential : locc::DecomposeMode::parallel;
  locc::CliqueGraph h;
  try {
    h = unchecked ? locc::decompose_unchecked(g, m, threads) : locc::decompose(g, m, threads);
  } catch (const locc::NotLocallyChordal& e) {
    std::cerr << "not locally chordal; wheel witness hub=" << e.witness.hub << "\n";
    return kExitDomainFailure;
  }
  auto rep = locc::locality(g);
  write_output(out, locc::decomposition_to_json(h, rep).dump(2));
  if (!dot.empty()) write_output(dot, locc::dot_export(h));
  return kExitPass;
}

int run_verify(const std::string& graph_path, const std::string& dec_path, const std::string& level,
               std::optional<int> r_override) {
  locc::Graph g = locc::load_graph_file(graph_path);
  std::ifstream in(dec_path);
  if (!in) throw locc::InvalidInput("cannot open '" + dec_path + "'");
  json jd = json::parse(in);
  locc::CliqueGraph h = locc::decomposition_from_json(g, jd);
  auto rep = locc::locality(g);

  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, json witness) {
    all_pass = all_pass && pass;
    json entry{{"check", name}, {"status", pass ? "pass" : "fail"}};
    if (!witness.is_null()) entry["witness"] = witness;
    checks.push_back(entry);
  };
  auto timed = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    checks.back()["ms"] = ms;
  };

  timed([&] {
    auto res = locc::check_clique_graph(h);
    record("clique_graph", res.pass, res.pass ? json() : json(res.disconnected_vertex));
  });
  timed([&] {
    auto res = locc::check_per_ball_clique_trees(h);
    record("per_ball_clique_trees", res.pass,
           res.pass ? json() : json{{"vertex", res.vertex}, {"reason", res.reason}});
  });
  timed([&] {
    auto res = locc::check_weight_certificate(h);
    record("weight_certificate", res.pass,
           json{{"weight", res.weight}, {"target", res.target}});
  });

  int r_for_girth = 0;
  if (r_override)
    r_for_girth = *r_override;
  else if (rep.status == locc::LocalityStatus::locally_chordal)
    r_for_girth = *rep.r_star;
  else if (rep.status == locc::LocalityStatus::chordal)
    r_for_girth = h.kg.node_count() + 1;
  if (r_for_girth > 0) {
    timed([&] {
      auto res = locc::check_girth_bound(h, r_for_girth);
      record("girth_bound", res.pass,
             res.pass ? json() : json{{"cycle_length", *res.short_cycle_length}});
    });
  }
  timed([&] {
    try {
      auto res = locc::check_k_acyclic_fast(h, rep);
      json certified = res.k ? json(*res.k) : json("infinity");
      bool pass = res.via_fast;
      if (!pass && rep.status == locc::LocalityStatus::not_locally_chordal) pass = true;
      record("k_acyclic_fast", pass, json{{"certified_k", certified}});
    } catch (const locc::TooLarge& e) {
      record("k_acyclic_fast", false, json(e.what()));
    }
  });

  if (level == "brute") {
    if (g.vertex_count() <= locc::kBruteSubsetGuard) {
      timed([&] {
        auto fam = locc::co_part_family(h);
        auto brute = locc::max_k_acyclic_brute(g, fam, false);
        auto fast = locc::check_k_acyclic_fast(h, rep);
        json certified = brute.max_k ? json(*brute.max_k) : json("infinity");
        record("k_acyclic_brute", brute.max_k == fast.k, json{{"max_k", certified}});
      });
      timed([&] {
        try {
          auto res = locc::check_helly_triples(locc::co_part_family(h));
          record("helly_triples", res.pass,
                 res.pass ? json()
                          : json{{"triple", {res.witness_triple[0], res.witness_triple[1],
                                             res.witness_triple[2]}}});
        } catch (const locc::PreconditionFailed& e) {
          record("helly_triples", false, json(e.what()));
        }
      });
    } else {
      record("k_acyclic_brute", true, json("skipped: graph above brute-force guard"));
    }
    if (g.vertex_count() <= locc::kCycleEnumGuard &&
        rep.status == locc::LocalityStatus::locally_chordal) {
      timed([&] {
        json certificates = json::array();
        bool pass = true;
        for (int id : h.edge_ids) {
          auto pre = locc::edge_pre_separation(h, id);
          auto cert = locc::check_r_local_separation(g, pre, *rep.r_star);
          pass = pass && cert.is_local_separation;
          certificates.push_back(locc::pre_separation_to_json(g, pre, cert));
        }
        record("edge_local_separations", pass, certificates);
      });
    }
  }

  json report{{"checks", checks}, {"all_pass", all_pass}, {"r_star", r_star_text(rep)}};
  std::cout << report.dump(2) << '\n';
  return all_pass ? kExitPass : kExitDomainFailure;
}

int run_generate(const std::string& kind, int n, int density, int girth_min, int max_degree,
                 int private_size, const std::string& model_spec, std::uint64_t seed,
                 const std::string& out, const std::string& truth_path) {
  locc::Graph g;
  json truth;
  if (kind == "chordal") {
    g = locc::gen_chordal(n, density, seed);
    truth["r_star"] = "infinity";
    truth["clique_count"] = locc::enumerate_maximal_cliques(g).size();
  } else if (kind == "high_girth") {
    g = locc::gen_high_girth(n, girth_min, max_degree, seed);
    auto rep = locc::locality(g);
    truth["r_star"] =
        rep.status == locc::LocalityStatus::chordal ? json("infinity") : json(*rep.r_star);
    truth["clique_count"] = locc::enumerate_maximal_cliques(g).size();
  } else if (kind == "clique_glued") {
    auto glued = locc::gen_clique_glued(model_by_name(model_spec), private_size, seed);
    g = glued.graph;
    truth["r_star"] = glued.r_star ? json(*glued.r_star) : json("infinity");
    truth["clique_count"] = glued.clique_count;
    truth["model_iso_class"] = model_spec;
  } else if (kind == "wheel") {
    g = locc::make_wheel(n);
  } else if (kind == "cycle") {
    g = locc::make_cycle(n);
  } else if (kind == "path") {
    g = locc::make_path(n);
  } else if (kind == "complete") {
    g = locc::make_complete(n);
  } else {
    throw locc::InvalidInput("unknown generator kind '" + kind + "'");
  }
  write_output(out, locc::serialize_edge_list(g));
  if (!truth_path.empty()) write_output(truth_path, truth.dump(2));
  return kExitPass;
}

int run_export(const std::string& graph_path, const std::string& dec_path, const std::string& out) {
  locc::Graph g = locc::load_graph_file(graph_path);
  locc::CliqueGraph h;
  if (dec_path.empty()) {
    h = locc::decompose(g);
  } else {
    std::ifstream in(dec_path);
    if (!in) throw locc::InvalidInput("cannot open '" + dec_path + "'");
    h = locc::decomposition_from_json(g, json::parse(in));
  }
  write_output(out, locc::dot_export(h));
  return kExitPass;
}

int run_bench(const std::string& kind, const std::vector<int>& sizes,
              const std::vector<int>& degrees, int girth_min, std::uint64_t seed, int threads,
              const std::string& out) {
  std::ostringstream csv;
  csv << "n,delta,threads,wall_ms_decompose,per_vertex_max_ms\n";
  int max_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (max_threads < 1) max_threads = 1;

  for (int n : sizes) {
    for (int degree : degrees) {
      locc::Graph g;
      if (kind == "clique_glued") {
        auto model = locc::gen_high_girth(std::max(4, n / std::max(1, degree)), 5, degree, seed);
        g = locc::gen_clique_glued(model, 1, seed).graph;
      } else {
        g = locc::gen_high_girth(n, girth_min, degree, seed);
      }
      int delta = 0;
      for (int v = 0; v < g.vertex_count(); ++v) delta = std::max(delta, g.degree(v));

      std::string reference;
      for (int t : {1, max_threads}) {
        locc::DecomposeStats stats;
        auto h = locc::decompose(g, locc::DecomposeMode::parallel, t, &stats);
        std::ostringstream ids;
        for (int id : h.edge_ids) ids << id << ',';
        if (reference.empty())
          reference = ids.str();
        else if (reference != ids.str())
          throw std::logic_error("thread counts disagree on the decomposition");
        csv << g.vertex_count() << ',' << delta << ',' << stats.threads_used << ','
            << stats.wall_ms << ',' << stats.per_vertex_max_ms << '\n';
        if (max_threads == 1) break;
      }
    }
  }
  write_output(out, csv.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally chordal graph toolkit"};
  app.require_subcommand(1);

  std::string input, out, dot, dec_path, level = "fast", mode = "parallel";
  std::string kind, model_spec = "cycle:5", truth_path;
  std::optional<int> require_r, r_override;
  bool as_json = false, unchecked = false;
  int threads = default_threads();
  int n = 10, density = 3, girth_min = 5, max_degree = 4, private_size = 1;
  std::uint64_t seed = 1;
  std::vector<int> sizes{1000}, degrees{4};

  auto* recognize = app.add_subcommand("recognize", "chordality / wheel / locality verdicts");
  recognize->add_option("input", input)->required();
  recognize->add_option("--require-r", require_r, "fail unless r-locally chordal");
  recognize->add_flag("--json", as_json);

  auto* loc = app.add_subcommand("locality", "maximum locality r*");
  loc->add_option("input", input)->required();
  loc->add_flag("--json", as_json);

  auto* cliques = app.add_subcommand("cliques", "maximal cliques and their intersection graph");
  cliques->add_option("input", input)->required();
  cliques->add_option("--out", out);

  auto* dec = app.add_subcommand("decompose", "compute the r-acyclic clique graph");
  dec->add_option("input", input)->required();
  dec->add_option("--mode", mode)->check(CLI::IsMember({"parallel", "sequential"}));
  dec->add_option("--threads", threads);
  dec->add_option("--out", out);
  dec->add_option("--dot", dot);
  dec->add_flag("--unchecked", unchecked, "skip the wheel-freeness gate");

  auto* verify = app.add_subcommand("verify", "check a decomposition against its graph");
  verify->add_option("graph", input)->required();
  verify->add_option("decomposition", dec_path)->required();
  verify->add_option("--level", level)->check(CLI::IsMember({"fast", "brute"}));
  verify->add_option("--r", r_override);

  auto* gen = app.add_subcommand("generate", "seeded graph generators");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--n", n);
  gen->add_option("--density", density);
  gen->add_option("--girth", girth_min);
  gen->add_option("--max-degree", max_degree);
  gen->add_option("--private", private_size);
  gen->add_option("--model", model_spec);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);
  gen->add_option("--truth", truth_path);

  auto* exp = app.add_subcommand("export", "DOT export of the clique structure");
  exp->add_option("graph", input)->required();
  exp->add_option("--decomposition", dec_path);
  exp->add_option("--out", out);

  auto* bench = app.add_subcommand("bench", "decomposition timings as CSV");
  bench->add_option("--kind", kind)->check(CLI::IsMember({"high_girth", "clique_glued"}));
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--degrees", degrees)->delimiter(',');
  bench->add_option("--girth", girth_min);
  bench->add_option("--seed", seed);
  bench->add_option("--threads", threads);
  bench->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (recognize->parsed()) return run_recognize(input, require_r, as_json, false);
    if (loc->parsed()) return run_recognize(input, std::nullopt, as_json, true);
    if (cliques->parsed()) return run_cliques(input, out);
    if (dec->parsed()) return run_decompose(input, mode, threads, out, dot, unchecked);
    if (verify->parsed()) return run_verify(input, dec_path, level, r_override);
    if (gen->parsed())
      return run_generate(kind, n, density, girth_min, max_degree, private_size, model_spec, seed,
                          out, truth_path);
    if (exp->parsed()) return run_export(input, dec_path, out);
    if (bench->parsed())
      return run_bench(kind.empty() ? "high_girth" : kind, sizes, degrees, girth_min, seed, threads,
                       out);
  } catch (const locc::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainFailure;
  }
  return kExitUsage;
}
