#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/certificates.hpp"
#include "specbound/constructions.hpp"
#include "specbound/errors.hpp"
#include "specbound/graph_io.hpp"
#include "specbound/independence.hpp"
#include "specbound/json_io.hpp"
#include "specbound/recipes.hpp"
#include "specbound/theta.hpp"

using namespace specbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInvalid = 2;

struct Run {
  Json doc;
  int exit_code = kExitOk;
};

struct Common {
  std::string format;
  std::optional<GraphFormat> graph_format() const {
    if (format.empty()) return std::nullopt;
    return parse_format_name(format);
  }
};

Json describe_input(const std::string& path, const Graph& g) {
  return Json{{"path", path}, {"digest", fnv1a_hex(read_file(path))}, {"order", g.order()}, {"size", g.size()}};
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text.front() == '-')
    throw InvalidInput(std::string(what) + ": expected a nonnegative integer, got \"" + text + "\"");
  return static_cast<std::size_t>(v);
}

// ---- alpha ----

struct AlphaArgs {
  std::string graph;
  std::size_t budget = kDefaultAlphaBudget;
};

Run cmd_alpha(const AlphaArgs& a, const Common& common) {
  const auto g = load_graph(a.graph, common.graph_format());
  const auto result = max_independent_set(g, a.budget);
  Run run;
  run.doc["input"] = describe_input(a.graph, g);
  run.doc["alpha"] = result.alpha;
  run.doc["witness"] = set_to_json(result.witness);
  if (!g.labels().empty()) {
    Json labels = Json::array();
    for (auto v : result.witness.members()) labels.push_back(g.label(v));
    run.doc["witness_labels"] = std::move(labels);
  }
  return run;
}

// ---- bounds ----

struct BoundsArgs {
  std::string graph;
  std::string pair;
  std::string set;
  std::optional<std::size_t> t;
};

Run cmd_bounds(const BoundsArgs& a, const Common& common) {
  const auto g = load_graph(a.graph, common.graph_format());
  Run run;
  run.doc["input"] = describe_input(a.graph, g);
  Json classical = Json::array();
  for (const auto& r : classical_bounds(g)) classical.push_back(to_json(r));
  run.doc["bounds"] = std::move(classical);
  if (!a.pair.empty()) {
    const auto built = build_pair(g, parse_recipe(a.pair));
    const auto& pair = built.pair;
    run.doc["pair"] = to_json(pair);
    run.doc["pair"]["recipe"] = a.pair;
    run.doc["pair"]["description"] = built.description;
    if (!pair.valid()) throw InvalidInput("pair is invalid: " + (pair.reasons.empty() ? std::string("?") : pair.reasons.front()));
    run.doc["F"] = to_json(bound_F(pair));
    const auto& pg = pair.graph;
    if (!a.set.empty()) run.doc["F_S"] = to_json(bound_F_S(pair, parse_vertex_list(a.set, pg.order())));
    if (pg.order() > 0) {
      if (a.t) {
        run.doc["F_T"] = to_json(bound_F_T(pair, *a.t, "--t"));
      } else {
        const auto greedy = greedy_independent_set(pg);
        run.doc["F_T"] = to_json(bound_F_T(pair, greedy.count(), "greedy_independent_set"));
      }
    }
  } else if (!a.set.empty()) {
    run.doc["laplacian_set"] = to_json(laplacian_set_bound(g, parse_vertex_list(a.set, g.order())));
  }
  return run;
}

// ---- certify ----

struct CertifyArgs {
  std::string input;
  std::string pair;
  std::string set;
  std::size_t power = 1;
  bool structural = false;
  bool set_mode = false;
  bool skip_theta = false;
  std::string semiregular;
  std::string cover;
  std::string hypergraph;
};

int verdict_exit(bool verified) { return verified ? kExitOk : kExitRefuted; }

Run cmd_certify(const CertifyArgs& a, const Common& common) {
  Run run;
  Graph g;
  std::optional<PairRecipe> recipe;
  std::optional<std::vector<std::size_t>> file_set;
  std::size_t power = a.power;
  if (a.input.size() > 5 && a.input.ends_with(".json")) {
    auto cert = certificate_from_json(load_json(a.input));
    g = cert.graph;
    recipe = std::move(cert.recipe);
    file_set = std::move(cert.independent_set);
    if (power == 1) power = cert.power;
  } else {
    g = load_graph(a.input, common.graph_format());
  }
  run.doc["input"] = describe_input(a.input, g);
  if (!a.pair.empty()) recipe = parse_recipe(a.pair);

  if (a.structural) {
    if (a.set.empty() && !file_set) throw InvalidInput("--structural needs --set");
    StructuralAux aux;
    if (!a.semiregular.empty()) aux.semiregular = load_graph(a.semiregular);
    if (!a.cover.empty()) aux.cover = cliques_from_json(load_json(a.cover));
    if (!a.hypergraph.empty()) aux.hypergraph = hypergraph_from_json(load_json(a.hypergraph));
    const auto c = a.set.empty() ? VertexSet::of(g.order(), *file_set) : parse_vertex_list(a.set, g.order());
    Json reports = Json::array();
    bool any = false;
    for (const auto& r : structural_certificates(g, c, aux)) {
      any = any || r.verified();
      reports.push_back(to_json(r));
    }
    run.doc["structural"] = std::move(reports);
    run.doc["verdict"] = any ? "Verified" : "Refuted";
    run.exit_code = verdict_exit(any);
    return run;
  }

  if (!recipe) throw InvalidInput("certify needs --pair (or a certificate file)");
  const auto built = build_pair(g, *recipe);
  const auto& pair = built.pair;
  run.doc["pair"] = to_json(pair);
  run.doc["pair"]["recipe"] = a.pair.empty() ? recipe_name(*recipe) : a.pair;
  run.doc["pair"]["description"] = built.description;
  if (!pair.valid()) throw InvalidInput("pair is invalid: " + (pair.reasons.empty() ? std::string("?") : pair.reasons.front()));

  const auto universe = power == 1 ? pair.graph.order() : [&] {
    std::size_t total = 1;
    for (std::size_t i = 0; i < power; ++i) total *= pair.graph.order();
    return total;
  }();
  VertexSet c(universe);
  if (!a.set.empty()) {
    c = parse_vertex_list(a.set, universe);
  } else if (file_set) {
    c = VertexSet::of(universe, *file_set);
  } else if (built.suggested_c && power == 1) {
    c = *built.suggested_c;
    run.doc["set_source"] = "recipe";
  } else {
    throw InvalidInput("certify needs --set");
  }

  CertificateReport report;
  if (power > 1) {
    KroneckerOptions opts;
    opts.check_theta = !a.skip_theta;
    report = kronecker_certificate(pair, power, c, opts);
  } else if (a.set_mode) {
    report = check_set_certificate(pair, c);
  } else {
    report = check_pair_certificate(pair, c);
  }
  run.doc["certificate"] = to_json(report);
  run.doc["verdict"] = std::string(verdict_name(report.verdict));
  run.exit_code = verdict_exit(report.verified());
  return run;
}

// ---- theta ----

struct ThetaArgs {
  std::string graph;
  bool prime = false;
  bool trace = false;
  std::string method = "smoothed";
  std::optional<double> target;
  SolverOptions opts;
};

Run cmd_theta(ThetaArgs a, const Common& common) {
  const auto g = load_graph(a.graph, common.graph_format());
  if (a.method == "smoothed")
    a.opts.method = ThetaMethod::smoothed;
  else if (a.method == "subgradient")
    a.opts.method = ThetaMethod::subgradient;
  else
    throw InvalidInput("unknown theta method \"" + a.method + "\"");
  a.opts.target = a.target;
  const auto result = solve_theta(g, a.prime ? ThetaProgram::theta_prime : ThetaProgram::theta, a.opts);
  Run run;
  run.doc["input"] = describe_input(a.graph, g);
  run.doc["options"] = Json{{"max_iterations", a.opts.max_iterations},
                            {"tol", a.opts.tol},
                            {"window", a.opts.window},
                            {"seed", a.opts.seed},
                            {"method", a.method}};
  run.doc["theta"] = to_json(result, a.trace);
  return run;
}

// ---- construct ----

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> params;
  std::string output;
};

Run cmd_construct(const ConstructArgs& a, const Common& common) {
  const auto& p = a.params;
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw InvalidInput("construct " + a.kind + ": usage " + usage);
  };
  Graph g;
  Json inputs = Json::array();
  auto graph_param = [&](const std::string& path) {
    auto h = load_graph(path, common.graph_format());
    inputs.push_back(describe_input(path, h));
    return h;
  };
  if (a.kind == "kneser") {
    need(2, "kneser <n> <k>");
    g = kneser(parse_count(p[0], "n"), parse_count(p[1], "k"));
  } else if (a.kind == "hamming") {
    need(2, "hamming <d> <r>");
    g = hamming_leq(parse_count(p[0], "d"), parse_count(p[1], "r"));
  } else if (a.kind == "power") {
    need(2, "power <graph> <k>");
    g = strong_power(graph_param(p[0]), parse_count(p[1], "k"));
  } else if (a.kind == "subdivision") {
    need(1, "subdivision <graph>");
    g = subdivision(graph_param(p[0]));
  } else if (a.kind == "complement") {
    need(1, "complement <graph>");
    g = complement(graph_param(p[0]));
  } else if (a.kind == "join") {
    need(2, "join <graph> <graph>");
    auto g1 = graph_param(p[0]);
    g = join(g1, graph_param(p[1]));
  } else if (a.kind == "cycle") {
    need(1, "cycle <n>");
    g = cycle_graph(parse_count(p[0], "n"));
  } else if (a.kind == "path") {
    need(1, "path <n>");
    g = path_graph(parse_count(p[0], "n"));
  } else if (a.kind == "complete") {
    need(1, "complete <n>");
    g = complete_graph(parse_count(p[0], "n"));
  } else if (a.kind == "empty") {
    need(1, "empty <n>");
    g = empty_graph(parse_count(p[0], "n"));
  } else if (a.kind == "bipartite") {
    need(2, "bipartite <a> <b>");
    g = complete_bipartite(parse_count(p[0], "a"), parse_count(p[1], "b"));
  } else {
    throw InvalidInput("unknown construction \"" + a.kind + "\"");
  }
  const auto g6 = to_graph6(g);
  if (!a.output.empty()) {
    std::ofstream out(a.output, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + a.output);
    out << g6 << '\n';
  }
  Run run;
  if (!inputs.empty()) run.doc["inputs"] = std::move(inputs);
  run.doc["kind"] = a.kind;
  run.doc["order"] = g.order();
  run.doc["size"] = g.size();
  run.doc["graph6"] = g6;
  if (!a.output.empty()) run.doc["output"] = a.output;
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized-inverse bounds and equality certificates for graph independence numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Graph format: graph6, dimacs or edgelist (default: from extension)");

  AlphaArgs alpha_args;
  auto* alpha = app.add_subcommand("alpha", "Exact independence number and lexicographically least witness");
  alpha->add_option("graph", alpha_args.graph, "Graph file")->required();
  alpha->add_option("--budget", alpha_args.budget, "Vertex budget for the exact search");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Classical bounds, plus F, F_S and F_T for a pair");
  bounds->add_option("graph", bounds_args.graph, "Graph file")->required();
  bounds->add_option("--pair", bounds_args.pair, "Pair recipe");
  bounds->add_option("--set", bounds_args.set, "Independent set S, comma-separated");
  bounds->add_option("--t", bounds_args.t, "Promised lower bound t on alpha (default: greedy)");

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Check an equality certificate");
  certify->add_option("input", certify_args.input, "Graph file or certificate JSON")->required();
  certify->add_option("--pair", certify_args.pair, "Pair recipe");
  certify->add_option("--set", certify_args.set, "Independent set C, comma-separated");
  certify->add_option("--power", certify_args.power, "Strong-product power k (Kronecker certificate)");
  certify->add_flag("--structural", certify_args.structural, "Run the structural conditions (1)-(8)");
  certify->add_flag("--set-bound", certify_args.set_mode, "Check the F_S equality conditions instead of F");
  certify->add_flag("--no-theta-check", certify_args.skip_theta, "Skip the numerical theta comparison for --power");
  certify->add_option("--semiregular", certify_args.semiregular, "Semiregular spanning subgraph for condition (6)");
  certify->add_option("--cover", certify_args.cover, "Clique cover JSON for condition (7)");
  certify->add_option("--hypergraph", certify_args.hypergraph, "Hypergraph JSON for condition (8)");

  ThetaArgs theta_args;
  auto* theta = app.add_subcommand("theta", "Upper bound on theta (or theta' with --prime)");
  theta->add_option("graph", theta_args.graph, "Graph file")->required();
  theta->add_flag("--prime", theta_args.prime, "Solve the theta' program");
  theta->add_flag("--trace", theta_args.trace, "Include the full per-iteration trace");
  theta->add_option("--method", theta_args.method, "smoothed or subgradient");
  theta->add_option("--max-iterations", theta_args.opts.max_iterations, "Iteration cap");
  theta->add_option("--tol", theta_args.opts.tol, "Convergence tolerance");
  theta->add_option("--window", theta_args.opts.window, "Convergence window");
  theta->add_option("--seed", theta_args.opts.seed, "Seed (recorded; the solvers are deterministic)");
  theta->add_option("--step", theta_args.opts.step0, "Initial subgradient step");
  theta->add_option("--target", theta_args.target, "Target value for Polyak steps");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a graph and print it as graph6");
  construct->add_option("kind", construct_args.kind,
                        "kneser, hamming, power, subdivision, complement, join, cycle, path, complete, empty, bipartite")
      ->required();
  construct->add_option("params", construct_args.params, "Construction parameters");
  construct->add_option("-o,--output", construct_args.output, "Write graph6 to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  Json echo = Json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
  const std::string command = app.get_subcommands().front()->get_name();
  Run run;
  try {
    if (command == "alpha") run = cmd_alpha(alpha_args, common);
    else if (command == "bounds") run = cmd_bounds(bounds_args, common);
    else if (command == "certify") run = cmd_certify(certify_args, common);
    else if (command == "theta") run = cmd_theta(theta_args, common);
    else run = cmd_construct(construct_args, common);
  } catch (const std::exception& e) {
    std::cerr << "specbound: " << e.what() << '\n';
    run.doc = Json::object();
    run.doc["error"] = e.what();
    run.exit_code = kExitInvalid;
  }
  Json out{{"command", command}, {"arguments", std::move(echo)}};
  for (auto& [k, v] : run.doc.items()) out[k] = v;
  out["status"] = run.exit_code == kExitOk ? "ok" : run.exit_code == kExitRefuted ? "refuted" : "error";
  out["exit_code"] = run.exit_code;
  std::cout << out.dump(2) << '\n';
  return run.exit_code;
}
