#include "specbound/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InvalidInput(std::string(what) + ": expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

double as_real(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + ": expected a number, got " + j.dump());
  return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::vector<std::size_t>> index_lists(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected an array of arrays");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput(std::string(what) + ": expected an array of arrays");
    std::vector<std::size_t> list;
    for (const auto& v : row) list.push_back(as_index(v, what));
    out.push_back(std::move(list));
  }
  return out;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(origin + ": " + e.what());
  }
}

Json nullable(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json load_json(const std::filesystem::path& path) { return parse_json_text(read_file(path), path.string()); }

Graph load_graph(const std::filesystem::path& path, std::optional<GraphFormat> format) {
  if (!format) format = format_from_extension(path.string());
  if (!format) throw InvalidInput("cannot infer the graph format of " + path.string() + "; pass --format");
  return parse_graph(read_file(path), *format);
}

SymMatrix matrix_from_json(const Json& j) {
  const auto n = as_index(field(j, "n"), "matrix n");
  const auto& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != n) throw InvalidInput("matrix: expected " + std::to_string(n) + " rows");
  Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw InvalidInput("matrix: row " + std::to_string(i) + " does not have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = as_real(rows[i][k], "matrix entry");
  }
  return SymMatrix::from_dense(a, 1e-12);
}

Json matrix_to_json(const SymMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.dim()}, {"rows", std::move(rows)}};
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("vector: expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = as_real(j[i], "vector entry");
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Hypergraph hypergraph_from_json(const Json& j) {
  return Hypergraph(as_index(field(j, "nv"), "hypergraph nv"), index_lists(field(j, "edges"), "hypergraph edges"));
}

std::vector<std::vector<std::size_t>> cliques_from_json(const Json& j) {
  return index_lists(field(j, "cliques"), "clique cover");
}

Json set_to_json(const VertexSet& s) {
  Json out = Json::array();
  for (auto v : s.members()) out.push_back(v);
  return out;
}

VertexSet parse_vertex_list(std::string_view text, std::size_t universe) {
  VertexSet s(universe);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      std::size_t v = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || end != token.data() + token.size())
        throw InvalidInput("vertex list: cannot parse \"" + std::string(token) + "\"");
      if (v >= universe)
        throw InvalidInput("vertex list: index " + std::to_string(v) + " out of range for " + std::to_string(universe) +
                           " vertices");
      s.insert(v);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

Json to_json(const BoundReport& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json out{{"name", r.name},
           {"value", r.applicable ? Json(r.value) : Json(nullptr)},
           {"applicable", r.applicable},
           {"inputs", std::move(inputs)},
           {"cross_check", nullable(r.cross_check)}};
  if (r.cross_check) out["cross_check_agrees"] = r.cross_check_agrees();
  if (!r.certificate_hint.empty()) out["certificate_hint"] = r.certificate_hint;
  if (!r.provenance.empty()) out["provenance"] = r.provenance;
  if (!r.reason.empty()) out["reason"] = "not applicable: " + r.reason;
  return out;
}

Json to_json(const CertificateReport& r) {
  Json conditions = Json::array();
  for (const auto& c : r.conditions) conditions.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json conclusions = Json::array();
  for (const auto& c : r.conclusions)
    conclusions.push_back(Json{{"quantity", c.quantity}, {"value", c.value}, {"statement", c.statement}});
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  return Json{{"kind", r.kind},
              {"verdict", std::string(verdict_name(r.verdict))},
              {"c_value", nullable(r.c_value)},
              {"f_value", nullable(r.f_value)},
              {"pair_class", std::string(pair_class_name(r.pair_class))},
              {"witness", set_to_json(r.witness)},
              {"conditions", std::move(conditions)},
              {"failures", r.failures},
              {"conclusions", std::move(conclusions)},
              {"details", std::move(details)},
              {"notes", r.notes}};
}

Json to_json(const ThetaResult& r, bool full_trace) {
  Json out{{"program", std::string(program_name(r.program))},
           {"method", std::string(method_name(r.method))},
           {"value", r.value},
           {"iterations", r.iterations},
           {"converged", r.converged}};
  Json summary = Json::object();
  if (!r.trace.empty()) {
    double best = r.trace.front();
    for (double v : r.trace) best = std::min(best, v);
    summary["first"] = r.trace.front();
    summary["last"] = r.trace.back();
    summary["best"] = best;
    summary["length"] = r.trace.size();
  }
  out["trace_summary"] = std::move(summary);
  if (full_trace) out["trace"] = r.trace;
  return out;
}

Json to_json(const MatrixVectorPair& p) {
  return Json{{"classification", std::string(pair_class_name(p.classification))},
              {"quad", p.quad},
              {"max_ratio", p.valid() ? Json(p.max_ratio()) : Json(nullptr)},
              {"reasons", p.reasons}};
}

PairRecipe parse_recipe(std::string_view text) {
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_arg = [&]() {
    if (arg.empty()) throw InvalidInput("pair recipe \"" + std::string(kind) + "\" needs an argument after ':'");
  };
  auto no_arg = [&]() {
    if (colon != std::string_view::npos)
      throw InvalidInput("pair recipe \"" + std::string(kind) + "\" takes no argument");
  };
  if (kind == "resolvent") {
    need_arg();
    double lambda = 0.0;
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), lambda);
    if (ec != std::errc() || end != arg.data() + arg.size())
      throw InvalidInput("resolvent: cannot parse lambda \"" + std::string(arg) + "\"");
    return ResolventRecipe{lambda};
  }
  if (kind == "hoffman") return no_arg(), PairRecipe{HoffmanRecipe{}};
  if (kind == "laplacian") return no_arg(), PairRecipe{LaplacianRecipe{}};
  if (kind == "normalized") return no_arg(), PairRecipe{NormalizedRecipe{}};
  if (kind == "subdivision") return no_arg(), PairRecipe{SubdivisionRecipe{}};
  if (kind == "join") {
    need_arg();
    std::size_t s = 0;
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), s);
    if (ec != std::errc() || end != arg.data() + arg.size())
      throw InvalidInput("join: cannot parse s \"" + std::string(arg) + "\"");
    return JoinRecipe{s};
  }
  if (kind == "semiregular") {
    need_arg();
    return SemiregularRecipe{load_graph(std::string(arg))};
  }
  if (kind == "clique_cover") {
    need_arg();
    return CliqueCoverRecipe{cliques_from_json(load_json(std::string(arg)))};
  }
  if (kind == "hypergraph") {
    need_arg();
    return HypergraphRecipe{hypergraph_from_json(load_json(std::string(arg)))};
  }
  if (kind == "file") {
    need_arg();
    return recipe_from_json(load_json(std::string(arg)));
  }
  throw InvalidInput("unknown pair recipe \"" + std::string(kind) + "\"");
}

PairRecipe recipe_from_json(const Json& j) {
  if (j.is_object() && j.contains("recipe")) {
    if (!j.at("recipe").is_string()) throw InvalidInput("pair: \"recipe\" must be a string");
    return parse_recipe(j.at("recipe").get<std::string>());
  }
  auto m = matrix_from_json(field(j, "matrix"));
  auto x = vector_from_json(field(j, "vector"));
  if (static_cast<std::size_t>(x.size()) != m.dim())
    throw InvalidInput("pair: vector length " + std::to_string(x.size()) + " does not match matrix dimension " +
                       std::to_string(m.dim()));
  return ExplicitRecipe{std::move(m), std::move(x)};
}

CertificateFile certificate_from_json(const Json& j) {
  const auto& g6 = field(j, "graph");
  if (!g6.is_string()) throw InvalidInput("certificate: \"graph\" must be a graph6 string");
  CertificateFile c{parse_graph(g6.get<std::string>(), GraphFormat::graph6), recipe_from_json(field(j, "pair")), {}, 1};
  if (j.contains("power")) c.power = as_index(j.at("power"), "certificate power");
  if (c.power == 0) throw InvalidInput("certificate: power must be >= 1");
  const auto& set = field(j, "independent_set");
  if (!set.is_array()) throw InvalidInput("certificate: \"independent_set\" must be an array");
  for (const auto& v : set) c.independent_set.push_back(as_index(v, "independent_set"));
  return c;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace specbound
