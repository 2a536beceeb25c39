#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "specbound/bounds.hpp"
#include "specbound/certificates.hpp"
#include "specbound/graph_io.hpp"
#include "specbound/recipes.hpp"
#include "specbound/theta.hpp"

namespace specbound {

using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);
Json load_json(const std::filesystem::path& path);
/// Format from --format when given, otherwise from the file extension.
Graph load_graph(const std::filesystem::path& path, std::optional<GraphFormat> format = std::nullopt);

/// {"n": int, "rows": [[float]]}; symmetry checked to 1e-12.
SymMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const SymMatrix& m);
Vector vector_from_json(const Json& j);
Json vector_to_json(const Vector& v);
/// {"nv": int, "edges": [[int]]}
Hypergraph hypergraph_from_json(const Json& j);
/// {"cliques": [[int]]}
std::vector<std::vector<std::size_t>> cliques_from_json(const Json& j);

Json set_to_json(const VertexSet& s);
/// Comma-separated indices, e.g. "0,2,4".
VertexSet parse_vertex_list(std::string_view text, std::size_t universe);

Json to_json(const BoundReport& r);
Json to_json(const CertificateReport& r);
Json to_json(const ThetaResult& r, bool full_trace = false);
Json to_json(const MatrixVectorPair& p);

/// resolvent:<lambda> | hoffman | laplacian | normalized | subdivision | join:<s> |
/// semiregular:<graph file> | clique_cover:<json file> | hypergraph:<json file> | file:<pair json>
PairRecipe parse_recipe(std::string_view text);
/// {"recipe": "<recipe>"} or {"matrix": {...}, "vector": [...]}
PairRecipe recipe_from_json(const Json& j);

struct CertificateFile {
  Graph graph;
  PairRecipe recipe;
  /// Indices into the pair's graph (the strong power when power > 1).
  std::vector<std::size_t> independent_set;
  std::size_t power = 1;
};

/// {"graph": graph6, "pair": {...}, "independent_set": [int], "power": int}
CertificateFile certificate_from_json(const Json& j);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace specbound
