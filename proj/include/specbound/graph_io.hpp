#pragma once

#include <string>
#include <string_view>

#include "specbound/graph.hpp"

namespace specbound {

enum class GraphFormat { graph6, dimacs, edgelist };

/// "graph6" | "g6" | "dimacs" | "edgelist" | "el"
GraphFormat parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat format);
/// Guess from a file name suffix: .g6, .dimacs/.col/.dim, .el/.edges; nullopt otherwise.
std::optional<GraphFormat> format_from_extension(std::string_view path);

/// Parses one graph.
///
/// graph6: optional ">>graph6<<" header, short (n <= 62) and long (n <= 258047,
///   and the 8-byte form beyond) size prefixes; padding bits must be zero.
/// dimacs: "c" comments, one "p edge n m" line, "e u v" lines with 1-based vertices.
/// edgelist: first non-comment line is n, then "u v" lines with 0-based vertices.
/// Duplicate edges are merged for dimacs and edgelist; self-loops are rejected.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical graph6 encoding without header or trailing newline.
std::string to_graph6(const Graph& g);
std::string to_edgelist(const Graph& g);

}  // namespace specbound
