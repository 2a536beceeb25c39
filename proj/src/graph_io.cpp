#include "specbound/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_index(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw InvalidInput("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                       std::string(word) + "'");
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    ++line_no;
    fn(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.find('\n') != std::string_view::npos)
    throw InvalidInput("graph6: expected a single graph on one line");
  for (char c : text)
    if (c < 63 || c > 126) throw InvalidInput("graph6: byte outside the printable range 63..126");
  if (text.empty()) throw InvalidInput("graph6: empty input");

  std::size_t pos = 0;
  const auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw InvalidInput("graph6: truncated size header");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(text[pos + i] - 63);
    pos += count;
    return v;
  };
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
    if (n < 63) throw InvalidInput("graph6: non-canonical long size header");
  } else {
    pos = 2;
    n = take(6);
    if (n < 258048) throw InvalidInput("graph6: non-canonical long size header");
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw InvalidInput("graph6: expected " + std::to_string(bytes) + " data bytes for n = " + std::to_string(n) +
                       ", got " + std::to_string(text.size() - pos));

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned>(text.back() - 63);
    if ((last & ((1U << (6 - bits % 6)) - 1)) != 0) throw InvalidInput("graph6: nonzero padding bits");
  }
  return g;
}

Graph parse_dimacs(std::string_view text) {
  std::optional<Graph> g;
  for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
    const auto line = trim(raw);
    if (line.empty() || line[0] == 'c') return;
    const auto w = split_words(line);
    if (w[0] == "p") {
      if (g) throw InvalidInput("dimacs line " + std::to_string(line_no) + ": duplicate 'p' line");
      if (w.size() != 4) throw InvalidInput("dimacs line " + std::to_string(line_no) + ": expected 'p edge n m'");
      g.emplace(parse_index(w[2], line_no));
      parse_index(w[3], line_no);
    } else if (w[0] == "e") {
      if (!g) throw InvalidInput("dimacs line " + std::to_string(line_no) + ": edge before 'p' line");
      if (w.size() != 3) throw InvalidInput("dimacs line " + std::to_string(line_no) + ": expected 'e u v'");
      const auto u = parse_index(w[1], line_no);
      const auto v = parse_index(w[2], line_no);
      if (u == 0 || v == 0 || u > g->order() || v > g->order())
        throw InvalidInput("dimacs line " + std::to_string(line_no) + ": vertex index outside 1.." +
                           std::to_string(g->order()));
      if (u == v) throw InvalidInput("dimacs line " + std::to_string(line_no) + ": self-loop");
      g->add_edge(u - 1, v - 1);
    } else {
      throw InvalidInput("dimacs line " + std::to_string(line_no) + ": unknown record '" + std::string(w[0]) + "'");
    }
  });
  if (!g) throw InvalidInput("dimacs: missing 'p edge n m' header");
  return std::move(*g);
}

Graph parse_edgelist(std::string_view text) {
  std::optional<Graph> g;
  for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
    auto line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) return;
    const auto w = split_words(line);
    if (!g) {
      if (w.size() != 1) throw InvalidInput("edgelist line " + std::to_string(line_no) + ": expected vertex count");
      g.emplace(parse_index(w[0], line_no));
      return;
    }
    if (w.size() != 2) throw InvalidInput("edgelist line " + std::to_string(line_no) + ": expected 'u v'");
    const auto u = parse_index(w[0], line_no);
    const auto v = parse_index(w[1], line_no);
    if (u >= g->order() || v >= g->order())
      throw InvalidInput("edgelist line " + std::to_string(line_no) + ": vertex index >= n = " +
                         std::to_string(g->order()));
    if (u == v) throw InvalidInput("edgelist line " + std::to_string(line_no) + ": self-loop");
    g->add_edge(u, v);
  });
  if (!g) throw InvalidInput("edgelist: missing vertex count");
  return std::move(*g);
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "edgelist" || name == "el") return GraphFormat::edgelist;
  throw InvalidInput("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return "graph6";
    case GraphFormat::dimacs: return "dimacs";
    case GraphFormat::edgelist: return "edgelist";
  }
  return "graph6";
}

std::optional<GraphFormat> format_from_extension(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const auto ext = path.substr(dot + 1);
  if (ext == "g6") return GraphFormat::graph6;
  if (ext == "dimacs" || ext == "col" || ext == "dim") return GraphFormat::dimacs;
  if (ext == "el" || ext == "edges") return GraphFormat::edgelist;
  return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return parse_graph6(text);
    case GraphFormat::dimacs: return parse_dimacs(text);
    case GraphFormat::edgelist: return parse_edgelist(text);
  }
  throw InvalidInput("unknown graph format");
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace specbound
