#include "ksssp/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "ksssp/path.hpp"

namespace ksssp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

bool parse_flag(std::string_view tok, bool& value) {
  if (tok == "0") value = false;
  else if (tok == "1") value = true;
  else return false;
  return true;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  GraphHeader header;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 6 || tokens[0] != "p" || tokens[1] != "ksp" ||
          !parse_number(tokens[2], header.n) || !parse_number(tokens[3], header.m) ||
          !parse_flag(tokens[4], header.directed) || !parse_flag(tokens[5], header.weighted)) {
        throw ParseError(lineno, "malformed header, expected 'p ksp <n> <m> <0|1> <0|1>'");
      }
      if (header.n < 1) throw ParseError(lineno, "malformed header, n must be >= 1");
      have_header = true;
      continue;
    }

    if (edges.size() == header.m) throw ParseError(lineno, "more edge lines than declared m");
    const std::size_t expected = header.weighted ? 3 : 2;
    if (tokens.size() != expected) {
      throw ParseError(lineno, header.weighted ? "expected '<u> <v> <w>'" : "expected '<u> <v>'");
    }
    EdgeSpec e;
    if (!parse_number(tokens[0], e.from) || !parse_number(tokens[1], e.to)) {
      throw ParseError(lineno, "malformed vertex id");
    }
    if (e.from >= header.n || e.to >= header.n) {
      throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(header.n) + ")");
    }
    if (e.from == e.to) throw ParseError(lineno, "self-loop on vertex " + std::to_string(e.from));
    if (header.weighted) {
      if (!parse_number(tokens[2], e.weight)) throw ParseError(lineno, "malformed weight");
      if (!(e.weight >= 0) || !std::isfinite(e.weight)) {
        throw ParseError(lineno, "negative or non-finite weight");
      }
    }
    edges.push_back(e);
    edge_lines.push_back(lineno);
  }

  if (!have_header) throw ParseError(0, "missing header line");
  if (edges.size() != header.m) {
    throw ParseError(0, "declared m=" + std::to_string(header.m) + " but found " +
                            std::to_string(edges.size()) + " edge lines");
  }

  // Duplicate detection with line numbers; the builder would reject them too
  // but cannot name the line.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto canon = [&](std::size_t i) {
    VertexId a = edges[i].from, b = edges[i].to;
    if (!header.directed && a > b) std::swap(a, b);
    return std::pair{a, b};
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ka = canon(a), kb = canon(b);
    return ka != kb ? ka < kb : a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (canon(order[i]) == canon(order[i - 1])) {
      throw ParseError(edge_lines[order[i]], "duplicate edge (first seen on line " +
                                                 std::to_string(edge_lines[order[i - 1]]) + ")");
    }
  }

  return Graph::from_edges(header.n, edges, header.directed, header.weighted);
}

Graph load_graph_file(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path.string() + "'");
  Graph g = load_graph(in);
  if (options.largest_component) {
    auto keep = largest_component(g);
    g = induced_subgraph(g, keep).graph;
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p ksp " << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.directed() ? 1 : 0)
      << ' ' << (g.weighted() ? 1 : 0) << '\n';
  for (const EdgeSpec& e : g.edges()) {
    out << e.from << ' ' << e.to;
    if (g.weighted()) out << ' ' << format_weight(e.weight);
    out << '\n';
  }
}

}  // namespace ksssp
