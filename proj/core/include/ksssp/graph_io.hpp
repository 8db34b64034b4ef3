#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ksssp/graph.hpp"

namespace ksssp {

/// Text graph format:
///
///   # comment lines (and blank lines) are ignored anywhere
///   p ksp <n> <m> <directed:0|1> <weighted:0|1>
///   <u> <v> [<w>]      exactly m lines, 0-based ids, w only when weighted
///
/// Undirected edges are listed once and mirrored on load.
struct GraphHeader {
  std::size_t n = 0;
  std::size_t m = 0;
  bool directed = true;
  bool weighted = true;
};

/// Parse failure; `line()` is the 1-based line number of the offending line
/// (0 when the error is not tied to a line, e.g. missing edges at EOF).
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadOptions {
  /// Restrict the graph to its largest (strongly) connected component.
  bool largest_component = false;
};

Graph load_graph(std::istream& in);
Graph load_graph_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Writes `g` in the text format. `comments` are emitted as leading `#` lines.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace ksssp
