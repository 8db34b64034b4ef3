#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksssp/graph.hpp"
#include "ksssp/oracle.hpp"
#include "ksssp/solver_state.hpp"

namespace ksssp::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kConfigError = 2, kMismatch = 3 };

using SolverFn =
    std::function<SsKsspSolution(const Graph&, VertexId, std::size_t, const RunHooks&)>;
using SolverRegistry = std::map<std::string, SolverFn>;

/// exh, pruned, bounded, ss-yen.
const SolverRegistry& default_solvers();

/// Algorithms whose running time can blow up exponentially.
bool is_exponential(const std::string& algo);

/// 16 hex digits; depends only on the per-vertex profiles (and vertex ids).
std::string profile_digest(const SsKsspSolution& sol);

void render_tsv(std::ostream& out, const SsKsspSolution& sol);
void render_json(std::ostream& out, const SsKsspSolution& sol);

struct SolveOptions {
  std::string graph;
  VertexId root = 0;
  std::size_t k = 1;
  std::string algo = "bounded";
  std::string format = "tsv";
  bool force = false;
  bool largest_component = false;
  std::size_t cap = kDefaultEnumerationCap;
};
int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::string family;  // er, ba, exh-adv, pruned-adv
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t attach = 0;
  std::size_t d = 0;
  bool weighted = false;
  bool directed = false;
  std::uint64_t seed = 0;
};
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string graph;
  VertexId root = 0;
  std::size_t k = 1;
  std::vector<std::string> algos{"exh", "pruned", "bounded", "ss-yen"};
  bool oracle = true;
  bool force = false;
  bool largest_component = false;
  std::size_t cap = kDefaultEnumerationCap;
  /// Lookup table for `algos`; tests swap in broken solvers here.
  const SolverRegistry* registry = nullptr;
};
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

struct BenchRecord {
  std::string graph;
  std::string algo;
  std::size_t k = 0;
  VertexId root = 0;
  std::optional<double> seconds;  // empty when censored by the timeout
  RunStats stats;
  std::string digest;
};

struct BenchOptions {
  std::vector<std::string> graphs;
  std::vector<std::size_t> ks{2, 4, 8};
  std::size_t roots = 3;
  std::vector<VertexId> explicit_roots;
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  double timeout = 300.0;
  std::string format = "tsv";
  std::vector<std::string> algos{"ss-yen", "bounded"};
  bool largest_component = false;
};

/// Roots drawn uniformly without replacement; all vertices when count >= n.
std::vector<VertexId> sample_roots(std::size_t n, std::size_t count, std::uint64_t seed);

/// Runs one cell; a run exceeding `timeout` seconds is censored.
BenchRecord bench_one(const Graph& g, const std::string& graph_id, const std::string& algo,
                      const SolverFn& solver, VertexId root, std::size_t k, double timeout);

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace ksssp::cli
