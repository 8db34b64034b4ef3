#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "ksssp/generators.hpp"
#include "ksssp/graph_io.hpp"
#include "ksssp/profile.hpp"
#include "ksssp/shortest_paths.hpp"
#include "ksssp/solvers.hpp"

namespace ksssp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct LoadFailure {};

Graph load_or_report(const std::string& file, bool largest_component, std::ostream& err) {
  try {
    return load_graph_file(file, LoadOptions{largest_component});
  } catch (const ParseError& e) {
    err << "error: " << file << ":" << e.line() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  throw LoadFailure{};
}

// Shared by solve and verify: exponential algorithms refuse graphs whose
// simple-path count from the root exceeds the cap unless forced.
bool guard_allows(const Graph& g, VertexId root, std::size_t cap, bool force, std::ostream& err,
                  const std::string& what) {
  if (force || count_simple_paths(g, root, cap)) return true;
  err << "error: more than " << cap << " simple paths from root " << root << "; " << what
      << " refused (pass --force to run anyway)\n";
  return false;
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class T>
std::uint64_t fnv1a(std::uint64_t h, T value) {
  return fnv1a(h, &value, sizeof value);
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string graph_id(const std::string& file) {
  return std::filesystem::path(file).stem().string();
}

std::vector<std::string> check_solution(const std::string& algo, const SsKsspSolution& sol,
                                        const Graph& g) {
  std::vector<std::string> problems;
  const std::size_t n = g.vertex_count();
  const std::uint64_t k = sol.k;
  for (VertexId v = 0; v < n; ++v) {
    if (v == sol.root) continue;
    if (auto why = check_collection(sol.at(v), g, sol.k)) {
      problems.push_back(algo + ": vertex " + std::to_string(v) + ": " + *why);
    }
  }
  const RunStats& s = sol.stats;
  const std::uint64_t m_factor = g.directed() ? g.edge_count() : 2 * g.edge_count();
  if (algo == "bounded") {
    if (s.normal_insertions > k * m_factor) {
      problems.push_back(algo + ": normal insertions " + std::to_string(s.normal_insertions) +
                         " exceed " + std::to_string(k * m_factor));
    }
    if (s.exceptional_insertions > k * (n - 1)) {
      problems.push_back(algo + ": exceptional insertions " +
                         std::to_string(s.exceptional_insertions) + " exceed " +
                         std::to_string(k * (n - 1)));
    }
    if (s.pksp_calls > n - 1) {
      problems.push_back(algo + ": " + std::to_string(s.pksp_calls) + " single-pair calls");
    }
  }
  if (algo == "ss-yen" && s.pksp_calls != n - 1) {
    problems.push_back(algo + ": " + std::to_string(s.pksp_calls) + " single-pair calls, expected " +
                       std::to_string(n - 1));
  }
  if (algo != "ss-yen" && s.dequeues > s.normal_insertions + s.exceptional_insertions + 1) {
    problems.push_back(algo + ": more dequeues than insertions");
  }
  return problems;
}

}  // namespace

const SolverRegistry& default_solvers() {
  static const SolverRegistry registry{
      {"exh", [](const Graph& g, VertexId r, std::size_t k,
                 const RunHooks& h) { return exh_ssksp(g, r, k, h); }},
      {"pruned", [](const Graph& g, VertexId r, std::size_t k,
                    const RunHooks& h) { return pruned_ssksp(g, r, k, h); }},
      {"bounded", [](const Graph& g, VertexId r, std::size_t k,
                     const RunHooks& h) { return bounded_ssksp(g, r, k, h); }},
      {"ss-yen", [](const Graph& g, VertexId r, std::size_t k,
                    const RunHooks& h) { return ss_yen(g, r, k, h); }},
  };
  return registry;
}

bool is_exponential(const std::string& algo) { return algo == "exh" || algo == "pruned"; }

std::string profile_digest(const SsKsspSolution& sol) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (VertexId v = 0; v < sol.collections.size(); ++v) {
    if (v == sol.root) continue;
    const auto& paths = sol.collections[v].paths;
    h = fnv1a(h, static_cast<std::uint64_t>(v));
    h = fnv1a(h, static_cast<std::uint64_t>(paths.size()));
    for (const Weight w : profile(paths).weights) {
      h = fnv1a(h, std::bit_cast<std::uint64_t>(w + 0.0));
    }
  }
  return hex64(h);
}

void render_tsv(std::ostream& out, const SsKsspSolution& sol) {
  for (VertexId v = 0; v < sol.collections.size(); ++v) {
    if (v == sol.root) continue;
    const auto& paths = sol.collections[v].paths;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      out << v << '\t' << i + 1 << '\t' << render_path(paths[i]) << '\n';
    }
  }
}

void render_json(std::ostream& out, const SsKsspSolution& sol) {
  Json doc = Json::array();
  for (VertexId v = 0; v < sol.collections.size(); ++v) {
    if (v == sol.root) continue;
    Json paths = Json::array();
    const auto& coll = sol.collections[v].paths;
    for (std::size_t i = 0; i < coll.size(); ++i) {
      paths.push_back(Json{{"rank", i + 1}, {"weight", coll[i].weight()},
                           {"vertices", coll[i].vertices()}});
    }
    doc.push_back(Json{{"vertex", v}, {"paths", std::move(paths)}});
  }
  out << doc.dump(2) << '\n';
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  const auto& solvers = default_solvers();
  auto it = solvers.find(opt.algo);
  if (it == solvers.end()) {
    err << "error: unknown algorithm '" << opt.algo << "'\n";
    return kConfigError;
  }
  if (opt.k < 1) {
    err << "error: --k must be at least 1\n";
    return kConfigError;
  }
  if (opt.format != "tsv" && opt.format != "json") {
    err << "error: unknown format '" << opt.format << "'\n";
    return kConfigError;
  }
  Graph g;
  try {
    g = load_or_report(opt.graph, opt.largest_component, err);
  } catch (const LoadFailure&) {
    return kIoError;
  }
  if (!g.contains(opt.root)) {
    err << "error: root " << opt.root << " outside [0, " << g.vertex_count() << ")\n";
    return kConfigError;
  }
  if (is_exponential(opt.algo) &&
      !guard_allows(g, opt.root, opt.cap, opt.force, err, opt.algo)) {
    return kConfigError;
  }
  SsKsspSolution sol = it->second(g, opt.root, opt.k, {});
  if (opt.format == "json") render_json(out, sol);
  else render_tsv(out, sol);
  return kOk;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::string> comments;
  Graph g;
  try {
    std::ostringstream what;
    what << "ksssp gen " << opt.family;
    if (opt.family == "er") {
      g = gen_erdos_renyi(opt.n, opt.m, opt.weighted, opt.directed, opt.seed);
      what << " n=" << opt.n << " m=" << opt.m << " weighted=" << opt.weighted
           << " directed=" << opt.directed << " seed=" << opt.seed;
      comments.push_back(what.str());
    } else if (opt.family == "ba") {
      g = gen_barabasi_albert(opt.n, opt.attach, opt.seed);
      what << " n=" << opt.n << " attach=" << opt.attach << " seed=" << opt.seed;
      comments.push_back(what.str());
    } else if (opt.family == "exh-adv" || opt.family == "pruned-adv") {
      AdversarialInstance inst = opt.family == "exh-adv" ? gen_exh_adversarial(opt.d)
                                                         : gen_pruned_adversarial(opt.d);
      what << " d=" << opt.d;
      comments.push_back(what.str());
      comments.push_back("root " + std::to_string(inst.root));
      std::vector<std::pair<VertexId, std::string>> names;
      for (const auto& [name, id] : inst.named) names.emplace_back(id, name);
      std::sort(names.begin(), names.end());
      for (const auto& [id, name] : names) comments.push_back(name + " " + std::to_string(id));
      g = std::move(inst.graph);
    } else {
      err << "error: unknown family '" << opt.family << "' (er, ba, exh-adv, pruned-adv)\n";
      return kConfigError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  write_graph(out, g, comments);
  return kOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const SolverRegistry& registry = opt.registry ? *opt.registry : default_solvers();
  for (const auto& a : opt.algos) {
    if (!registry.count(a)) {
      err << "error: unknown algorithm '" << a << "'\n";
      return kConfigError;
    }
  }
  if (opt.k < 1) {
    err << "error: --k must be at least 1\n";
    return kConfigError;
  }
  Graph g;
  try {
    g = load_or_report(opt.graph, opt.largest_component, err);
  } catch (const LoadFailure&) {
    return kIoError;
  }
  if (!g.contains(opt.root)) {
    err << "error: root " << opt.root << " outside [0, " << g.vertex_count() << ")\n";
    return kConfigError;
  }
  const bool needs_guard = opt.oracle || std::any_of(opt.algos.begin(), opt.algos.end(),
                                                     [](const auto& a) { return is_exponential(a); });
  if (needs_guard && !guard_allows(g, opt.root, opt.cap, opt.force, err, "verification")) {
    return kConfigError;
  }

  struct Run {
    std::string name;
    SsKsspSolution sol;
  };
  std::vector<Run> runs;
  if (opt.oracle) runs.push_back({"oracle", oracle_top_k(g, opt.root, opt.k, opt.cap)});

  std::vector<std::string> problems;
  for (const auto& name : opt.algos) {
    Weight last = 0;
    bool monotone = true;
    RunHooks hooks;
    hooks.on_dequeue = [&](const Path& p) {
      if (p.weight() < last) monotone = false;
      last = p.weight();
    };
    SsKsspSolution sol = registry.at(name)(g, opt.root, opt.k, hooks);
    if (!monotone) problems.push_back(name + ": dequeued weights decrease");
    auto found = check_solution(name, sol, g);
    problems.insert(problems.end(), found.begin(), found.end());
    out << name << '\t' << profile_digest(sol) << '\t' << "dequeues=" << sol.stats.dequeues
        << " normal=" << sol.stats.normal_insertions
        << " exceptional=" << sol.stats.exceptional_insertions
        << " pksp_calls=" << sol.stats.pksp_calls << '\n';
    runs.push_back({name, std::move(sol)});
  }

  std::optional<std::string> first_diff;
  auto compare = [&](const std::string& ref_name, VertexId v, const Profile& expected) {
    for (const Run& run : runs) {
      if (run.name == ref_name) continue;
      Profile got = profile(run.sol.at(v));
      if (got == expected) continue;
      std::string msg = "vertex " + std::to_string(v) + ": " + run.name + " " + to_string(got) +
                        " vs " + ref_name + " " + to_string(expected);
      problems.push_back("profile mismatch at " + msg);
      if (!first_diff) first_diff = msg;
    }
  };
  if (!runs.empty()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v == opt.root) continue;
      compare(runs.front().name, v, profile(runs.front().sol.at(v)));
    }
  }
  if (opt.k == 1) {
    ShortestPathTree spt = shortest_path_tree(g, opt.root);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v == opt.root) continue;
      Profile expected;
      if (spt.reachable(v)) expected.weights.push_back(spt.dist[v]);
      compare("shortest-path-tree", v, expected);
    }
  }

  for (const auto& p : problems) out << "VIOLATION\t" << p << '\n';
  if (first_diff) {
    err << "mismatch: " << *first_diff << '\n';
    return kMismatch;
  }
  if (!problems.empty()) return kMismatch;
  out << "EQUAL\n";
  return kOk;
}

std::vector<VertexId> sample_roots(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  if (count >= n) return all;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

BenchRecord bench_one(const Graph& g, const std::string& graph_id, const std::string& algo,
                      const SolverFn& solver, VertexId root, std::size_t k, double timeout) {
  using Clock = std::chrono::steady_clock;
  BenchRecord rec{graph_id, algo, k, root, std::nullopt, {}, "censored"};
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeout));
  RunHooks hooks;
  hooks.cancelled = [&] { return Clock::now() > deadline; };
  try {
    SsKsspSolution sol = solver(g, root, k, hooks);
    rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    rec.stats = sol.stats;
    rec.digest = profile_digest(sol);
  } catch (const SolverCancelled&) {
  }
  return rec;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  const auto& solvers = default_solvers();
  for (const auto& a : opt.algos) {
    if (!solvers.count(a)) {
      err << "error: unknown algorithm '" << a << "'\n";
      return kConfigError;
    }
  }
  if (opt.graphs.empty() || opt.ks.empty() || opt.repetitions < 1 || opt.timeout <= 0 ||
      std::find(opt.ks.begin(), opt.ks.end(), std::size_t{0}) != opt.ks.end() ||
      (opt.explicit_roots.empty() && opt.roots < 1)) {
    err << "error: bench needs graphs, k >= 1, roots >= 1, repetitions >= 1, timeout > 0\n";
    return kConfigError;
  }
  if (opt.format != "tsv" && opt.format != "json") {
    err << "error: unknown format '" << opt.format << "'\n";
    return kConfigError;
  }

  struct Cell {
    std::string graph;
    std::size_t k;
    std::map<std::string, std::vector<double>> seconds;
    std::map<std::string, bool> censored;
  };
  std::vector<BenchRecord> records;
  std::vector<Cell> cells;
  bool inconsistent = false;

  for (const auto& file : opt.graphs) {
    Graph g;
    try {
      g = load_or_report(file, opt.largest_component, err);
    } catch (const LoadFailure&) {
      return kIoError;
    }
    std::vector<VertexId> roots = opt.explicit_roots;
    if (roots.empty()) roots = sample_roots(g.vertex_count(), opt.roots, opt.seed);
    for (VertexId r : roots) {
      if (!g.contains(r)) {
        err << "error: root " << r << " outside " << file << '\n';
        return kConfigError;
      }
    }
    const std::string id = graph_id(file);
    for (std::size_t k : opt.ks) {
      Cell cell{id, k, {}, {}};
      for (VertexId r : roots) {
        std::string reference;
        for (const auto& algo : opt.algos) {
          for (std::size_t rep = 0; rep < opt.repetitions; ++rep) {
            BenchRecord rec = bench_one(g, id, algo, solvers.at(algo), r, k, opt.timeout);
            if (rec.seconds) {
              cell.seconds[algo].push_back(*rec.seconds);
              if (reference.empty()) reference = rec.digest;
              if (rec.digest != reference) {
                inconsistent = true;
                err << "warning: " << id << " k=" << k << " root=" << r << ": " << algo
                    << " digest " << rec.digest << " differs from " << reference << '\n';
              }
            } else {
              cell.censored[algo] = true;
            }
            records.push_back(std::move(rec));
          }
        }
      }
      cells.push_back(std::move(cell));
    }
  }

  auto mean = [](const std::vector<double>& xs) {
    return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  };
  auto times = [](const Cell& c, const std::string& algo) {
    auto it = c.seconds.find(algo);
    return it == c.seconds.end() ? std::vector<double>{} : it->second;
  };
  auto speedup = [&](const Cell& c) -> std::optional<double> {
    if (c.censored.count("ss-yen") || c.censored.count("bounded")) return std::nullopt;
    auto a = c.seconds.find("ss-yen"), b = c.seconds.find("bounded");
    if (a == c.seconds.end() || b == c.seconds.end()) return std::nullopt;
    const double tb = mean(b->second);
    if (tb <= 0) return std::nullopt;
    return mean(a->second) / tb;
  };

  if (opt.format == "json") {
    Json doc{{"records", Json::array()}, {"speedups", Json::array()}};
    for (const auto& r : records) {
      doc["records"].push_back(Json{{"graph", r.graph},
                                    {"algo", r.algo},
                                    {"k", r.k},
                                    {"root", r.root},
                                    {"seconds", r.seconds ? Json(*r.seconds) : Json(nullptr)},
                                    {"normal_ins", r.stats.normal_insertions},
                                    {"exceptional_ins", r.stats.exceptional_insertions},
                                    {"dequeues", r.stats.dequeues},
                                    {"pksp_calls", r.stats.pksp_calls},
                                    {"digest", r.digest}});
    }
    for (const auto& c : cells) {
      auto s = speedup(c);
      doc["speedups"].push_back(Json{{"graph", c.graph},
                                     {"k", c.k},
                                     {"ss_yen_mean", mean(times(c, "ss-yen"))},
                                     {"bounded_mean", mean(times(c, "bounded"))},
                                     {"speedup", s ? Json(*s) : Json(nullptr)}});
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "graph\talgo\tk\troot\tseconds\tnormal_ins\texceptional_ins\tdequeues\tpksp_calls\tdigest\n";
    for (const auto& r : records) {
      out << r.graph << '\t' << r.algo << '\t' << r.k << '\t' << r.root << '\t';
      if (r.seconds) out << std::fixed << std::setprecision(6) << *r.seconds << std::defaultfloat;
      else out << "NA";
      out << '\t' << r.stats.normal_insertions << '\t' << r.stats.exceptional_insertions << '\t'
          << r.stats.dequeues << '\t' << r.stats.pksp_calls << '\t' << r.digest << '\n';
    }
    out << "\n# speed-up = mean time(ss-yen) / mean time(bounded)\n";
    out << "graph\tk\tss_yen_mean\tbounded_mean\tspeedup\n";
    for (const auto& c : cells) {
      auto s = speedup(c);
      out << c.graph << '\t' << c.k << '\t' << std::fixed << std::setprecision(6)
          << mean(times(c, "ss-yen")) << '\t' << mean(times(c, "bounded")) << '\t';
      if (s) out << std::setprecision(3) << *s;
      else out << "NA";
      out << std::defaultfloat << '\n';
    }
  }
  return inconsistent ? kMismatch : kOk;
}

}  // namespace ksssp::cli
