#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

using namespace ksssp::cli;

int main(int argc, char** argv) {
  CLI::App app{"Top-k simple shortest paths from a single source"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* sc = app.add_subcommand("solve", "Solve one instance and print every vertex's paths");
  sc->add_option("--graph", solve.graph, "Graph file")->required();
  sc->add_option("--root", solve.root, "Root vertex");
  sc->add_option("--k", solve.k, "Paths per vertex")->required();
  sc->add_option("--algo", solve.algo, "exh | pruned | bounded | ss-yen");
  sc->add_option("--format", solve.format, "tsv | json");
  sc->add_option("--cap", solve.cap, "Simple-path guard for exh and pruned");
  sc->add_flag("--force", solve.force, "Ignore the simple-path guard");
  sc->add_flag("--largest-component", solve.largest_component,
               "Keep only the largest (strongly) connected component, re-indexed");

  GenOptions gen;
  std::string gen_out;
  auto* gc = app.add_subcommand("gen", "Generate a graph file");
  gc->add_option("family", gen.family, "er | ba | exh-adv | pruned-adv")->required();
  gc->add_option("--n", gen.n, "Vertices (er, ba)");
  gc->add_option("--m", gen.m, "Edges (er)");
  gc->add_option("--attach", gen.attach, "Edges per new vertex (ba)");
  gc->add_option("--d", gen.d, "Ladder depth (exh-adv, pruned-adv)");
  gc->add_flag("--weighted", gen.weighted, "Integer weights in [1, 10] (er)");
  gc->add_flag("--directed", gen.directed, "Directed edges (er)");
  gc->add_option("--seed", gen.seed, "Random seed");
  gc->add_option("--out", gen_out, "Output file (default stdout)");

  VerifyOptions verify;
  bool no_oracle = false;
  auto* vc = app.add_subcommand("verify", "Cross-check solvers against each other and the oracle");
  vc->add_option("--graph", verify.graph, "Graph file")->required();
  vc->add_option("--root", verify.root, "Root vertex");
  vc->add_option("--k", verify.k, "Paths per vertex")->required();
  vc->add_option("--algo", verify.algos, "Algorithms to run (repeatable)");
  vc->add_option("--cap", verify.cap, "Simple-path guard");
  vc->add_flag("--no-oracle", no_oracle, "Skip brute-force enumeration");
  vc->add_flag("--force", verify.force, "Ignore the simple-path guard");
  vc->add_flag("--largest-component", verify.largest_component, "Keep the largest component");

  BenchOptions bench;
  auto* bc = app.add_subcommand("bench", "Time ss-yen against bounded");
  bc->add_option("--graph", bench.graphs, "Graph files (repeatable)")->required();
  bc->add_option("--k", bench.ks, "k values (repeatable)");
  bc->add_option("--roots", bench.roots, "Number of sampled roots");
  bc->add_option("--root", bench.explicit_roots, "Explicit roots (repeatable)");
  bc->add_option("--reps", bench.repetitions, "Repetitions per root");
  bc->add_option("--seed", bench.seed, "Root sampling seed");
  bc->add_option("--timeout", bench.timeout, "Seconds per run before censoring");
  bc->add_option("--format", bench.format, "tsv | json");
  bc->add_option("--algo", bench.algos, "Algorithms (repeatable)");
  bc->add_flag("--largest-component", bench.largest_component, "Keep the largest component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*sc) return cmd_solve(solve, std::cout, std::cerr);
    if (*vc) {
      verify.oracle = !no_oracle;
      return cmd_verify(verify, std::cout, std::cerr);
    }
    if (*bc) return cmd_bench(bench, std::cout, std::cerr);
    if (*gc) {
      if (gen_out.empty()) return cmd_gen(gen, std::cout, std::cerr);
      std::ofstream file(gen_out);
      if (!file) {
        std::cerr << "error: cannot write '" << gen_out << "'\n";
        return kIoError;
      }
      return cmd_gen(gen, file, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}
