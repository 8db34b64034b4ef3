#include "ksssp/yen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ksssp {

PkspQuery::PkspQuery(VertexId s, VertexId t, std::size_t k_) : source(s), target(t), k(k_) {
  if (s == t) throw std::invalid_argument("pksp query needs source != target");
  if (k < 1) throw std::invalid_argument("pksp query needs k >= 1");
}

PathCollection YenPksp::solve(const PkspQuery& q) {
  const Graph& g = graph();
  if (!g.contains(q.source) || !g.contains(q.target)) {
    throw std::out_of_range("pksp endpoint out of range");
  }
  PathCollection out{q.source, q.target, {}};

  search_.clear_mask();
  auto first = search_.find(q.source, q.target);
  if (!first) return out;

  std::vector<std::vector<VertexId>> accepted{*first};
  out.paths.push_back(Path::from_vertices(g, *first));
  std::set<Path> candidates;

  while (out.paths.size() < q.k) {
    const std::vector<VertexId> last = accepted.back();
    Path root = Path::trivial(q.source);
    for (std::size_t i = 0; i + 1 < last.size(); ++i) {
      const VertexId spur = last[i];
      search_.clear_mask();
      for (std::size_t j = 0; j < i; ++j) search_.block_vertex(last[j]);
      for (const auto& a : accepted) {
        if (a.size() > i + 1 && std::equal(a.begin(), a.begin() + i + 1, last.begin())) {
          search_.block_edge(spur, a[i + 1]);
        }
      }
      if (auto spur_path = search_.find(spur, q.target)) {
        Path candidate = root;
        for (std::size_t j = 1; j < spur_path->size(); ++j) {
          candidate = candidate.extend(g, (*spur_path)[j]);
        }
        candidates.insert(std::move(candidate));
        const std::size_t needed = q.k - out.paths.size();
        while (candidates.size() > needed) candidates.erase(std::prev(candidates.end()));
      }
      root = root.extend(g, last[i + 1]);
    }
    if (candidates.empty()) break;
    auto best = candidates.begin();
    out.paths.push_back(*best);
    accepted.push_back(best->vertices());
    candidates.erase(best);
  }
  return out;
}

PathCollection yen_pksp(const Graph& g, const PkspQuery& query) {
  YenPksp yen(g);
  return yen.solve(query);
}

namespace {

bool same_weight(Weight a, Weight b) {
  return a == b || std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace

PathCollection reconcile_with_existing(const PathCollection& s, const PathCollection& t) {
  if (s.source != t.source || s.target != t.target) {
    throw std::logic_error("reconcile: collections have different endpoints");
  }
  if (t.empty()) return s;
  if (t.size() > s.size()) throw std::logic_error("reconcile: existing paths exceed the solution");

  std::unordered_set<Path, PathKeyHash, PathSequenceEqual> in_t(t.paths.begin(), t.paths.end());
  std::unordered_set<Path, PathKeyHash, PathSequenceEqual> in_s(s.paths.begin(), s.paths.end());
  std::vector<char> dropped(s.size(), 0);

  std::vector<Path> result;
  for (const Path& missing : t.paths) {
    if (in_s.count(missing)) continue;
    // Swap out the heaviest-ranked tied entry of s that t does not hold.
    bool swapped = false;
    for (std::size_t i = s.size(); i-- > 0;) {
      const Path& cand = s.paths[i];
      if (dropped[i] || in_t.count(cand) || !same_weight(cand.weight(), missing.weight())) continue;
      dropped[i] = 1;
      swapped = true;
      break;
    }
    if (!swapped) {
      throw std::logic_error("reconcile: existing path " + render_path(missing) +
                             " has no weight-tied counterpart in the solution");
    }
    result.push_back(missing);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!dropped[i]) result.push_back(s.paths[i]);
  }
  std::sort(result.begin(), result.end());
  return PathCollection{s.source, s.target, std::move(result)};
}

}  // namespace ksssp
