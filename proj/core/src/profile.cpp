#include "ksssp/profile.hpp"

#include <algorithm>
#include <unordered_set>

namespace ksssp {

bool PathCollection::contains(const Path& p) const {
  return std::find(paths.begin(), paths.end(), p) != paths.end();
}

Profile profile(const std::vector<Path>& paths) {
  Profile out;
  out.weights.reserve(paths.size());
  for (const Path& p : paths) out.weights.push_back(p.weight());
  std::sort(out.weights.begin(), out.weights.end());
  return out;
}

Profile profile(const PathCollection& c) { return profile(c.paths); }

std::weak_ordering compare_profiles(const Profile& a, const Profile& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.weights[i] < b.weights[i]) return std::weak_ordering::less;
    if (b.weights[i] < a.weights[i]) return std::weak_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string to_string(const Profile& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.weights.size(); ++i) {
    if (i) out += ", ";
    out += format_weight(p.weights[i]);
  }
  return out + "]";
}

std::optional<std::string> check_collection(const PathCollection& c, const Graph& g,
                                            std::size_t k) {
  if (c.size() > k) return "holds " + std::to_string(c.size()) + " paths, more than k";
  std::unordered_set<Path, PathKeyHash, PathSequenceEqual> seen;
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const Path& p = c.paths[i];
    const std::string where = "path #" + std::to_string(i + 1) + " (" + render_path(p) + ")";
    if (p.first() != c.source || p.last() != c.target) return where + " has wrong endpoints";
    if (!p.is_simple()) return where + " is not simple";
    auto vs = p.vertices();
    Weight sum = 0;
    for (std::size_t j = 1; j < vs.size(); ++j) {
      auto w = g.edge_weight(vs[j - 1], vs[j]);
      if (!w) return where + " uses a missing edge";
      sum += *w;
    }
    if (sum != p.weight()) return where + " has a stale cached weight";
    if (!seen.insert(p).second) return where + " is a duplicate";
    if (i > 0 && p.weight() < c.paths[i - 1].weight()) return where + " breaks weight order";
  }
  return std::nullopt;
}

}  // namespace ksssp
