#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ksssp/path.hpp"

namespace ksssp {

/// Ranked s-t paths: simple, pairwise distinct, non-decreasing weight.
struct PathCollection {
  VertexId source = kNoVertex;
  VertexId target = kNoVertex;
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  bool empty() const { return paths.empty(); }
  bool contains(const Path& p) const;
};

/// Ordered weight list of a path collection.
struct Profile {
  std::vector<Weight> weights;

  std::size_t size() const { return weights.size(); }
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile(const PathCollection& c);
Profile profile(const std::vector<Path>& paths);

/// Lexicographic on the weight lists; a proper prefix orders before its
/// extensions.
std::weak_ordering compare_profiles(const Profile& a, const Profile& b);

std::string to_string(const Profile& p);

/// Describes the first violated collection invariant, or nullopt if `c` is a
/// well-formed ranked collection of at most `k` paths in `g`.
std::optional<std::string> check_collection(const PathCollection& c, const Graph& g,
                                            std::size_t k);

}  // namespace ksssp
