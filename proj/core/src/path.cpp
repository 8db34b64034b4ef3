#include "ksssp/path.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace ksssp {

namespace {

constexpr std::uint64_t kEmptyKey = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t h, VertexId v) {
  std::uint64_t z = h ^ (std::uint64_t{v} + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

// Unlinks the chain iteratively; a recursive release could overflow the stack
// on long paths.
Path::Node::~Node() {
  std::shared_ptr<Node> p = std::move(parent);
  while (p && p.use_count() == 1) p = std::move(p->parent);
}

Path Path::trivial(VertexId v) {
  return Path(std::make_shared<Node>(v, 1, 0.0, mix(kEmptyKey, v), nullptr));
}

Path Path::from_vertices(const Graph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw PathError("a path needs at least one vertex");
  if (!g.contains(vertices.front())) throw PathError("vertex id out of range");
  Path p = trivial(vertices.front());
  for (std::size_t i = 1; i < vertices.size(); ++i) p = p.extend(g, vertices[i]);
  return p;
}

Path Path::extend(const Graph& g, VertexId u) const {
  auto w = g.edge_weight(last(), u);
  if (!w) {
    throw PathError("no edge (" + std::to_string(last()) + ", " + std::to_string(u) + ")");
  }
  return extend(u, *w);
}

Path Path::extend(VertexId u, Weight edge_weight) const {
  return Path(std::make_shared<Node>(u, node_->length + 1, node_->weight + edge_weight,
                                     mix(node_->key, u), node_));
}

VertexId Path::first() const {
  const Node* n = node_.get();
  while (n->parent) n = n->parent.get();
  return n->vertex;
}

std::vector<VertexId> Path::vertices() const {
  std::vector<VertexId> out(size());
  std::size_t i = out.size();
  for_each_reversed([&](VertexId v) { out[--i] = v; });
  return out;
}

Path Path::parent() const {
  if (!node_->parent) throw PathError("trivial path has no parent");
  return Path(node_->parent);
}

bool Path::contains(VertexId u) const {
  for (const Node* n = node_.get(); n != nullptr; n = n->parent.get()) {
    if (n->vertex == u) return true;
  }
  return false;
}

bool Path::is_simple() const {
  if (size() <= 1) return true;
  std::unordered_set<VertexId> seen;
  seen.reserve(size());
  for (const Node* n = node_.get(); n != nullptr; n = n->parent.get()) {
    if (!seen.insert(n->vertex).second) return false;
  }
  return true;
}

bool Path::same_sequence(const Node* x, const Node* y) {
  if (x->length != y->length || x->key != y->key) return false;
  while (x != y) {
    if (x->vertex != y->vertex) return false;
    x = x->parent.get();
    y = y->parent.get();
  }
  return true;
}

bool Path::is_prefix_of(const Path& other) const {
  if (size() > other.size()) return false;
  const Node* n = other.node_.get();
  for (std::size_t skip = other.size() - size(); skip > 0; --skip) n = n->parent.get();
  return same_sequence(n, node_.get());
}

bool operator==(const Path& a, const Path& b) {
  return Path::same_sequence(a.node_.get(), b.node_.get());
}

std::weak_ordering operator<=>(const Path& a, const Path& b) {
  if (a.weight() < b.weight()) return std::weak_ordering::less;
  if (b.weight() < a.weight()) return std::weak_ordering::greater;
  if (a.size() != b.size()) return a.size() <=> b.size();
  // Equal lengths: walk both chains back to their shared node. The last
  // mismatch seen is the first position where the sequences differ.
  const Path::Node* x = a.node_.get();
  const Path::Node* y = b.node_.get();
  std::weak_ordering result = std::weak_ordering::equivalent;
  while (x != y) {
    if (x->vertex != y->vertex) result = x->vertex <=> y->vertex;
    x = x->parent.get();
    y = y->parent.get();
  }
  return result;
}

Path concat(const Path& p1, const Path& p2, const Graph& g) {
  auto tail = p2.vertices();
  if (p1.last() != tail.front()) {
    throw PathError("concat: last vertex of the first path (" + std::to_string(p1.last()) +
                    ") differs from the first vertex of the second (" +
                    std::to_string(tail.front()) + ")");
  }
  Path out = p1;
  for (std::size_t i = 1; i < tail.size(); ++i) out = out.extend(g, tail[i]);
  return out;
}

std::string format_weight(Weight w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

std::string render_path(const Path& p) {
  std::string out = format_weight(p.weight());
  out += '\t';
  bool first = true;
  for (VertexId v : p.vertices()) {
    if (!first) out += '-';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace ksssp
