#include "ultratree/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ultratree/error.hpp"

namespace ultratree {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<std::size_t> parent;
};

std::vector<VertexIndex> bfs_parents(const Tree& tree, VertexIndex root) {
  std::vector<VertexIndex> parent(tree.order(), root);
  std::vector<bool> seen(tree.order(), false);
  std::deque<VertexIndex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop_front();
    for (VertexIndex w : tree.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return parent;
}

void check_vertex(const Tree& tree, VertexIndex v) {
  if (v >= tree.order())
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

Tree::Tree(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)), adjacency_(names_.size()) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  lookup_.reserve(names_.size());
  for (VertexIndex i = 0; i < names_.size(); ++i) lookup_.emplace(names_[i], i);
}

std::optional<VertexIndex> Tree::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Tree::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

bool Tree::adjacent(VertexIndex u, VertexIndex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::string Tree::key() const {
  std::string out;
  for (const auto& n : names_) {
    out += n;
    out += ',';
  }
  out += '|';
  for (const Edge& e : edges_) {
    out += std::to_string(e.a) + '-' + std::to_string(e.b) + ',';
  }
  return out;
}

Tree tree_from_index_edges(std::vector<std::string> vertices, std::span<const Edge> edges) {
  if (vertices.empty()) throw Error(ErrorCode::Empty, "tree has no vertices");
  const std::size_t n = vertices.size();
  {
    std::vector<std::string> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
      throw Error(ErrorCode::InvalidArgument, "duplicate vertex '" + *dup + "'");
    if (!sorted.empty() && sorted.front().empty())
      throw Error(ErrorCode::InvalidArgument, "empty vertex name");
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.a >= n || e.b >= n) throw Error(ErrorCode::BadEdge, "edge endpoint out of range");
    if (e.a == e.b) throw Error(ErrorCode::BadEdge, "self-loop at '" + vertices[e.a] + "'");
    normalized.push_back(e.a < e.b ? e : Edge{e.b, e.a});
  }

  DisjointSets sets(n);
  for (const Edge& e : normalized) {
    if (!sets.unite(e.a, e.b))
      throw Error(ErrorCode::HasCycle,
                  "edge {" + vertices[e.a] + "," + vertices[e.b] + "} closes a cycle");
  }
  // Acyclic with n-1 edges is exactly connected; fewer edges leaves components.
  if (normalized.size() != n - 1) {
    throw Error(ErrorCode::NotConnected,
                std::to_string(n - normalized.size()) + " connected components");
  }
  return Tree(std::move(vertices), std::move(normalized));
}

Tree validate_tree(std::vector<std::string> vertices,
                   std::span<const std::pair<std::string, std::string>> edges) {
  if (vertices.empty()) throw Error(ErrorCode::Empty, "tree has no vertices");
  std::unordered_map<std::string, VertexIndex> lookup;
  for (VertexIndex i = 0; i < vertices.size(); ++i) lookup.emplace(vertices[i], i);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = lookup.find(a);
    auto ib = lookup.find(b);
    if (ia == lookup.end() || ib == lookup.end())
      throw Error(ErrorCode::BadEdge,
                  "edge {" + a + "," + b + "} references unknown vertex");
    if (ia->second == ib->second) throw Error(ErrorCode::BadEdge, "self-loop at '" + a + "'");
    indexed.push_back({ia->second, ib->second});
  }
  return tree_from_index_edges(std::move(vertices), indexed);
}

std::vector<VertexIndex> unique_path(const Tree& tree, VertexIndex u, VertexIndex v) {
  check_vertex(tree, u);
  check_vertex(tree, v);
  if (u == v) throw Error(ErrorCode::SamePoint, "path endpoints coincide");
  const auto parent = bfs_parents(tree, u);
  std::vector<VertexIndex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::string> unique_path(const Tree& tree, std::string_view u, std::string_view v) {
  std::vector<std::string> out;
  for (VertexIndex w : unique_path(tree, tree.index_of(u), tree.index_of(v))) out.push_back(tree.name(w));
  return out;
}

std::size_t degree(const Tree& tree, VertexIndex v) {
  check_vertex(tree, v);
  return tree.neighbors(v).size();
}

std::size_t degree(const Tree& tree, std::string_view v) { return degree(tree, tree.index_of(v)); }

std::vector<VertexIndex> high_degree_vertices(const Tree& tree) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < tree.order(); ++v)
    if (tree.neighbors(v).size() >= 2) out.push_back(v);
  return out;
}

std::vector<std::size_t> hop_distances(const Tree& tree, VertexIndex source) {
  check_vertex(tree, source);
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(tree.order(), unseen);
  std::deque<VertexIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop_front();
    for (VertexIndex w : tree.neighbors(u)) {
      if (dist[w] != unseen) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::size_t longest_path_length(const Tree& tree) {
  const auto first = hop_distances(tree, 0);
  const auto far = static_cast<VertexIndex>(std::max_element(first.begin(), first.end()) - first.begin());
  const auto second = hop_distances(tree, far);
  return *std::max_element(second.begin(), second.end());
}

std::string_view tree_tag_name(TreeTag tag) noexcept {
  switch (tag) {
    case TreeTag::Star: return "Star";
    case TreeTag::DoubleStar: return "DoubleStar";
    case TreeTag::Other: return "Other";
  }
  return "Other";
}

TreeClass classify(const Tree& tree) {
  auto high = high_degree_vertices(tree);
  if (high.size() <= 1) return {TreeTag::Star, std::move(high)};
  if (high.size() == 2) return {TreeTag::DoubleStar, std::move(high)};
  return {TreeTag::Other, {}};
}

PathTable::PathTable(const Tree& tree) : order_(tree.order()) {
  offsets_.reserve(order_ * order_ + 1);
  offsets_.push_back(0);
  for (VertexIndex u = 0; u < order_; ++u) {
    const auto parent = bfs_parents(tree, u);
    for (VertexIndex v = 0; v < order_; ++v) {
      const std::size_t start = vertices_.size();
      for (VertexIndex w = v; w != u; w = parent[w]) vertices_.push_back(w);
      vertices_.push_back(u);
      std::reverse(vertices_.begin() + static_cast<std::ptrdiff_t>(start), vertices_.end());
      offsets_.push_back(vertices_.size());
    }
  }
}

namespace {

std::string rooted_shape(const Tree& tree, VertexIndex v, VertexIndex parent) {
  std::vector<std::string> children;
  for (VertexIndex w : tree.neighbors(v))
    if (w != parent) children.push_back(rooted_shape(tree, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

}  // namespace

std::string tree_shape_key(const Tree& tree) {
  // peel leaves until one or two vertices remain
  const std::size_t n = tree.order();
  std::vector<std::size_t> deg(n);
  std::vector<VertexIndex> layer;
  for (VertexIndex v = 0; v < n; ++v) {
    deg[v] = tree.neighbors(v).size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::vector<bool> removed(n, false);
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    for (VertexIndex leaf : layer) removed[leaf] = true;
    for (VertexIndex leaf : layer)
      for (VertexIndex w : tree.neighbors(leaf))
        if (!removed[w]) --deg[w];
    layer.clear();
    for (VertexIndex v = 0; v < n; ++v)
      if (!removed[v] && deg[v] <= 1) layer.push_back(v);
  }
  const auto none = static_cast<VertexIndex>(n);
  std::string best = rooted_shape(tree, layer.front(), none);
  if (layer.size() == 2) best = std::min(best, rooted_shape(tree, layer.back(), none));
  return best;
}

std::size_t count_tree_shapes(int order, int cap) {
  std::vector<std::string> keys;
  for (const Tree& t : TreeEnumeration(order, cap)) keys.push_back(tree_shape_key(t));
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::uint64_t labeled_tree_count(int order) noexcept {
  if (order <= 2) return 1;
  std::uint64_t count = 1;
  for (int i = 0; i < order - 2; ++i) count *= static_cast<std::uint64_t>(order);
  return count;
}

TreeEnumeration::TreeEnumeration(int order, int cap) : order_(order), count_(labeled_tree_count(order)) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "tree order must be at least 1");
  if (order > cap)
    throw Error(ErrorCode::CapExceeded,
                "order " + std::to_string(order) + " exceeds enumeration cap " + std::to_string(cap));
  for (int i = 1; i <= order; ++i) names_.push_back("v" + std::to_string(i));
}

std::vector<VertexIndex> TreeEnumeration::sequence(std::uint64_t index) const {
  const std::size_t len = order_ > 2 ? static_cast<std::size_t>(order_ - 2) : 0;
  std::vector<VertexIndex> seq(len);
  for (std::size_t i = len; i-- > 0;) {
    seq[i] = static_cast<VertexIndex>(index % static_cast<std::uint64_t>(order_));
    index /= static_cast<std::uint64_t>(order_);
  }
  return seq;
}

Tree TreeEnumeration::at(std::uint64_t index) const {
  if (index >= count_) throw Error(ErrorCode::InvalidArgument, "tree rank out of range");
  const auto n = static_cast<std::size_t>(order_);
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n > 2) {
    const auto seq = sequence(index);
    std::vector<std::size_t> deg(n, 1);
    for (VertexIndex a : seq) ++deg[a];
    for (VertexIndex a : seq) {
      VertexIndex leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.push_back({std::min(leaf, a), std::max(leaf, a)});
      --deg[leaf];
      --deg[a];
    }
    VertexIndex u = 0;
    while (deg[u] != 1) ++u;
    VertexIndex v = u + 1;
    while (deg[v] != 1) ++v;
    edges.push_back({u, v});
  }
  return tree_from_index_edges(names_, edges);
}

}  // namespace ultratree
