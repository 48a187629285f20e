#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ultratree {

/// Dense index of a vertex inside one Tree. External code names vertices by
/// string; Tree::index_of and Tree::name convert between the two.
using VertexIndex = std::uint32_t;

struct Edge {
  VertexIndex a;
  VertexIndex b;  // a < b always

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple tree. Only constructible through validate_tree (or the
/// enumeration, which produces valid trees by construction), so every
/// instance is connected and acyclic with |E| = |V| - 1. Immutable.
class Tree {
 public:
  std::size_t order() const noexcept { return names_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::string& name(VertexIndex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<VertexIndex> find(std::string_view name) const;
  /// Throws Error{UnknownVertex}.
  VertexIndex index_of(std::string_view name) const;

  std::span<const VertexIndex> neighbors(VertexIndex v) const { return adjacency_.at(v); }
  /// Sorted, each normalized to a < b.
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool adjacent(VertexIndex u, VertexIndex v) const;

  /// Vertex names and edges written as "a-b" in index order; used as a stable
  /// sort key for reports.
  std::string key() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  friend Tree validate_tree(std::vector<std::string>, std::span<const std::pair<std::string, std::string>>);
  friend Tree tree_from_index_edges(std::vector<std::string>, std::span<const Edge>);

  Tree(std::vector<std::string> names, std::vector<Edge> edges);

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::unordered_map<std::string, VertexIndex> lookup_;
};

/// Validates a vertex/edge description. Vertex order is preserved as the index
/// order. Errors: Empty, BadEdge (self-loop or unknown endpoint),
/// HasCycle (duplicate edge, too many edges, or a cycle), NotConnected,
/// InvalidArgument (duplicate vertex name).
Tree validate_tree(std::vector<std::string> vertices,
                   std::span<const std::pair<std::string, std::string>> edges);

/// Same checks as validate_tree for edges given by index.
Tree tree_from_index_edges(std::vector<std::string> vertices, std::span<const Edge> edges);

/// Vertex sequence (u, ..., v) of the unique path. Errors: UnknownVertex, SamePoint.
std::vector<VertexIndex> unique_path(const Tree& tree, VertexIndex u, VertexIndex v);
std::vector<std::string> unique_path(const Tree& tree, std::string_view u, std::string_view v);

std::size_t degree(const Tree& tree, VertexIndex v);
std::size_t degree(const Tree& tree, std::string_view v);

/// Vertices of degree >= 2, ascending by index.
std::vector<VertexIndex> high_degree_vertices(const Tree& tree);

/// Edge count of a longest path (0 for the order-1 tree). Two BFS sweeps.
std::size_t longest_path_length(const Tree& tree);

/// BFS hop distance from `source` to every vertex.
std::vector<std::size_t> hop_distances(const Tree& tree, VertexIndex source);

enum class TreeTag { Star, DoubleStar, Other };

std::string_view tree_tag_name(TreeTag tag) noexcept;

struct TreeClass {
  TreeTag tag = TreeTag::Star;
  std::vector<VertexIndex> centers;  // the degree >= 2 vertices when tag != Other
};

TreeClass classify(const Tree& tree);

/// Precomputed vertex lists for the unique path between every ordered pair.
/// Lets the harness evaluate path maxima without re-walking the tree.
class PathTable {
 public:
  explicit PathTable(const Tree& tree);

  std::size_t order() const noexcept { return order_; }
  /// Vertices on the path from u to v inclusive; {u} when u == v.
  std::span<const VertexIndex> path(VertexIndex u, VertexIndex v) const {
    const std::size_t slot = u * order_ + v;
    return {vertices_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
  }

 private:
  std::size_t order_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexIndex> vertices_;
};

inline constexpr int kDefaultOrderCap = 8;

/// All labeled trees on `order` vertices named "v1".."vn", indexed by Prüfer
/// sequence rank. at(i) is independent of every other index, so disjoint
/// ranges can be decoded concurrently.
class TreeEnumeration {
 public:
  /// Errors: InvalidArgument (order < 1), CapExceeded (order > cap).
  explicit TreeEnumeration(int order, int cap = kDefaultOrderCap);

  int order() const noexcept { return order_; }
  /// order^(order-2), or 1 for order <= 2.
  std::uint64_t size() const noexcept { return count_; }
  Tree at(std::uint64_t index) const;
  /// Prüfer sequence for a rank, most significant position first.
  std::vector<VertexIndex> sequence(std::uint64_t index) const;

  class iterator {
   public:
    using value_type = Tree;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const TreeEnumeration* owner, std::uint64_t index) : owner_(owner), index_(index) {}

    Tree operator*() const { return owner_->at(index_); }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { auto copy = *this; ++index_; return copy; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const TreeEnumeration* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  int order_;
  std::uint64_t count_;
  std::vector<std::string> names_;
};

/// Isomorphism-invariant encoding of the unlabeled shape: nested parentheses
/// rooted at the centre (the lesser encoding when there are two centres).
/// Equal keys exactly when the trees are isomorphic.
std::string tree_shape_key(const Tree& tree);

/// Number of distinct shapes among the labeled trees of one order.
std::size_t count_tree_shapes(int order, int cap = kDefaultOrderCap);

/// Cayley count n^(n-2) with the order-1 and order-2 cases equal to 1.
std::uint64_t labeled_tree_count(int order) noexcept;

}  // namespace ultratree
