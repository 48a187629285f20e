#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultratree/rational.hpp"
#include "ultratree/space.hpp"
#include "ultratree/tree.hpp"

namespace ultratree {

/// Vertex labels, indexed by the owning tree's VertexIndex.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](VertexIndex v) const { return values_.at(v); }
  std::span<const Rational> values() const noexcept { return values_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Rational> values_;
};

class LabeledTree {
 public:
  /// Errors: InvalidArgument when the labeling does not cover exactly V(tree).
  LabeledTree(Tree tree, Labeling labeling);

  const Tree& tree() const noexcept { return tree_; }
  const Labeling& labeling() const noexcept { return labeling_; }
  const Rational& label(VertexIndex v) const { return labeling_[v]; }

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  Tree tree_;
  Labeling labeling_;
};

/// Every edge has an endpoint with a strictly positive label.
bool is_nondegenerate(const Tree& tree, std::span<const Rational> labels);
bool is_nondegenerate(const LabeledTree& lt);

/// Path-maximum matrix: 0 on the diagonal, otherwise the largest label on the
/// unique path. No validity check; degenerate labelings give zero entries off
/// the diagonal.
void path_max_matrix(const PathTable& paths, std::span<const Rational> labels, DistanceMatrix& out);
DistanceMatrix path_max_matrix(const PathTable& paths, std::span<const Rational> labels);
DistanceMatrix raw_distance_matrix(const LabeledTree& lt);

/// The ultrametric space (V(T), d_l). Errors: DegenerateLabeling.
FiniteUltrametricSpace build_ultrametric(const LabeledTree& lt);

/// `partial` where defined, `fill` elsewhere.
/// Errors: UnknownVertex, InvalidArgument (fill == 0), DegenerateResult.
Labeling extend_labeling(const Tree& tree, const std::map<std::string, Rational>& partial,
                         Rational fill);

/// Labels placed along the five vertices of a four-edge path, and the label
/// given to every other vertex, in the construction that forces a non-US space.
inline const std::array<Rational, 5> kLongPathPattern{2, 2, 3, 2, 2};
inline const Rational kLongPathFill{2};

/// First five vertices of the path between the lexicographically least pair
/// (u < v by index) at maximal hop distance. Errors: NoLongPath.
std::vector<VertexIndex> counterexample_path(const Tree& tree);

/// kLongPathPattern on counterexample_path(tree), kLongPathFill elsewhere.
/// Errors: NoLongPath (longest path shorter than four edges).
LabeledTree counterexample_labeling(const Tree& tree);

inline constexpr std::uint64_t kDefaultLabelingBudget = 1ull << 24;

/// All |values|^n labelings of a tree in mixed-radix order (vertex 0 is the
/// most significant digit). `values` is treated as a set.
class LabelingEnumeration {
 public:
  /// Errors: InvalidArgument (no values), BudgetExceeded.
  LabelingEnumeration(const Tree& tree, std::vector<Rational> values,
                      std::uint64_t budget = kDefaultLabelingBudget);

  std::uint64_t size() const noexcept { return count_; }
  std::span<const Rational> values() const noexcept { return values_; }

  Labeling at(std::uint64_t index) const;
  /// Writes the labeling of rank `index` into `out` (size == tree order).
  void fill(std::uint64_t index, std::span<Rational> out) const;

  /// Visits labelings in rank order; fn(rank, labels). Skips degenerate ones
  /// when `nondegenerate_only`.
  template <class Fn>
  void for_each(bool nondegenerate_only, Fn&& fn) const {
    std::vector<std::size_t> digits(order_, 0);
    std::vector<Rational> labels(order_, values_.front());
    for (std::uint64_t rank = 0; rank < count_; ++rank) {
      if (!nondegenerate_only || nondegenerate_digits(digits)) fn(rank, std::span<const Rational>(labels));
      for (std::size_t pos = order_; pos-- > 0;) {
        if (++digits[pos] < values_.size()) {
          labels[pos] = values_[digits[pos]];
          break;
        }
        digits[pos] = 0;
        labels[pos] = values_.front();
      }
    }
  }

  /// Materialized list, in rank order.
  std::vector<Labeling> all(bool nondegenerate_only) const;

 private:
  bool nondegenerate_digits(const std::vector<std::size_t>& digits) const;

  std::size_t order_;
  std::vector<Edge> edges_;
  std::vector<Rational> values_;
  std::uint64_t count_;
  bool has_zero_;
};

/// Normalizes a value list into the set used by the enumerations: sorted,
/// duplicates removed.
std::vector<Rational> normalize_values(std::vector<Rational> values);

/// |values|^order, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent,
                                           std::uint64_t limit);

}  // namespace ultratree
