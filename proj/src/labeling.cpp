#include "ultratree/labeling.hpp"

#include <algorithm>

#include "ultratree/error.hpp"

namespace ultratree {

LabeledTree::LabeledTree(Tree tree, Labeling labeling)
    : tree_(std::move(tree)), labeling_(std::move(labeling)) {
  if (labeling_.size() != tree_.order())
    throw Error(ErrorCode::InvalidArgument, "labeling covers " + std::to_string(labeling_.size()) +
                                                " vertices, tree has " + std::to_string(tree_.order()));
}

bool is_nondegenerate(const Tree& tree, std::span<const Rational> labels) {
  return std::ranges::all_of(tree.edges(), [&](const Edge& e) {
    return !labels[e.a].is_zero() || !labels[e.b].is_zero();
  });
}

bool is_nondegenerate(const LabeledTree& lt) { return is_nondegenerate(lt.tree(), lt.labeling().values()); }

void path_max_matrix(const PathTable& paths, std::span<const Rational> labels, DistanceMatrix& out) {
  const std::size_t n = paths.order();
  if (out.size() != n) out = DistanceMatrix(n);
  for (VertexIndex u = 0; u < n; ++u) {
    out(u, u) = Rational{};
    for (VertexIndex v = u + 1; v < n; ++v) {
      Rational best{};
      for (VertexIndex w : paths.path(u, v)) best = std::max(best, labels[w]);
      out(u, v) = best;
      out(v, u) = best;
    }
  }
}

DistanceMatrix path_max_matrix(const PathTable& paths, std::span<const Rational> labels) {
  DistanceMatrix out(paths.order());
  path_max_matrix(paths, labels, out);
  return out;
}

DistanceMatrix raw_distance_matrix(const LabeledTree& lt) {
  return path_max_matrix(PathTable(lt.tree()), lt.labeling().values());
}

FiniteUltrametricSpace build_ultrametric(const LabeledTree& lt) {
  for (const Edge& e : lt.tree().edges()) {
    if (lt.label(e.a).is_zero() && lt.label(e.b).is_zero())
      throw Error(ErrorCode::DegenerateLabeling, "both endpoints of edge {" + lt.tree().name(e.a) +
                                                     "," + lt.tree().name(e.b) + "} are labeled 0");
  }
  return validate_ultrametric(lt.tree().names(), raw_distance_matrix(lt));
}

Labeling extend_labeling(const Tree& tree, const std::map<std::string, Rational>& partial,
                         Rational fill) {
  if (fill.is_zero()) throw Error(ErrorCode::InvalidArgument, "fill label must be positive");
  std::vector<Rational> values(tree.order(), fill);
  for (const auto& [name, value] : partial) values[tree.index_of(name)] = value;
  for (const Edge& e : tree.edges()) {
    if (values[e.a].is_zero() && values[e.b].is_zero())
      throw Error(ErrorCode::DegenerateResult,
                  "edge {" + tree.name(e.a) + "," + tree.name(e.b) + "} would have both labels 0");
  }
  return Labeling(std::move(values));
}

std::vector<VertexIndex> counterexample_path(const Tree& tree) {
  const std::size_t n = tree.order();
  std::size_t diameter = 0;
  VertexIndex best_u = 0;
  VertexIndex best_v = 0;
  for (VertexIndex u = 0; u < n; ++u) {
    const auto hops = hop_distances(tree, u);
    for (VertexIndex v = u + 1; v < n; ++v) {
      if (hops[v] > diameter) {
        diameter = hops[v];
        best_u = u;
        best_v = v;
      }
    }
  }
  if (diameter < 4)
    throw Error(ErrorCode::NoLongPath,
                "longest path has " + std::to_string(diameter) + " edges; at least 4 are needed");
  auto path = unique_path(tree, best_u, best_v);
  path.resize(kLongPathPattern.size());
  return path;
}

LabeledTree counterexample_labeling(const Tree& tree) {
  const auto path = counterexample_path(tree);
  std::map<std::string, Rational> partial;
  for (std::size_t i = 0; i < path.size(); ++i) partial.emplace(tree.name(path[i]), kLongPathPattern[i]);
  Labeling labeling = extend_labeling(tree, partial, kLongPathFill);
  return LabeledTree(tree, std::move(labeling));
}

std::vector<Rational> normalize_values(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
  }
  if (result > limit) return std::nullopt;
  return result;
}

LabelingEnumeration::LabelingEnumeration(const Tree& tree, std::vector<Rational> values,
                                         std::uint64_t budget)
    : order_(tree.order()),
      edges_(tree.edges().begin(), tree.edges().end()),
      values_(normalize_values(std::move(values))) {
  if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "label value set is empty");
  auto count = checked_power(values_.size(), order_, budget);
  if (!count)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(values_.size()) + "^" + std::to_string(order_) +
                                               " labelings exceed the budget of " + std::to_string(budget));
  count_ = *count;
  has_zero_ = values_.front().is_zero();
}

void LabelingEnumeration::fill(std::uint64_t index, std::span<Rational> out) const {
  if (index >= count_) throw Error(ErrorCode::InvalidArgument, "labeling rank out of range");
  for (std::size_t pos = order_; pos-- > 0;) {
    out[pos] = values_[index % values_.size()];
    index /= values_.size();
  }
}

Labeling LabelingEnumeration::at(std::uint64_t index) const {
  std::vector<Rational> labels(order_);
  fill(index, labels);
  return Labeling(std::move(labels));
}

bool LabelingEnumeration::nondegenerate_digits(const std::vector<std::size_t>& digits) const {
  if (!has_zero_) return true;
  return std::ranges::none_of(edges_, [&](const Edge& e) { return digits[e.a] == 0 && digits[e.b] == 0; });
}

std::vector<Labeling> LabelingEnumeration::all(bool nondegenerate_only) const {
  std::vector<Labeling> out;
  for_each(nondegenerate_only, [&](std::uint64_t, std::span<const Rational> labels) {
    out.emplace_back(std::vector<Rational>(labels.begin(), labels.end()));
  });
  return out;
}

}  // namespace ultratree
