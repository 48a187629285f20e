#include "ultratree/ultrametric.hpp"

#include <algorithm>
#include <numeric>

#include "ultratree/error.hpp"

namespace ultratree {

std::optional<std::size_t> us_witness_index(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n == 0) return std::nullopt;
  // nearest[x] = min over y != x of d(y, x); the condition is d(x0,x) == nearest[x].
  std::vector<Rational> nearest(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool first = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      if (first || d(y, x) < nearest[x]) nearest[x] = d(y, x);
      first = false;
    }
  }
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = x == x0 || d(x0, x) <= nearest[x];
    if (ok) return x0;
  }
  return std::nullopt;
}

UsWitness us_witness(const FiniteUltrametricSpace& space) {
  if (auto idx = us_witness_index(space.dist())) return {space.point(*idx)};
  return {};
}

FiniteUltrametricSpace restrict(const FiniteUltrametricSpace& space, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw Error(ErrorCode::EmptySubset, "subset is empty");
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= space.size())
    throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(sorted.back()) + " out of range");
  std::vector<std::string> points;
  DistanceMatrix dist(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    points.push_back(space.point(sorted[i]));
    for (std::size_t j = 0; j < sorted.size(); ++j) dist(i, j) = space(sorted[i], sorted[j]);
  }
  return validate_ultrametric(std::move(points), std::move(dist));
}

FiniteUltrametricSpace restrict(const FiniteUltrametricSpace& space, const std::set<std::string>& subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "subset is empty");
  std::vector<std::size_t> indices;
  for (const auto& name : subset) indices.push_back(space.index_of(name));
  return restrict(space, indices);
}

LabeledTree realize_as_star(const FiniteUltrametricSpace& space) {
  const auto center = us_witness_index(space.dist());
  if (!center) throw Error(ErrorCode::NotUS, "no point is a nearest neighbour of every other point");
  std::vector<Edge> edges;
  std::vector<Rational> labels(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (x == *center) continue;
    const auto c = static_cast<VertexIndex>(*center);
    const auto v = static_cast<VertexIndex>(x);
    edges.push_back({std::min(c, v), std::max(c, v)});
    labels[x] = space(*center, x);
  }
  return LabeledTree(tree_from_index_edges(space.points(), edges), Labeling(std::move(labels)));
}

namespace {

CanonicalForm canonical_form_of(const DistanceMatrix& d, const std::vector<std::size_t>& members) {
  CanonicalForm form;
  if (members.size() == 1) return form;
  for (std::size_t a : members)
    for (std::size_t b : members) form.diameter = std::max(form.diameter, d(a, b));

  // d(x,y) < diameter is an equivalence on an ultrametric space, so each class
  // is exactly the set of points close to its first member.
  std::vector<bool> taken(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (taken[i]) continue;
    std::vector<std::size_t> part;
    for (std::size_t j = i; j < members.size(); ++j) {
      if (!taken[j] && (i == j || d(members[i], members[j]) < form.diameter)) {
        taken[j] = true;
        part.push_back(members[j]);
      }
    }
    form.children.push_back(canonical_form_of(d, part));
  }
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < form.children.size(); ++i) order.emplace_back(form.children[i].str(), i);
  std::sort(order.begin(), order.end());
  std::vector<CanonicalForm> sorted;
  sorted.reserve(order.size());
  for (const auto& [key, idx] : order) sorted.push_back(std::move(form.children[idx]));
  form.children = std::move(sorted);
  return form;
}

}  // namespace

std::string CanonicalForm::str() const {
  if (children.empty()) return diameter.str();
  std::string out = diameter.str() + "[";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += ',';
    out += children[i].str();
  }
  out += ']';
  return out;
}

CanonicalForm canonical_form(const DistanceMatrix& dist) {
  if (dist.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty space has no canonical form");
  std::vector<std::size_t> all(dist.size());
  std::iota(all.begin(), all.end(), 0);
  return canonical_form_of(dist, all);
}

CanonicalForm canonical_form(const FiniteUltrametricSpace& space) { return canonical_form(space.dist()); }

namespace {

std::vector<Rational> off_diagonal_multiset(const DistanceMatrix& d) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) out.push_back(d(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool check_isometric(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.size() != b.size()) return false;
  if (off_diagonal_multiset(a) != off_diagonal_multiset(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

bool check_isometric(const FiniteUltrametricSpace& a, const FiniteUltrametricSpace& b) {
  return check_isometric(a.dist(), b.dist());
}

}  // namespace ultratree
