#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ultratree/labeling.hpp"
#include "ultratree/rational.hpp"
#include "ultratree/space.hpp"

namespace ultratree {

/// Index of the first point x0 with d(x0,x) <= d(y,x) for every x != x0 and
/// every y != x, i.e. x0 is a nearest neighbour of every other point. Such a
/// point exists exactly when the space is generated by a labeled star.
std::optional<std::size_t> us_witness_index(const DistanceMatrix& dist);

struct UsWitness {
  std::optional<std::string> point;

  bool present() const noexcept { return point.has_value(); }
};

UsWitness us_witness(const FiniteUltrametricSpace& space);

/// Induced subspace; points keep their order in `space`.
/// Errors: EmptySubset, UnknownPoint.
FiniteUltrametricSpace restrict(const FiniteUltrametricSpace& space, const std::set<std::string>& subset);
FiniteUltrametricSpace restrict(const FiniteUltrametricSpace& space, const std::vector<std::size_t>& indices);

/// Star centred at the witness with l(center) = 0 and l(x) = d(center, x).
/// Vertex order matches the point order. Errors: NotUS.
LabeledTree realize_as_star(const FiniteUltrametricSpace& space);

/// Recursive dendrogram encoding: the diameter plus the sorted forms of the
/// classes of the relation d(x,y) < diameter. Two finite ultrametric spaces
/// are isometric exactly when their forms are equal.
struct CanonicalForm {
  Rational diameter;
  std::vector<CanonicalForm> children;

  bool is_singleton() const noexcept { return children.empty(); }

  /// "0" for a singleton, otherwise "D[child,child,...]" with children in
  /// sorted order, e.g. "3[0,2[0,0],2[0,0]]".
  std::string str() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const FiniteUltrametricSpace& space);
CanonicalForm canonical_form(const DistanceMatrix& dist);

bool check_isometric(const FiniteUltrametricSpace& a, const FiniteUltrametricSpace& b);
bool check_isometric(const DistanceMatrix& a, const DistanceMatrix& b);

}  // namespace ultratree
