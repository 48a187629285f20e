#include "ultratree/space.hpp"

#include <algorithm>

#include "ultratree/error.hpp"

namespace ultratree {

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  DistanceMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw Error(ErrorCode::InvalidArgument,
                  "distance row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    std::copy(rows[i].begin(), rows[i].end(), &m(i, 0));
  }
  return m;
}

std::optional<AxiomViolation> find_axiom_violation(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) != d(j, i)) return AxiomViolation{AxiomKind::Symmetry, i, j};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i == j) != d(i, j).is_zero()) return AxiomViolation{AxiomKind::Positivity, i, j};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d(i, j) > std::max(d(i, k), d(k, j))) return AxiomViolation{AxiomKind::StrongTriangle, i, j, k};
  return std::nullopt;
}

std::size_t FiniteUltrametricSpace::index_of(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) throw Error(ErrorCode::UnknownPoint, "unknown point '" + name + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

FiniteUltrametricSpace validate_ultrametric(std::vector<std::string> points, DistanceMatrix dist) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "space has no points");
  if (points.size() != dist.size())
    throw Error(ErrorCode::InvalidArgument, std::to_string(points.size()) + " points but a " +
                                                std::to_string(dist.size()) + "x" +
                                                std::to_string(dist.size()) + " matrix");
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
      throw Error(ErrorCode::InvalidArgument, "duplicate point '" + *dup + "'");
  }
  if (auto v = find_axiom_violation(dist)) {
    const auto& a = points[v->i];
    const auto& b = points[v->j];
    switch (v->kind) {
      case AxiomKind::Symmetry:
        throw Error(ErrorCode::SymmetryViolation, "d(" + a + "," + b + ") != d(" + b + "," + a + ")");
      case AxiomKind::Positivity:
        throw Error(ErrorCode::PositivityViolation,
                    "d(" + a + "," + b + ") = " + dist(v->i, v->j).str());
      case AxiomKind::StrongTriangle: {
        const auto& c = points[v->k];
        throw Error(ErrorCode::StrongTriangleViolation,
                    "d(" + a + "," + b + ") > max{d(" + a + "," + c + "), d(" + c + "," + b + ")}");
      }
    }
  }
  return FiniteUltrametricSpace(std::move(points), std::move(dist));
}

}  // namespace ultratree
