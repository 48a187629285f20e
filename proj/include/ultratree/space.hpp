#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ultratree/rational.hpp"

namespace ultratree {

/// Dense square matrix of exact distances, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n) {}

  /// Errors: InvalidArgument when rows are not all of length rows.size().
  static DistanceMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

enum class AxiomKind { Symmetry, Positivity, StrongTriangle };

/// First axiom failure found, scanning symmetry and positivity over ordered
/// pairs before triples. `k` is meaningful for StrongTriangle only.
struct AxiomViolation {
  AxiomKind kind;
  std::size_t i;
  std::size_t j;
  std::size_t k = 0;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

std::optional<AxiomViolation> find_axiom_violation(const DistanceMatrix& dist);

/// Validated finite ultrametric space. Immutable.
class FiniteUltrametricSpace {
 public:
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& point(std::size_t i) const { return points_.at(i); }
  const DistanceMatrix& dist() const noexcept { return dist_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return dist_(i, j); }

  /// Errors: UnknownPoint.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const FiniteUltrametricSpace&, const FiniteUltrametricSpace&) = default;

 private:
  friend FiniteUltrametricSpace validate_ultrametric(std::vector<std::string>, DistanceMatrix);

  FiniteUltrametricSpace(std::vector<std::string> points, DistanceMatrix dist)
      : points_(std::move(points)), dist_(std::move(dist)) {}

  std::vector<std::string> points_;
  DistanceMatrix dist_;
};

/// Exhaustive O(n^3) axiom check. Errors: InvalidArgument (shape mismatch,
/// empty or duplicate points), SymmetryViolation, PositivityViolation,
/// StrongTriangleViolation; messages name the offending points.
FiniteUltrametricSpace validate_ultrametric(std::vector<std::string> points, DistanceMatrix dist);

}  // namespace ultratree
