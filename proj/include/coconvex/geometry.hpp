#pragma once

#include <vector>

#include "coconvex/scalar.hpp"

namespace coconvex {

/// The hyperplane {x : normal·x = offset}. Its closed positive side H⁺ is
/// {x : normal·x <= offset}, the side containing the origin whenever
/// offset >= 0.
struct Hyperplane {
  Vector normal;
  Scalar offset;

  Hyperplane(Vector normal, Scalar offset);

  Eigen::Index dim() const { return normal.size(); }
  Scalar evaluate(const Vector& p) const;  // normal·p - offset
  Hyperplane negated() const;
  /// Orthogonal projection of `p` onto the hyperplane.
  Vector project(const Vector& p) const;
};

bool operator==(const Hyperplane& a, const Hyperplane& b);

enum class Side { Negative, On, Positive };

Side side_of(const Hyperplane& h, const Vector& p);

/// Determinant of the square matrix whose columns are `columns`.
Scalar determinant(const PointList& columns);

/// Dimension of the affine hull; throws EmptyInput on an empty list.
int affine_dimension(const PointList& points);

/// A facet inequality normal·x >= offset. Normals are primitive integer
/// vectors, so facets compare structurally.
struct Facet {
  Vector normal;
  Scalar offset;

  bool tight_at(const Vector& p) const { return normal.dot(p) == offset; }
  bool satisfied_by(const Vector& p) const { return normal.dot(p) >= offset; }
};

/// Irredundant facet inequalities of conv(points) + cone(rays), computed by
/// the double description method on the homogenized generators.
/// Precondition: `points` is nonempty and the set is full-dimensional in
/// R^dim. The result is sorted and free of duplicates.
std::vector<Facet> enumerate_facets(const PointList& points, const PointList& rays, Eigen::Index dim);

/// Rank of the normals of the facets tight at `p`.
Eigen::Index tight_rank(const std::vector<Facet>& facets, const Vector& p);

}  // namespace coconvex
