#pragma once

#include <optional>
#include <vector>

#include "coconvex/geometry.hpp"
#include "coconvex/scalar.hpp"

namespace coconvex {

/// A bounded convex polytope held by its minimal vertex list, sorted
/// lexicographically. Two polytopes are equal iff their vertex lists are.
/// Lower-dimensional polytopes are ordinary values with volume zero.
class Polytope {
 public:
  Eigen::Index dim() const { return dim_; }
  const PointList& vertices() const { return vertices_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }

  /// Facet inequalities (normal·x >= offset); empty unless full-dimensional.
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const Vector& p) const;

  friend bool operator==(const Polytope& a, const Polytope& b);
  friend Polytope convex_hull(PointList points);

 private:
  Polytope() = default;

  Eigen::Index dim_ = 0;
  int affine_dim_ = 0;
  PointList vertices_;
  std::vector<Facet> facets_;
};

/// Minimal canonical vertex set of conv(points).
Polytope convex_hull(PointList points);

/// Exact n-dimensional volume, by a pulling triangulation of the boundary.
Scalar volume(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// t·P for t > 0.
Polytope scale(const Polytope& p, const Scalar& t);

Polytope translate(const Polytope& p, const Vector& v);

/// P ∩ {x : normal·x <= offset}; nullopt when the intersection is empty.
std::optional<Polytope> clip(const Polytope& p, const Hyperplane& h);

/// Orthogonal projection onto h, as a polytope in the ambient space.
Polytope project_onto(const Polytope& p, const Hyperplane& h);

/// max over P of u·x.
Scalar support(const Polytope& p, const Vector& u);

/// Axis-aligned bounding box corners (lo, hi).
std::pair<Vector, Vector> bounding_box(const Polytope& p);

/// The box [lo, hi] as a polytope.
Polytope box(const Vector& lo, const Vector& hi);

}  // namespace coconvex
