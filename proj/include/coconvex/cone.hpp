#pragma once

#include <vector>

#include "coconvex/geometry.hpp"
#include "coconvex/polytope.hpp"

namespace coconvex {

/// A closed, pointed, full-dimensional polyhedral cone given by its extreme
/// rays. Rays are primitive integer vectors in lexicographic order; facet
/// normals (a·x >= 0 on the cone) are derived once at validation.
class PolyhedralCone {
 public:
  Eigen::Index dim() const { return dim_; }
  const PointList& generators() const { return generators_; }
  const PointList& facet_normals() const { return facet_normals_; }

  friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b) {
    return a.dim_ == b.dim_ && a.generators_.size() == b.generators_.size() &&
           std::equal(a.generators_.begin(), a.generators_.end(), b.generators_.begin(), same);
  }

  friend PolyhedralCone validate(const PointList& generators);

 private:
  PolyhedralCone() = default;

  Eigen::Index dim_ = 0;
  PointList generators_;
  PointList facet_normals_;
};

/// Builds a cone from raw generators: zero vectors and redundant rays are
/// dropped. Throws EmptyInput, NotFullDimensional or ContainsLine.
PolyhedralCone validate(const PointList& generators);

bool contains(const PolyhedralCone& c, const Vector& p);

/// Sum of the primitive generators, reduced to a primitive vector and
/// certified to lie in the interior of the cone.
Vector interior_direction(const PolyhedralCone& c);

/// u·g > 0 for every generator: the sections {u·x = b}, b > 0, are compact.
bool in_dual_interior(const PolyhedralCone& c, const Vector& u);

/// A normal for compact sections: interior_direction(c) when it is also in
/// the dual interior, otherwise the primitive sum of the facet normals.
Vector section_normal(const PolyhedralCone& c);

/// C ∩ {x : normal·x <= offset}.
Polytope truncate(const PolyhedralCone& c, const Hyperplane& h);

}  // namespace coconvex
