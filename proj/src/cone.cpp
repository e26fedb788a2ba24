#include "coconvex/cone.hpp"

#include <algorithm>

#include "coconvex/error.hpp"
#include "coconvex/linalg.hpp"

namespace coconvex {

PolyhedralCone validate(const PointList& generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyInput, "cone without generators");
  const Eigen::Index dim = generators.front().size();
  PointList rays;
  for (const auto& g : generators) {
    require_dim(g, dim, "generator");
    if (!g.isZero()) rays.push_back(primitive(g));
  }
  canonicalize(rays);
  if (rays.empty() || linalg::rank(linalg::columns(rays, dim)) < dim) {
    throw Error(ErrorCode::NotFullDimensional, "generators do not span R^" + std::to_string(dim));
  }

  const auto facets = enumerate_facets({Vector::Zero(dim)}, rays, dim);
  PointList normals;
  for (const auto& f : facets) normals.push_back(f.normal);
  if (normals.empty() || linalg::rank(linalg::columns(normals, dim)) < dim) {
    throw Error(ErrorCode::ContainsLine, "the cone contains a line");
  }

  PolyhedralCone cone;
  cone.dim_ = dim;
  cone.facet_normals_ = std::move(normals);
  canonicalize(cone.facet_normals_);
  for (const auto& g : rays) {
    if (tight_rank(facets, g) == dim - 1) cone.generators_.push_back(g);
  }
  return cone;
}

bool contains(const PolyhedralCone& c, const Vector& p) {
  require_dim(p, c.dim(), "point");
  return std::all_of(c.facet_normals().begin(), c.facet_normals().end(),
                     [&](const Vector& a) { return a.dot(p) >= 0; });
}

Vector interior_direction(const PolyhedralCone& c) {
  Vector u = Vector::Zero(c.dim());
  for (const auto& g : c.generators()) u += g;
  for (const auto& a : c.facet_normals()) {
    if (a.dot(u) <= 0) throw Error(ErrorCode::InteriorCertificateFailed, "generator sum lies on a facet");
  }
  return primitive(u);
}

bool in_dual_interior(const PolyhedralCone& c, const Vector& u) {
  require_dim(u, c.dim(), "direction");
  return std::all_of(c.generators().begin(), c.generators().end(), [&](const Vector& g) { return u.dot(g) > 0; });
}

Vector section_normal(const PolyhedralCone& c) {
  Vector u = interior_direction(c);
  if (in_dual_interior(c, u)) return u;
  Vector fallback = Vector::Zero(c.dim());
  for (const auto& a : c.facet_normals()) fallback += a;
  fallback = primitive(fallback);
  if (in_dual_interior(c, fallback)) return fallback;
  throw Error(ErrorCode::InteriorCertificateFailed, "no compact section normal found");
}

Polytope truncate(const PolyhedralCone& c, const Hyperplane& h) {
  require_dim(h.normal, c.dim(), "hyperplane");
  if (!in_dual_interior(c, h.normal)) throw Error(ErrorCode::SectionNotCompact, "normal is not in the dual interior");
  if (h.offset <= 0) throw Error(ErrorCode::NonpositiveOffset, "offset " + to_string(h.offset));
  PointList pts{Vector::Zero(c.dim())};
  for (const auto& g : c.generators()) pts.push_back(g * Scalar(h.offset / h.normal.dot(g)));
  return convex_hull(std::move(pts));
}

}  // namespace coconvex
