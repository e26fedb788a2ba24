#include "coconvex/coconvex.hpp"

#include <algorithm>

#include "coconvex/error.hpp"

namespace coconvex {

namespace {

void require_same_cone(const PolyhedralCone& a, const PolyhedralCone& b) {
  if (!(a == b)) throw Error(ErrorCode::ConeMismatch, "bodies live on different cones");
}

Scalar max_apex_value(const PointList& apexes, const Vector& u) {
  Scalar best = u.dot(apexes.front());
  for (const auto& p : apexes) best = std::max(best, Scalar(u.dot(p)));
  return best;
}

Polytope cap_of(const PolyhedralCone& c, const PointList& apexes, const Hyperplane& h) {
  require_dim(h.normal, c.dim(), "hyperplane");
  if (!in_dual_interior(c, h.normal)) throw Error(ErrorCode::SectionNotCompact, "normal is not in the dual interior");
  PointList pts;
  pts.reserve(apexes.size() * (c.generators().size() + 1));
  for (const auto& p : apexes) {
    const Scalar gap = -h.evaluate(p);
    if (gap <= 0) throw Error(ErrorCode::HyperplaneTooLow, "apex is not strictly inside H+");
    pts.push_back(p);
    for (const auto& g : c.generators()) pts.push_back(p + g * Scalar(gap / h.normal.dot(g)));
  }
  return convex_hull(std::move(pts));
}

Hyperplane default_hyperplane(const PolyhedralCone& c, const PointList& apexes) {
  const Vector u = section_normal(c);
  return Hyperplane(u, 2 * max_apex_value(apexes, u));
}

}  // namespace

bool CFullSet::contains(const Vector& p) const {
  require_dim(p, cone_.dim(), "point");
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.satisfied_by(p); });
}

bool operator==(const CFullSet& a, const CFullSet& b) {
  return a.cone_ == b.cone_ && a.apexes_.size() == b.apexes_.size() &&
         std::equal(a.apexes_.begin(), a.apexes_.end(), b.apexes_.begin(), same);
}

bool CoconvexBody::contains(const Vector& p) const {
  if (!coconvex::contains(cone(), p)) return false;
  const auto& facets = complement_.facets();
  return std::any_of(facets.begin(), facets.end(),
                     [&](const Facet& f) { return f.offset > 0 && f.normal.dot(p) <= f.offset; });
}

CoconvexBody make_coconvex(const PolyhedralCone& c, const PointList& apexes) {
  if (apexes.empty()) throw Error(ErrorCode::EmptyInput, "body without apexes");
  PointList pts = apexes;
  for (const auto& p : pts) {
    require_dim(p, c.dim(), "apex");
    if (!contains(c, p)) throw Error(ErrorCode::ApexOutsideCone, "an apex lies outside the cone");
  }
  canonicalize(pts);

  auto facets = enumerate_facets(pts, c.generators(), c.dim());
  PointList minimal;
  for (const auto& p : pts) {
    if (tight_rank(facets, p) == c.dim()) minimal.push_back(p);
  }

  bool proper = false;
  for (const auto& f : facets) {
    if (f.offset <= 0) continue;
    proper = true;
    if (!in_dual_interior(c, f.normal)) {
      throw Error(ErrorCode::ComplementNotBounded, "a facet of the complement has its normal outside int C*");
    }
  }
  if (!proper) throw Error(ErrorCode::BodyEmpty, "the complement is the whole cone");

  const Hyperplane h = default_hyperplane(c, minimal);
  const Scalar vol = volume(truncate(c, h)) - volume(cap_of(c, minimal, h));
  if (vol <= 0) throw Error(ErrorCode::BodyZeroVolume);
  return CoconvexBody(CFullSet(c, std::move(minimal), std::move(facets)), vol);
}

Scalar volume(const CoconvexBody& k) { return k.volume_; }

Scalar volume_via(const CoconvexBody& k, const Hyperplane& h) {
  return volume(truncate(k.cone(), h)) - volume(build_cap(k, h));
}

CoconvexBody oplus(const CoconvexBody& k1, const CoconvexBody& k2) {
  require_same_cone(k1.cone(), k2.cone());
  PointList sums;
  sums.reserve(k1.apexes().size() * k2.apexes().size());
  for (const auto& a : k1.apexes()) {
    for (const auto& b : k2.apexes()) sums.push_back(a + b);
  }
  return make_coconvex(k1.cone(), sums);
}

CoconvexBody scale(const CoconvexBody& k, const Scalar& t) {
  if (t <= 0) throw Error(ErrorCode::NonpositiveScale, "scale factor " + to_string(t));
  PointList apexes;
  for (const auto& p : k.apexes()) apexes.push_back(t * p);
  std::vector<Facet> facets = k.complement().facets();
  for (auto& f : facets) f.offset *= t;
  Scalar factor(1);
  for (Eigen::Index i = 0; i < k.dim(); ++i) factor *= t;
  return CoconvexBody(CFullSet(k.cone(), std::move(apexes), std::move(facets)), k.volume_ * factor);
}

CoconvexBody combine(const Scalar& lambda, const CoconvexBody& k1, const CoconvexBody& k2) {
  if (lambda < 0 || lambda > 1) throw Error(ErrorCode::LambdaOutOfRange, "lambda " + to_string(lambda));
  require_same_cone(k1.cone(), k2.cone());
  if (lambda == 0) return k1;
  if (lambda == 1) return k2;
  return oplus(scale(k1, 1 - lambda), scale(k2, lambda));
}

Hyperplane choose_hyperplane(const PolyhedralCone& c, const std::vector<CoconvexBody>& bodies) {
  if (bodies.empty()) throw Error(ErrorCode::EmptyInput, "no bodies to bound");
  PointList apexes;
  for (const auto& k : bodies) {
    require_same_cone(c, k.cone());
    apexes.insert(apexes.end(), k.apexes().begin(), k.apexes().end());
  }
  return default_hyperplane(c, apexes);
}

Polytope build_cap(const CoconvexBody& k, const Hyperplane& h) { return cap_of(k.cone(), k.apexes(), h); }

std::optional<Scalar> detect_homothety(const CoconvexBody& k1, const CoconvexBody& k2) {
  require_same_cone(k1.cone(), k2.cone());
  if (k1.apexes().size() != k2.apexes().size()) return std::nullopt;
  // Scaling by α > 0 preserves lexicographic order, so the minima correspond.
  const Vector& a = k1.apexes().front();
  const Vector& b = k2.apexes().front();
  Eigen::Index i = 0;
  while (i < b.size() && b(i) == 0) ++i;
  if (i == b.size()) return std::nullopt;
  const Scalar alpha = a(i) / b(i);
  if (alpha <= 0) return std::nullopt;
  for (std::size_t j = 0; j < k1.apexes().size(); ++j) {
    if (!same(k1.apexes()[j], Vector(alpha * k2.apexes()[j]))) return std::nullopt;
  }
  return alpha;
}

bool equals(const CoconvexBody& k1, const CoconvexBody& k2) { return k1.complement() == k2.complement(); }

}  // namespace coconvex
