#pragma once

#include <optional>
#include <vector>

#include "coconvex/cone.hpp"
#include "coconvex/geometry.hpp"
#include "coconvex/polytope.hpp"

namespace coconvex {

class CoconvexBody;

/// A = conv(apexes) + C, the closed convex complement of a coconvex body.
/// Apexes are the vertices of A in lexicographic order.
class CFullSet {
 public:
  const PolyhedralCone& cone() const { return cone_; }
  const PointList& apexes() const { return apexes_; }
  /// Facet inequalities normal·x >= offset; offsets are never negative.
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const Vector& p) const;

  friend bool operator==(const CFullSet& a, const CFullSet& b);

 private:
  friend class CoconvexBody;
  friend CoconvexBody make_coconvex(const PolyhedralCone& c, const PointList& apexes);
  friend CoconvexBody scale(const CoconvexBody& k, const Scalar& t);
  CFullSet(PolyhedralCone cone, PointList apexes, std::vector<Facet> facets)
      : cone_(std::move(cone)), apexes_(std::move(apexes)), facets_(std::move(facets)) {}

  PolyhedralCone cone_;
  PointList apexes_;
  std::vector<Facet> facets_;
};

/// K = closure(C ∖ A) for a C-full set A whose complement in C is bounded,
/// nonempty and of positive volume.
class CoconvexBody {
 public:
  const PolyhedralCone& cone() const { return complement_.cone(); }
  const CFullSet& complement() const { return complement_; }
  const PointList& apexes() const { return complement_.apexes(); }
  Eigen::Index dim() const { return cone().dim(); }

  /// Exact membership in the closed body.
  bool contains(const Vector& p) const;

  friend CoconvexBody make_coconvex(const PolyhedralCone& c, const PointList& apexes);
  friend CoconvexBody scale(const CoconvexBody& k, const Scalar& t);
  friend Scalar volume(const CoconvexBody& k);

 private:
  CoconvexBody(CFullSet complement, Scalar volume) : complement_(std::move(complement)), volume_(std::move(volume)) {}

  CFullSet complement_;
  Scalar volume_;
};

/// Validating constructor. Throws ApexOutsideCone, ComplementNotBounded,
/// BodyEmpty or BodyZeroVolume.
CoconvexBody make_coconvex(const PolyhedralCone& c, const PointList& apexes);

/// V_n(K), equal to vol(C ∩ H⁺) - vol(cap_H(K)) for any admissible H.
Scalar volume(const CoconvexBody& k);

/// The same volume through an explicit truncating hyperplane.
Scalar volume_via(const CoconvexBody& k, const Hyperplane& h);

/// K1 ⊕ K2 = C ∖ (C∖K1 + C∖K2).
CoconvexBody oplus(const CoconvexBody& k1, const CoconvexBody& k2);

CoconvexBody scale(const CoconvexBody& k, const Scalar& t);

/// (1-λ)K1 ⊕ λK2 for λ in [0, 1]; the endpoints return the inputs.
CoconvexBody combine(const Scalar& lambda, const CoconvexBody& k1, const CoconvexBody& k2);

/// Normal from section_normal(C); offset twice the largest apex value, so
/// every body and the origin lie strictly inside H⁺.
Hyperplane choose_hyperplane(const PolyhedralCone& c, const std::vector<CoconvexBody>& bodies);

/// cap_H(K) = H⁺ ∩ (C ∖ K) = A ∩ H⁺.
Polytope build_cap(const CoconvexBody& k, const Hyperplane& h);

/// α > 0 with K1 = αK2, if one exists.
std::optional<Scalar> detect_homothety(const CoconvexBody& k1, const CoconvexBody& k2);

bool equals(const CoconvexBody& k1, const CoconvexBody& k2);
inline bool operator==(const CoconvexBody& a, const CoconvexBody& b) { return equals(a, b); }

}  // namespace coconvex
