#pragma once

// Test-only reference computations. Nothing here calls into the library's
// hull, volume or facet code, so agreement is an independent check.

#include <algorithm>
#include <cstdint>
#include <random>

#include "coconvex/scalar.hpp"

namespace coconvex::testing {

inline Vector v2(Scalar x, Scalar y) { return make_vector({x, y}); }
inline Vector v3(Scalar x, Scalar y, Scalar z) { return make_vector({x, y, z}); }

inline Scalar cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

/// Vertices of a 2D point set, by Carathéodory: a point is redundant iff it
/// lies in a triangle (possibly degenerate) spanned by other points.
inline PointList brute_hull_2d(PointList pts) {
  canonicalize(pts);
  auto in_triangle = [](const Vector& p, const Vector& a, const Vector& b, const Vector& c) {
    const Scalar d1 = cross2(a, b, p), d2 = cross2(b, c, p), d3 = cross2(c, a, p);
    const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    if (has_neg && has_pos) return false;
    if (cross2(a, b, c) != 0) return true;
    // Degenerate triangle: p must lie on one of the segments.
    auto on_segment = [&](const Vector& s, const Vector& t) {
      return cross2(s, t, p) == 0 && std::min(s(0), t(0)) <= p(0) && p(0) <= std::max(s(0), t(0)) &&
             std::min(s(1), t(1)) <= p(1) && p(1) <= std::max(s(1), t(1));
    };
    return on_segment(a, b) || on_segment(b, c) || on_segment(a, c);
  };
  PointList out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool redundant = false;
    for (std::size_t a = 0; a < pts.size() && !redundant; ++a) {
      for (std::size_t b = a; b < pts.size() && !redundant; ++b) {
        for (std::size_t c = b; c < pts.size() && !redundant; ++c) {
          if (a == i || b == i || c == i) continue;
          redundant = in_triangle(pts[i], pts[a], pts[b], pts[c]);
        }
      }
    }
    if (!redundant) out.push_back(pts[i]);
  }
  return out;
}

/// Shoelace area of a convex polygon given by its vertices in any order.
inline Scalar shoelace(PointList poly) {
  if (poly.size() < 3) return Scalar(0);
  Vector c = Vector::Zero(2);
  for (const auto& p : poly) c += p;
  c /= Scalar(static_cast<long>(poly.size()));
  auto half = [&](const Vector& p) { return (p(1) - c(1) > 0 || (p(1) == c(1) && p(0) > c(0))) ? 0 : 1; };
  std::sort(poly.begin(), poly.end(), [&](const Vector& a, const Vector& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross2(c, a, b) > 0;
  });
  Scalar twice(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += a(0) * b(1) - a(1) * b(0);
  }
  return abs(twice) / 2;
}

/// Area of a 2D coconvex body from its complement's apexes alone: the body
/// is the polygon origin → apexes in angular order, since in 2D the extreme
/// apexes of a valid body sit on the two boundary rays.
inline Scalar body_area_2d(PointList apexes) {
  const Vector origin = Vector::Zero(2);
  std::sort(apexes.begin(), apexes.end(),
            [&](const Vector& a, const Vector& b) { return cross2(origin, a, b) > 0; });
  Scalar twice(0);
  PointList ring{origin};
  ring.insert(ring.end(), apexes.begin(), apexes.end());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % ring.size()];
    twice += a(0) * b(1) - a(1) * b(0);
  }
  return abs(twice) / 2;
}

/// Random rational in [lo, hi] with denominator dividing `den`.
inline Scalar random_rational(std::mt19937_64& rng, long lo, long hi, long den = 16) {
  std::uniform_int_distribution<long> dist(lo * den, hi * den);
  return Scalar(dist(rng)) / den;
}

inline Vector random_point(std::mt19937_64& rng, Eigen::Index dim, long lo, long hi, long den = 16) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = random_rational(rng, lo, hi, den);
  return v;
}

}  // namespace coconvex::testing
