#include "coconvex/geometry.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "coconvex/error.hpp"
#include "coconvex/linalg.hpp"

namespace coconvex {

Hyperplane::Hyperplane(Vector n, Scalar b) : normal(std::move(n)), offset(std::move(b)) {
  if (normal.size() == 0 || normal.isZero()) throw Error(ErrorCode::InvalidArgument, "hyperplane normal is zero");
}

Scalar Hyperplane::evaluate(const Vector& p) const {
  require_dim(p, dim(), "point");
  return normal.dot(p) - offset;
}

Hyperplane Hyperplane::negated() const { return Hyperplane(-normal, -offset); }

Vector Hyperplane::project(const Vector& p) const {
  const Scalar t = evaluate(p) / normal.squaredNorm();
  return p - t * normal;
}

bool operator==(const Hyperplane& a, const Hyperplane& b) {
  return same(a.normal, b.normal) && a.offset == b.offset;
}

Side side_of(const Hyperplane& h, const Vector& p) {
  const int s = sign(h.evaluate(p));
  return s < 0 ? Side::Negative : (s == 0 ? Side::On : Side::Positive);
}

Scalar determinant(const PointList& columns) {
  if (columns.empty()) throw Error(ErrorCode::EmptyInput, "determinant of no columns");
  const auto n = static_cast<Eigen::Index>(columns.size());
  for (const auto& c : columns) require_dim(c, n, "determinant column");
  return linalg::determinant(linalg::columns(columns, n));
}

int affine_dimension(const PointList& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "affine dimension of no points");
  const Eigen::Index dim = points.front().size();
  Matrix diffs(dim, static_cast<Eigen::Index>(points.size()) - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_dim(points[i], dim, "point");
    diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points.front();
  }
  return static_cast<int>(linalg::rank(diffs));
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  Vector y;
  Bits zeros;
};

}  // namespace

// Double description: the facets of cone{w_i} are the extreme rays of the
// polar {y : y·w_i >= 0}. Rays are inserted one constraint at a time; new
// rays come from adjacent (+,-) pairs, adjacency decided combinatorially
// from the zero sets.
std::vector<Facet> enumerate_facets(const PointList& points, const PointList& rays, Eigen::Index dim) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "facet enumeration needs at least one point");
  const Eigen::Index d = dim + 1;
  PointList rows;
  rows.reserve(points.size() + rays.size());
  for (const auto& p : points) {
    require_dim(p, dim, "point");
    Vector w(d);
    w << Scalar(1), p;
    rows.push_back(std::move(w));
  }
  for (const auto& r : rays) {
    require_dim(r, dim, "ray");
    Vector w(d);
    w << Scalar(0), r;
    rows.push_back(std::move(w));
  }
  const std::size_t m = rows.size();

  Matrix stacked = linalg::columns(rows, d);
  const auto basis = linalg::rref(stacked);
  if (static_cast<Eigen::Index>(basis.size()) < d) {
    throw Error(ErrorCode::NotFullDimensional, "generators do not span the ambient space");
  }

  Matrix b(d, d);
  for (Eigen::Index i = 0; i < d; ++i) b.row(i) = rows[basis[i]].transpose();
  Matrix aug(d, 2 * d);
  aug << b, Matrix::Identity(d, d);
  linalg::rref(aug);

  std::vector<Ray> current;
  for (Eigen::Index j = 0; j < d; ++j) {
    Ray ray{primitive(aug.block(0, d, d, d).col(j)), Bits(m)};
    for (Eigen::Index i = 0; i < d; ++i) {
      if (i != j) ray.zeros.set(basis[i]);
    }
    current.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(m, false);
  for (auto i : basis) in_basis[i] = true;

  for (std::size_t k = 0; k < m; ++k) {
    if (in_basis[k]) continue;
    const Vector& a = rows[k];
    std::vector<Scalar> value(current.size());
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < current.size(); ++r) {
      value[r] = a.dot(current[r].y);
      if (value[r] > 0) {
        plus.push_back(r);
      } else if (value[r] < 0) {
        minus.push_back(r);
      }
    }
    if (minus.empty()) {
      for (std::size_t r = 0; r < current.size(); ++r) {
        if (value[r] == 0) current[r].zeros.set(k);
      }
      continue;
    }
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        Bits common = current[p].zeros & current[q].zeros;
        if (static_cast<Eigen::Index>(common.count()) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < current.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(current[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector y = value[p] * current[q].y - value[q] * current[p].y;
        common.set(k);
        next.push_back(Ray{primitive(y), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < current.size(); ++r) {
      if (value[r] > 0) {
        next.push_back(std::move(current[r]));
      } else if (value[r] == 0) {
        current[r].zeros.set(k);
        next.push_back(std::move(current[r]));
      }
    }
    current = std::move(next);
  }

  std::vector<Facet> facets;
  for (const auto& ray : current) {
    Vector normal = ray.y.tail(dim);
    if (normal.isZero()) continue;  // x0 >= 0, the face at infinity
    const Vector prim = primitive(normal);
    Eigen::Index i = 0;
    while (normal(i) == 0) ++i;
    const Scalar factor = prim(i) / normal(i);
    facets.push_back(Facet{prim, Scalar(-ray.y(0) * factor)});
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) {
    if (lex_less(x.normal, y.normal)) return true;
    if (lex_less(y.normal, x.normal)) return false;
    return x.offset < y.offset;
  });
  facets.erase(std::unique(facets.begin(), facets.end(),
                           [](const Facet& x, const Facet& y) { return same(x.normal, y.normal) && x.offset == y.offset; }),
               facets.end());
  return facets;
}

Eigen::Index tight_rank(const std::vector<Facet>& facets, const Vector& p) {
  PointList normals;
  for (const auto& f : facets) {
    if (f.tight_at(p)) normals.push_back(f.normal);
  }
  if (normals.empty()) return 0;
  return linalg::rank(linalg::columns(normals, p.size()));
}

}  // namespace coconvex
