#include "coconvex/polytope.hpp"

#include <algorithm>
#include <set>

#include "coconvex/error.hpp"
#include "coconvex/linalg.hpp"

namespace coconvex {

namespace {

// Indices of the vertices of conv(points) for an affinely independent-free
// canonical list; works in local coordinates of the affine hull.
std::vector<std::size_t> vertex_indices(const PointList& points, Eigen::Index dim, int& affine_dim,
                                        std::vector<Facet>& facets) {
  const std::size_t m = points.size();
  if (m == 1) {
    affine_dim = 0;
    return {0};
  }
  Matrix diffs(dim, static_cast<Eigen::Index>(m) - 1);
  for (std::size_t i = 1; i < m; ++i) diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points[0];
  Matrix reduced = diffs;
  const auto pivots = linalg::rref(reduced);
  const auto k = static_cast<Eigen::Index>(pivots.size());
  affine_dim = static_cast<int>(k);

  std::vector<std::size_t> out;
  if (k == dim) {
    facets = enumerate_facets(points, {}, dim);
    for (std::size_t i = 0; i < m; ++i) {
      if (tight_rank(facets, points[i]) == dim) out.push_back(i);
    }
    return out;
  }

  Matrix basis(dim, k);
  for (Eigen::Index j = 0; j < k; ++j) basis.col(j) = diffs.col(pivots[j]);
  PointList local;
  local.reserve(m);
  for (std::size_t i = 0; i < m; ++i) local.push_back(*linalg::solve(basis, points[i] - points[0]));

  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (local[i](0) < local[lo](0)) lo = i;
      if (local[i](0) > local[hi](0)) hi = i;
    }
    out = {std::min(lo, hi), std::max(lo, hi)};
    return out;
  }
  const auto local_facets = enumerate_facets(local, {}, k);
  for (std::size_t i = 0; i < m; ++i) {
    if (tight_rank(local_facets, local[i]) == k) out.push_back(i);
  }
  return out;
}

int index_affine_dim(const PointList& vertices, const std::vector<std::size_t>& idx) {
  PointList pts;
  pts.reserve(idx.size());
  for (auto i : idx) pts.push_back(vertices[i]);
  return affine_dimension(pts);
}

Scalar factorial(Eigen::Index n) {
  Scalar f(1);
  for (Eigen::Index i = 2; i <= n; ++i) f *= i;
  return f;
}

// Pulling triangulation: a k-face is the union of pyramids from its first
// vertex over the (k-1)-subfaces that miss it.
class Triangulator {
 public:
  Triangulator(const PointList& vertices, std::vector<std::vector<std::size_t>> facet_sets, Eigen::Index dim)
      : vertices_(vertices), facet_sets_(std::move(facet_sets)), dim_(dim) {}

  Scalar volume() {
    std::vector<std::size_t> all(vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> prefix;
    Scalar total(0);
    accumulate(all, static_cast<int>(dim_), prefix, total);
    return total / factorial(dim_);
  }

 private:
  void accumulate(const std::vector<std::size_t>& face, int k, std::vector<std::size_t>& prefix, Scalar& total) {
    if (face.size() == static_cast<std::size_t>(k) + 1) {
      std::vector<std::size_t> simplex = prefix;
      simplex.insert(simplex.end(), face.begin(), face.end());
      Matrix edges(dim_, dim_);
      for (Eigen::Index j = 1; j <= dim_; ++j) edges.col(j - 1) = vertices_[simplex[j]] - vertices_[simplex[0]];
      total += abs(linalg::determinant(edges));
      return;
    }
    const std::size_t pivot = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& f : facet_sets_) {
      std::vector<std::size_t> sub;
      std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(sub));
      if (sub.size() < static_cast<std::size_t>(k) || sub.size() == face.size()) continue;
      if (std::binary_search(sub.begin(), sub.end(), pivot)) continue;
      if (subfaces.count(sub) != 0) continue;
      if (index_affine_dim(vertices_, sub) == k - 1) subfaces.insert(std::move(sub));
    }
    prefix.push_back(pivot);
    for (const auto& sub : subfaces) accumulate(sub, k - 1, prefix, total);
    prefix.pop_back();
  }

  const PointList& vertices_;
  std::vector<std::vector<std::size_t>> facet_sets_;
  Eigen::Index dim_;
};

}  // namespace

Polytope convex_hull(PointList points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "convex hull of no points");
  const Eigen::Index dim = points.front().size();
  for (const auto& p : points) require_dim(p, dim, "point");
  canonicalize(points);

  Polytope out;
  out.dim_ = dim;
  std::vector<Facet> facets;
  const auto idx = vertex_indices(points, dim, out.affine_dim_, facets);
  out.vertices_.reserve(idx.size());
  for (auto i : idx) out.vertices_.push_back(points[i]);
  out.facets_ = std::move(facets);
  return out;
}

bool Polytope::contains(const Vector& p) const {
  require_dim(p, dim_, "point");
  if (full_dimensional()) {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.satisfied_by(p); });
  }
  PointList pts = vertices_;
  pts.push_back(p);
  return convex_hull(std::move(pts)) == *this;
}

bool operator==(const Polytope& a, const Polytope& b) {
  return a.dim_ == b.dim_ && a.vertices_.size() == b.vertices_.size() &&
         std::equal(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(), same);
}

Scalar volume(const Polytope& p) {
  if (!p.full_dimensional()) return Scalar(0);
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& f : p.facets()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      if (f.tight_at(p.vertices()[i])) s.push_back(i);
    }
    sets.push_back(std::move(s));
  }
  return Triangulator(p.vertices(), std::move(sets), p.dim()).volume();
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of polytopes of different dimension");
  PointList sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return convex_hull(std::move(sums));
}

Polytope scale(const Polytope& p, const Scalar& t) {
  if (t <= 0) throw Error(ErrorCode::NonpositiveScale, "scale factor " + to_string(t));
  PointList pts;
  for (const auto& v : p.vertices()) pts.push_back(t * v);
  return convex_hull(std::move(pts));
}

Polytope translate(const Polytope& p, const Vector& v) {
  require_dim(v, p.dim(), "translation");
  PointList pts;
  for (const auto& x : p.vertices()) pts.push_back(x + v);
  return convex_hull(std::move(pts));
}

std::optional<Polytope> clip(const Polytope& p, const Hyperplane& h) {
  require_dim(h.normal, p.dim(), "hyperplane");
  PointList kept;
  std::vector<std::pair<const Vector*, Scalar>> inside, outside;
  for (const auto& v : p.vertices()) {
    Scalar s = h.evaluate(v);
    if (s <= 0) kept.push_back(v);
    if (s < 0) inside.emplace_back(&v, s);
    if (s > 0) outside.emplace_back(&v, s);
  }
  if (kept.empty()) return std::nullopt;
  // Every crossing edge is among these pairs; extra pairs only add points
  // already inside the clipped set.
  for (const auto& [a, sa] : inside) {
    for (const auto& [b, sb] : outside) {
      const Scalar t = sa / (sa - sb);
      kept.push_back(*a + t * (*b - *a));
    }
  }
  return convex_hull(std::move(kept));
}

Polytope project_onto(const Polytope& p, const Hyperplane& h) {
  require_dim(h.normal, p.dim(), "hyperplane");
  PointList pts;
  for (const auto& v : p.vertices()) pts.push_back(h.project(v));
  return convex_hull(std::move(pts));
}

Scalar support(const Polytope& p, const Vector& u) {
  require_dim(u, p.dim(), "direction");
  Scalar best = u.dot(p.vertices().front());
  for (const auto& v : p.vertices()) best = std::max(best, Scalar(u.dot(v)));
  return best;
}

std::pair<Vector, Vector> bounding_box(const Polytope& p) {
  Vector lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices()) {
    for (Eigen::Index i = 0; i < p.dim(); ++i) {
      if (v(i) < lo(i)) lo(i) = v(i);
      if (v(i) > hi(i)) hi(i) = v(i);
    }
  }
  return {lo, hi};
}

Polytope box(const Vector& lo, const Vector& hi) {
  require_dim(hi, lo.size(), "box corner");
  PointList corners;
  const auto n = lo.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vector c(n);
    for (Eigen::Index i = 0; i < n; ++i) c(i) = (mask >> i) & 1U ? hi(i) : lo(i);
    corners.push_back(std::move(c));
  }
  return convex_hull(std::move(corners));
}

}  // namespace coconvex
