#include "coconvex/oracle.hpp"

#include <algorithm>

namespace coconvex::oracle {

namespace {

constexpr int kMaxRetries = 1000;
constexpr long kMaxDenominator = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long integer_bound(const Scalar& bound) {
  const Integer floor_value = numerator(bound) / denominator(bound);
  return std::max(1L, floor_value.convert_to<long>());
}

void check_spec(const RandomSpec& spec) {
  if (spec.dim < 2 || spec.dim > 4) throw Error(ErrorCode::InvalidArgument, "dimension must be 2, 3 or 4");
  if (spec.coordinate_bound <= 0) throw Error(ErrorCode::InvalidArgument, "coordinate bound must be positive");
}

__int128 to_int128(const Integer& v) {
  const bool negative = v < 0;
  const Integer mag = negative ? Integer(-v) : v;
  const Integer mask = (Integer(1) << 64) - 1;
  const auto lo = static_cast<unsigned __int128>(Integer(mag & mask).convert_to<unsigned long long>());
  const auto hi = static_cast<unsigned __int128>(Integer(mag >> 64).convert_to<unsigned long long>());
  const auto out = static_cast<__int128>((hi << 64) | lo);
  return negative ? -out : out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

Scalar random_rational(Rng& rng, const Scalar& lo, const Scalar& hi) {
  const long den = uniform_int(rng, 1, kMaxDenominator);
  const Scalar a = lo * den, b = hi * den;
  const Integer first = numerator(a) / denominator(a) + (a > 0 && denominator(a) != 1 ? 1 : 0);
  const Integer last = numerator(b) / denominator(b) - (b < 0 && denominator(b) != 1 ? 1 : 0);
  if (last < first) return lo;
  const long k = uniform_int(rng, first.convert_to<long>(), last.convert_to<long>());
  return Scalar(k) / den;
}

Scalar random_lambda(Rng& rng) {
  const long den = uniform_int(rng, 2, kMaxDenominator);
  return Scalar(uniform_int(rng, 1, den - 1)) / den;
}

PolyhedralCone random_cone(const RandomSpec& spec) {
  check_spec(spec);
  if (spec.cone_rays < spec.dim) throw Error(ErrorCode::InvalidArgument, "a full-dimensional cone needs at least dim rays");
  const long bound = integer_bound(spec.coordinate_bound);
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    PointList rays;
    for (int r = 0; r < spec.cone_rays; ++r) {
      Vector g(spec.dim);
      for (int i = 0; i + 1 < spec.dim; ++i) g(i) = uniform_int(rng, -bound, bound);
      g(spec.dim - 1) = uniform_int(rng, 1, bound);
      rays.push_back(std::move(g));
    }
    try {
      return validate(rays);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::RetriesExhausted, "random_cone");
}

CoconvexBody random_coconvex(const PolyhedralCone& c, const RandomSpec& spec) {
  check_spec(spec);
  if (spec.dim != c.dim()) throw Error(ErrorCode::DimensionMismatch, "spec and cone dimensions differ");
  const Vector u = section_normal(c);
  const Hyperplane h0(u, spec.coordinate_bound);
  PointList corners;  // vertices of C ∩ H0⁺ other than the apex
  for (const auto& g : c.generators()) corners.push_back(g * Scalar(h0.offset / u.dot(g)));

  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    PointList apexes;
    for (const auto& corner : corners) apexes.push_back(corner * Scalar(Scalar(uniform_int(rng, 1, kMaxDenominator)) / kMaxDenominator));
    for (int i = 0; i < spec.apex_count; ++i) {
      // convex combination of the section's vertices, the origin included
      std::vector<long> weights(corners.size() + 1);
      long total = 0;
      for (auto& w : weights) total += (w = uniform_int(rng, 0, 8));
      if (total == weights.front()) continue;  // lands on the origin
      Vector p = Vector::Zero(c.dim());
      for (std::size_t j = 0; j < corners.size(); ++j) p += corners[j] * Scalar(Scalar(weights[j + 1]) / total);
      apexes.push_back(std::move(p));
    }
    try {
      return make_coconvex(c, apexes);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::RetriesExhausted, "random_coconvex");
}

Polytope random_base(const RandomSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  const Scalar bound = spec.coordinate_bound;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    PointList pts;
    for (int i = 0; i < spec.dim + 1; ++i) {
      Vector p = Vector::Zero(spec.dim);
      for (int j = 0; j + 1 < spec.dim; ++j) p(j) = random_rational(rng, -bound, bound);
      pts.push_back(std::move(p));
    }
    auto base = convex_hull(std::move(pts));
    if (base.affine_dim() == spec.dim - 1) return base;
  }
  throw Error(ErrorCode::RetriesExhausted, "random_base");
}

std::pair<Polytope, Polytope> random_cylinder_pair(const Polytope& base, const Hyperplane& h, const RandomSpec& spec) {
  check_spec(spec);
  require_dim(h.normal, base.dim(), "hyperplane");
  for (const auto& v : base.vertices()) {
    if (side_of(h, v) != Side::On) throw Error(ErrorCode::InvalidArgument, "base must lie in the hyperplane");
  }
  Rng rng(spec.seed);
  const Scalar min_height = Scalar(1) / kMaxDenominator;
  auto body = [&] {
    PointList pts = base.vertices();
    for (const auto& v : base.vertices()) {
      pts.push_back(v - random_rational(rng, min_height, spec.coordinate_bound) * h.normal);
    }
    return convex_hull(std::move(pts));
  };
  auto first = body();
  auto second = body();
  return {std::move(first), std::move(second)};
}

SamplingBox::SamplingBox(const Polytope& bounds) {
  std::tie(lo, hi) = bounding_box(bounds);
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (lo(i) == hi(i)) throw Error(ErrorCode::DegenerateBox, "bounding box has zero extent");
  }
}

Scalar SamplingBox::volume() const {
  Scalar v(1);
  for (Eigen::Index i = 0; i < lo.size(); ++i) v *= hi(i) - lo(i);
  return v;
}

Vector SamplingBox::point(std::span<const std::uint32_t> ticks) const {
  static const Scalar scale = Scalar(1) / Scalar(Integer(1) << 33);
  Vector p(lo.size());
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    p(i) = lo(i) + (hi(i) - lo(i)) * Scalar(2 * static_cast<long long>(ticks[i]) + 1) * scale;
  }
  return p;
}

// a·x - b with x = lo + span∘(2k+1)/2^33, multiplied by a positive integer
// so every coefficient is integral.
std::optional<BodyMembership::Row> BodyMembership::compile(const Vector& normal, const Scalar& offset,
                                                           const SamplingBox& box) {
  const Scalar base = normal.dot(box.lo) - offset;
  std::vector<Scalar> slope(static_cast<std::size_t>(normal.size()));
  Integer lcm = denominator(base);
  for (Eigen::Index i = 0; i < normal.size(); ++i) {
    slope[i] = normal(i) * (box.hi(i) - box.lo(i));
    lcm = boost::multiprecision::lcm(lcm, denominator(slope[i]));
  }
  const Integer limit_coeff = Integer(1) << 60, limit_const = Integer(1) << 120;
  Row row;
  const Scalar constant = base * Scalar(lcm) * Scalar(Integer(1) << 33);
  if (abs(constant) >= Scalar(limit_const)) return std::nullopt;
  row.constant = to_int128(numerator(constant));
  for (const auto& s : slope) {
    const Scalar c = s * Scalar(lcm);
    if (abs(c) >= Scalar(limit_coeff)) return std::nullopt;
    row.coeff.push_back(to_int128(numerator(c)));
  }
  return row;
}

BodyMembership::BodyMembership(const CoconvexBody& body, const SamplingBox& box) : body_(&body) {
  for (const auto& a : body.cone().facet_normals()) {
    auto row = compile(a, Scalar(0), box);
    if (!row) {
      fast_ = false;
      return;
    }
    cone_rows_.push_back(std::move(*row));
  }
  for (const auto& f : body.complement().facets()) {
    if (f.offset <= 0) continue;
    auto row = compile(f.normal, f.offset, box);
    if (!row) {
      fast_ = false;
      return;
    }
    complement_rows_.push_back(std::move(*row));
  }
}

bool BodyMembership::operator()(const LatticeSample& s) const {
  if (!fast_) return body_->contains(s.exact());
  auto value = [&](const Row& row) {
    __int128 v = row.constant;
    for (std::size_t i = 0; i < row.coeff.size(); ++i) v += row.coeff[i] * (2 * static_cast<__int128>(s.ticks[i]) + 1);
    return v;
  };
  for (const auto& row : cone_rows_) {
    if (value(row) < 0) return false;
  }
  return std::any_of(complement_rows_.begin(), complement_rows_.end(), [&](const Row& row) { return value(row) <= 0; });
}

VolumeEstimate mc_body_volume(const CoconvexBody& body, std::int64_t samples, std::uint64_t seed) {
  const Hyperplane h = choose_hyperplane(body.cone(), {body});
  const Polytope bounds = truncate(body.cone(), h);
  const SamplingBox box(bounds);
  return mc_volume(BodyMembership(body, box), bounds, samples, seed);
}

}  // namespace coconvex::oracle
