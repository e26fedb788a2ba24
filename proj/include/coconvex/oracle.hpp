#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "coconvex/coconvex.hpp"
#include "coconvex/error.hpp"

namespace coconvex::oracle {

// The generator is pinned: std::mt19937_64 seeded directly with the 64-bit
// seed. Sub-streams are derived with splitmix64 (derive_seed), so a fixture
// seed reproduces every instance on any conforming standard library.
using Rng = std::mt19937_64;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct RandomSpec {
  int dim = 2;
  int cone_rays = 2;
  int apex_count = 3;
  Scalar coordinate_bound = 4;
  std::uint64_t seed = 0;
};

/// A valid pointed cone whose rays sit in the open halfspace x_n > 0.
PolyhedralCone random_cone(const RandomSpec& spec);

/// A valid body on `c`. One apex is placed on every extreme ray of c, which
/// forces the complement to be bounded.
CoconvexBody random_coconvex(const PolyhedralCone& c, const RandomSpec& spec);

/// Two full-height bodies over the base B ⊂ h, built by hulling B with
/// copies of its vertices pushed into H⁺ by random heights. Both project
/// onto h exactly as B.
std::pair<Polytope, Polytope> random_cylinder_pair(const Polytope& base, const Hyperplane& h, const RandomSpec& spec);

/// A random (dim-1)-dimensional polytope inside the hyperplane x_n = 0.
Polytope random_base(const RandomSpec& spec);

/// Random rational with denominator at most 64 in the open interval (0, 1).
Scalar random_lambda(Rng& rng);

/// Random rational in [lo, hi] with denominator at most 64.
Scalar random_rational(Rng& rng, const Scalar& lo, const Scalar& hi);

struct VolumeEstimate {
  double mean = 0;
  double std_error = 0;
  std::int64_t samples = 0;
};

/// Axis-aligned sampling box. Sample coordinates are the exact dyadic
/// rationals lo + (hi - lo)·(2k + 1)/2^33 for 32-bit ticks k.
struct SamplingBox {
  Vector lo;
  Vector hi;

  explicit SamplingBox(const Polytope& bounds);
  Eigen::Index dim() const { return lo.size(); }
  Scalar volume() const;
  Vector point(std::span<const std::uint32_t> ticks) const;
};

/// One Monte Carlo sample: lattice ticks plus the box that maps them to an
/// exact rational point.
struct LatticeSample {
  std::span<const std::uint32_t> ticks;
  const SamplingBox* box;

  Vector exact() const { return box->point(ticks); }
};

/// Exact membership of lattice samples in a coconvex body, evaluated in
/// 128-bit integer arithmetic. Falls back to rational evaluation when the
/// scaled coefficients would not fit.
class BodyMembership {
 public:
  BodyMembership(const CoconvexBody& body, const SamplingBox& box);
  bool operator()(const LatticeSample& s) const;

 private:
  struct Row {
    std::vector<__int128> coeff;  // multiplies (2k_i + 1)
    __int128 constant;
  };
  static std::optional<Row> compile(const Vector& normal, const Scalar& offset, const SamplingBox& box);

  const CoconvexBody* body_;
  bool fast_ = true;
  std::vector<Row> cone_rows_;        // value >= 0 required
  std::vector<Row> complement_rows_;  // value <= 0 puts the point in K
};

/// Monte Carlo estimate of the volume of {x : inside(x)} ⊂ bounds. `inside`
/// may take either a LatticeSample or an exact Vector.
template <typename Membership>
VolumeEstimate mc_volume(Membership&& inside, const Polytope& bounds, std::int64_t samples, std::uint64_t seed) {
  if (samples < 10000) throw Error(ErrorCode::InvalidArgument, "at least 10^4 samples are required");
  const SamplingBox box(bounds);
  Rng rng(seed);
  std::vector<std::uint32_t> ticks(static_cast<std::size_t>(box.dim()));
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    for (auto& t : ticks) t = static_cast<std::uint32_t>(rng() >> 32);
    const LatticeSample sample{ticks, &box};
    bool hit = false;
    if constexpr (std::invocable<Membership&, const LatticeSample&>) {
      hit = inside(sample);
    } else {
      hit = inside(sample.exact());
    }
    if (hit) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double box_volume = to_double(box.volume());
  const double sd = std::sqrt(p * (1 - p) * n / (n - 1));
  return VolumeEstimate{box_volume * p, box_volume * sd / std::sqrt(n), samples};
}

/// Monte Carlo volume of a body over the bounding box of C ∩ H⁺.
VolumeEstimate mc_body_volume(const CoconvexBody& body, std::int64_t samples, std::uint64_t seed);

}  // namespace coconvex::oracle
