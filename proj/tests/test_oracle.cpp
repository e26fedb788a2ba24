#include <cmath>

#include "doctest.h"

#include "coconvex/error.hpp"
#include "coconvex/oracle.hpp"
#include "support/oracles.hpp"

using namespace coconvex;
using namespace coconvex::oracle;
using coconvex::testing::v2;
using coconvex::testing::v3;

namespace {

const PolyhedralCone quadrant = validate({v2(1, 0), v2(0, 1)});
const PolyhedralCone octant = validate({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});

bool within(const VolumeEstimate& e, double exact) { return std::abs(e.mean - exact) <= 3 * e.std_error; }

}  // namespace

TEST_CASE("monte carlo examples") {
  const auto triangle = make_coconvex(quadrant, {v2(1, 0), v2(0, 1)});
  const auto tri = mc_body_volume(triangle, 1000000, 11);
  CHECK(tri.samples == 1000000);
  CHECK(within(tri, 0.5));
  CHECK(tri.std_error > 0);
  CHECK(tri.std_error < 2e-3);

  const auto square = box(v2(0, 0), v2(1, 1));
  const auto sq = mc_volume([](const Vector&) { return true; }, square, 10000, 3);
  CHECK(sq.mean == doctest::Approx(1.0));
  CHECK(sq.std_error == 0);
  const auto sub = mc_volume([](const Vector& x) { return x(0) <= 1; }, box(v2(0, 0), v2(2, 1)), 200000, 5);
  CHECK(within(sub, 1.0));

  const auto k1 = make_coconvex(quadrant, {v2(2, 0), v2(0, 1)});
  const auto k2 = make_coconvex(quadrant, {v2(1, 0), v2(0, 2)});
  CHECK(within(mc_body_volume(combine(Scalar(1) / 2, k1, k2), 1000000, 13), 0.75));
}

TEST_CASE("lattice membership agrees with exact evaluation") {
  const auto body = make_coconvex(quadrant, {v2(Scalar(3) / 7, 2), v2(1, Scalar(5) / 9), v2(Scalar(5) / 2, 0), v2(0, 3)});
  const auto bounds = truncate(quadrant, choose_hyperplane(quadrant, {body}));
  const SamplingBox sampling(bounds);
  const BodyMembership fast(body, sampling);
  Rng rng(17);
  std::vector<std::uint32_t> ticks(2);
  for (int i = 0; i < 3000; ++i) {
    for (auto& t : ticks) t = static_cast<std::uint32_t>(rng() >> 32);
    const LatticeSample s{ticks, &sampling};
    CHECK(fast(s) == body.contains(s.exact()));
  }
  // the fast and exact predicates see the same stream
  const auto a = mc_volume(fast, bounds, 10000, 19);
  const auto b = mc_volume([&](const Vector& x) { return body.contains(x); }, bounds, 10000, 19);
  CHECK(a.mean == b.mean);
}

TEST_CASE("monte carlo errors") {
  const auto flat = convex_hull({v2(0, 0), v2(1, 0)});
  CHECK_THROWS_AS(mc_volume([](const Vector&) { return true; }, flat, 10000, 1), Error);
  try {
    mc_volume([](const Vector&) { return true; }, flat, 10000, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateBox);
  }
  CHECK_THROWS_AS(mc_volume([](const Vector&) { return true; }, box(v2(0, 0), v2(1, 1)), 9999, 1), Error);
}

TEST_CASE("generators are deterministic and valid") {
  const RandomSpec s42{2, 2, 3, 4, 42};
  const auto c = random_cone(s42);
  CHECK(c == random_cone(s42));
  CHECK(c.generators().size() == 2);
  CHECK(validate(c.generators()) == c);

  const RandomSpec s3d{3, 4, 4, 4, 9};
  const auto c3 = random_cone(s3d);
  CHECK(c3.dim() == 3);
  CHECK(c3.generators().size() <= 4);

  CHECK_THROWS_AS(random_cone(RandomSpec{2, 1, 3, 4, 1}), Error);

  const RandomSpec s7{2, 2, 3, 4, 7};
  const auto k = random_coconvex(quadrant, s7);
  CHECK(k == random_coconvex(quadrant, s7));
  CHECK(volume(k) > 0);
  const auto k3 = random_coconvex(octant, RandomSpec{3, 3, 4, 4, 7});
  CHECK(k3.dim() == 3);
  CHECK(volume(k3) > 0);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int dim = 2 + static_cast<int>(seed % 3);
    const RandomSpec spec{dim, dim + 1, 3, 4, seed};
    const auto cone = random_cone(spec);
    const auto body = random_coconvex(cone, spec);
    CHECK(make_coconvex(cone, body.apexes()) == body);
  }
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
  CHECK(derive_seed(5, 5) == derive_seed(5, 5));
}

TEST_CASE("cylinder pairs project onto their base") {
  const Hyperplane x_axis(v2(0, 1), 0);
  const auto segment = convex_hull({v2(0, 0), v2(1, 0)});
  const RandomSpec s3{2, 2, 3, 4, 3};
  const auto [a, b] = random_cylinder_pair(segment, x_axis, s3);
  CHECK(project_onto(a, x_axis) == segment);
  CHECK(project_onto(b, x_axis) == segment);
  CHECK(a.full_dimensional());
  const auto again = random_cylinder_pair(segment, x_axis, s3);
  CHECK(again.first == a);
  CHECK(again.second == b);

  const Hyperplane floor3(v3(0, 0, 1), 0);
  const RandomSpec s{3, 3, 4, 4, 21};
  const auto base = random_base(s);
  CHECK(base.affine_dim() == 2);
  const auto [c, d] = random_cylinder_pair(base, floor3, s);
  CHECK(project_onto(c, floor3) == base);
  CHECK(project_onto(d, floor3) == base);

  CHECK_THROWS_AS(random_cylinder_pair(convex_hull({v2(0, 1), v2(1, 1)}), x_axis, s3), Error);
}

TEST_CASE("random rationals respect their bounds") {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const Scalar l = random_lambda(rng);
    CHECK(l > 0);
    CHECK(l < 1);
    CHECK(boost::multiprecision::denominator(l) <= 64);
    const Scalar r = random_rational(rng, -2, 3);
    CHECK(r >= -2);
    CHECK(r <= 3);
    CHECK(boost::multiprecision::denominator(r) <= 64);
  }
}
