#include <random>

#include "doctest.h"

#include "coconvex/error.hpp"
#include "coconvex/oracle.hpp"
#include "coconvex/theorems.hpp"
#include "support/oracles.hpp"

using namespace coconvex;
using coconvex::testing::v2;
using coconvex::testing::v3;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

const Scalar half = Scalar(1) / 2;
const PolyhedralCone quadrant = validate({v2(1, 0), v2(0, 1)});
const CoconvexBody unit = make_coconvex(quadrant, {v2(1, 0), v2(0, 1)});
const CoconvexBody k1 = make_coconvex(quadrant, {v2(2, 0), v2(0, 1)});
const CoconvexBody k2 = make_coconvex(quadrant, {v2(1, 0), v2(0, 2)});
const Hyperplane x_axis(v2(0, 1), 0);

RootExpression ones_half() { return RootExpression({{half, 1, 2}, {half, 1, 2}}); }

template <typename T>
bool holds(const EqualityClass& c) {
  return std::holds_alternative<T>(c);
}

}  // namespace

TEST_CASE("root comparison examples") {
  CHECK(certified_root_compare(RootExpression::root(Scalar(3) / 4, 2), ones_half()) == Ordering::Less);
  CHECK(certified_root_compare(RootExpression::root(Scalar(9) / 4, 2), RootExpression({{Scalar(3) / 2, 1, 2}})) ==
        Ordering::Equal);
  CHECK(certified_root_compare(RootExpression::root(2, 2), RootExpression::root(1, 2)) == Ordering::Greater);
}

TEST_CASE("irrational equality needs a structural certificate") {
  // sqrt(2) = (1/2)·sqrt(8), but no enclosure can tell
  const auto a = RootExpression::root(2, 2);
  const RootExpression b({{half, 8, 2}});
  CHECK(code_of([&] { certified_root_compare(a, b); }) == ErrorCode::PrecisionExhausted);
  CHECK(certified_root_compare(a, b, EqualityCertificate::Structural) == Ordering::Equal);
  // the certificate never overrides a strict separation
  CHECK(certified_root_compare(a, RootExpression::root(3, 2), EqualityCertificate::Structural) == Ordering::Less);
}

TEST_CASE("enclosures are sound") {
  const Interval i = enclose(RootExpression::root(2, 2), 64);
  CHECK(i.lo * i.lo <= 2);
  CHECK(i.hi * i.hi >= 2);
  CHECK(i.hi - i.lo == Scalar(1) / Scalar(Integer(1) << 64));
  const Interval c = enclose(RootExpression::root(Scalar(27) / 8, 3), 64);
  CHECK(c.exact());
  CHECK(c.lo == Scalar(3) / 2);
}

TEST_CASE("root comparison is antisymmetric and exact at degree one") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    auto term = [&] { return RootTerm{testing::random_rational(rng, 1, 4), testing::random_rational(rng, 0, 9), n}; };
    const RootExpression a({term(), term()}), b({term()});
    Ordering ab = Ordering::Equal, ba = Ordering::Equal;
    try {
      ab = certified_root_compare(a, b);
      ba = certified_root_compare(b, a);
    } catch (const Error&) {
      continue;  // a genuine irrational tie; astronomically rare here
    }
    CHECK((ab == Ordering::Less) == (ba == Ordering::Greater));
    CHECK((ab == Ordering::Equal) == (ba == Ordering::Equal));
    if (n == 1) {
      const Scalar x = a.terms()[0].coefficient * a.terms()[0].radicand + a.terms()[1].coefficient * a.terms()[1].radicand;
      const Scalar y = b.terms()[0].coefficient * b.terms()[0].radicand;
      CHECK((ab == Ordering::Less) == (x < y));
      CHECK((ab == Ordering::Equal) == (x == y));
    }
  }
  CHECK_THROWS_AS(RootExpression({{0, 1, 2}}), Error);
  CHECK_THROWS_AS(RootExpression({{1, -1, 2}}), Error);
}

TEST_CASE("volume convexity examples") {
  const auto strict = check_volume_convexity(k1, k2, half);
  CHECK(to_record(strict) == "verdict=StrictlyLess lhs=3/4 rhs=1 equality_class=NotEqual");

  const auto same = check_volume_convexity(k1, k1, Scalar(1) / 3);
  CHECK(same.verdict == Verdict::Equal);
  CHECK(holds<Identical>(same.equality_class));
  CHECK(std::get<Scalar>(same.lhs) == volume(k1));

  // homothets are not an equality case here: (3/2)^2 V < (5/2) V
  const auto homothets = check_volume_convexity(unit, scale(unit, 2), half);
  CHECK(homothets.verdict == Verdict::StrictlyLess);
  CHECK(std::get<Scalar>(homothets.lhs) == Scalar(9) / 4 * volume(unit));
  CHECK(std::get<Scalar>(homothets.rhs) == Scalar(5) / 2 * volume(unit));

  CHECK(code_of([] { check_volume_convexity(k1, k2, 0); }) == ErrorCode::LambdaOutOfRange);
  CHECK(code_of([] { check_volume_convexity(k1, k2, 1); }) == ErrorCode::LambdaOutOfRange);
}

TEST_CASE("reversed Brunn-Minkowski examples") {
  const auto strict = check_reversed_bm(k1, k2, half);
  CHECK(strict.verdict == Verdict::StrictlyLess);
  CHECK(to_string(strict.lhs) == "(3/4)^(1/2)");
  CHECK(to_string(strict.rhs) == "1/2*(1)^(1/2)+1/2*(1)^(1/2)");

  for (const Scalar lambda : {Scalar(1) / 5, half, Scalar(7) / 8}) {
    const auto doubled = check_reversed_bm(k1, scale(k1, 2), lambda);
    CHECK(doubled.verdict == Verdict::Equal);
    REQUIRE(holds<Homothets>(doubled.equality_class));
    CHECK(std::get<Homothets>(doubled.equality_class).alpha == half);
  }
  const auto same = check_reversed_bm(k1, k1, Scalar(1) / 4);
  CHECK(same.verdict == Verdict::Equal);
  CHECK(std::get<Homothets>(same.equality_class).alpha == 1);
  CHECK(to_record(same).find("equality_class=Homothets(1)") != std::string::npos);
}

TEST_CASE("cylinder concavity examples") {
  const auto square = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
  const auto triangle = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1)});
  const auto strict = check_cylinder_concavity(square, triangle, half, x_axis);
  CHECK(std::get<Scalar>(strict.lhs) == Scalar(7) / 8);
  CHECK(std::get<Scalar>(strict.rhs) == Scalar(3) / 4);
  CHECK(strict.verdict == Verdict::StrictlyLess);
  CHECK(holds<NotEqual>(strict.equality_class));

  const auto prism = minkowski_sum(square, convex_hull({v2(0, 0), v2(0, half)}));
  for (const Scalar lambda : {Scalar(1) / 3, half}) {
    const auto eq = check_cylinder_concavity(square, prism, lambda, x_axis);
    CHECK(eq.verdict == Verdict::Equal);
    CHECK(std::get<Scalar>(eq.lhs) == 1 + lambda / 2);
    CHECK(std::get<Scalar>(eq.rhs) == 1 + lambda / 2);
    REQUIRE(holds<OrthogonalSegmentTranslate>(eq.equality_class));
    CHECK(std::get<OrthogonalSegmentTranslate>(eq.equality_class).length() == half);
  }

  const auto wide = convex_hull({v2(0, 0), v2(2, 0), v2(0, 1)});
  CHECK(code_of([&] { check_cylinder_concavity(square, wide, half, x_axis); }) == ErrorCode::ProjectionMismatch);
}

TEST_CASE("segment classification examples") {
  const auto square = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
  const auto triangle = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1)});
  const auto prism = minkowski_sum(square, convex_hull({v2(0, 0), v2(0, half)}));

  const auto up = classify_cylinder_equality(square, prism, x_axis);
  REQUIRE(up.has_value());
  CHECK_FALSE(up->first_is_larger);
  CHECK(up->from == 0);
  CHECK(up->to == half);

  const auto same = classify_cylinder_equality(square, square, x_axis);
  REQUIRE(same.has_value());
  CHECK(same->length() == 0);

  CHECK_FALSE(classify_cylinder_equality(square, triangle, x_axis).has_value());

  // a pure vertical translate is a degenerate segment away from the origin
  const auto lifted = translate(square, v2(0, 3));
  const auto shift = classify_cylinder_equality(lifted, square, x_axis);
  REQUIRE(shift.has_value());
  CHECK(shift->from == 3);
  CHECK(shift->to == 3);
  CHECK(check_cylinder_concavity(lifted, square, half, x_axis).verdict == Verdict::Equal);

  // slanted hyperplane with a non-unit normal
  const Hyperplane slanted(v2(1, 2), 0);
  const auto tall = minkowski_sum(triangle, convex_hull({v2(0, 0), v2(Scalar(-1) / 3, Scalar(-2) / 3)}));
  const auto slanted_seg = classify_cylinder_equality(triangle, tall, slanted);
  REQUIRE(slanted_seg.has_value());
  CHECK(slanted_seg->from == Scalar(-1) / 3);
  CHECK(slanted_seg->to == 0);
}

TEST_CASE("segment remark examples") {
  const Vector zero = Vector::Zero(2);
  CHECK(check_segment_remark(unit, zero, zero));
  CHECK_FALSE(check_segment_remark(unit, zero, v2(1, 0)));
  CHECK_FALSE(check_segment_remark(unit, zero, v2(half, half)));
  CHECK_FALSE(check_segment_remark(unit, v2(-half, 0), v2(0, 0)));
  CHECK_FALSE(check_segment_remark(unit, v2(1, 1), v2(1, 1)));
}

TEST_CASE("theorem invariants on random triples") {
  std::mt19937_64 rng(47);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int dim = seed % 5 == 0 ? 3 : 2;
    oracle::RandomSpec spec{dim, dim + 1, 3, 4, seed};
    const auto cone = oracle::random_cone(spec);
    spec.seed = oracle::derive_seed(seed, 1);
    const auto a = oracle::random_coconvex(cone, spec);
    spec.seed = oracle::derive_seed(seed, 2);
    const auto b = seed % 3 == 0 ? scale(a, testing::random_rational(rng, 1, 3)) : oracle::random_coconvex(cone, spec);
    const Scalar lambda = oracle::random_lambda(rng);

    const auto convexity = check_volume_convexity(a, b, lambda);
    const auto bm = check_reversed_bm(a, b, lambda);
    CAPTURE(seed);
    CHECK(convexity.verdict != Verdict::Violated);
    CHECK((convexity.verdict == Verdict::Equal) == equals(a, b));
    CHECK(bm.verdict != Verdict::Violated);
    CHECK((bm.verdict == Verdict::Equal) == detect_homothety(a, b).has_value());
  }
}
