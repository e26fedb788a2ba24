#include <random>

#include "doctest.h"

#include "coconvex/error.hpp"
#include "coconvex/geometry.hpp"
#include "support/oracles.hpp"

using namespace coconvex;
using coconvex::testing::random_point;
using coconvex::testing::v2;
using coconvex::testing::v3;

TEST_CASE("scalars parse and print in lowest terms") {
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK(to_string(parse_scalar("8/4")) == "2");
  CHECK(to_string(parse_scalar("0/7")) == "0");
  CHECK(to_string(parse_scalar("+5")) == "5");
  for (const char* bad : {"1/0", "", "1/", "/2", "1.5", "a", "1/-2", "--1", "1 /2"}) {
    CHECK_THROWS_AS(parse_scalar(bad), Error);
  }
  try {
    parse_scalar("1/0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
  }
}

TEST_CASE("primitive reduces to a coprime integer direction") {
  CHECK(primitive(v2(2, 2)) == v2(1, 1));
  CHECK(primitive(v2(Scalar(1) / 2, Scalar(3) / 4)) == v2(2, 3));
  CHECK(primitive(v2(-4, 6)) == v2(-2, 3));
  CHECK_THROWS_AS(primitive(v2(0, 0)), Error);
}

TEST_CASE("determinant examples") {
  CHECK(determinant({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}) == 1);
  CHECK(determinant({v2(0, 1), v2(1, 0)}) == -1);
  CHECK(determinant({v2(2, 0), v2(1, 3)}) == 6);
  CHECK_THROWS_AS(determinant({v2(1, 0)}), Error);
  CHECK_THROWS_AS(determinant({v2(1, 0), v3(0, 1, 0)}), Error);
}

TEST_CASE("determinant is multilinear and alternating") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    PointList cols;
    for (Eigen::Index i = 0; i < n; ++i) cols.push_back(random_point(rng, n, -4, 4));
    const Scalar d = determinant(cols);

    PointList swapped = cols;
    std::swap(swapped[0], swapped[n - 1]);
    CHECK(determinant(swapped) == -d);

    const Vector extra = random_point(rng, n, -4, 4);
    const Scalar c = testing::random_rational(rng, -3, 3);
    PointList mixed = cols, other = cols;
    mixed[1] = c * cols[1] + extra;
    other[1] = extra;
    CHECK(determinant(mixed) == c * d + determinant(other));

    PointList repeated = cols;
    repeated[1] = repeated[0];
    CHECK(determinant(repeated) == 0);
  }
}

TEST_CASE("side_of examples and sign flip") {
  const Hyperplane h(v2(1, 1), 2);
  CHECK(side_of(h, v2(1, 1)) == Side::On);
  CHECK(side_of(h, v2(0, 0)) == Side::Negative);
  CHECK(side_of(h, v2(3, 0)) == Side::Positive);
  CHECK_THROWS_AS(side_of(h, v3(0, 0, 0)), Error);
  CHECK_THROWS_AS(Hyperplane(v2(0, 0), 1), Error);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Hyperplane g(random_point(rng, 3, -3, 3) + v3(0, 0, 5), testing::random_rational(rng, -2, 2));
    const Vector p = random_point(rng, 3, -3, 3);
    const Side s = side_of(g, p), t = side_of(g.negated(), p);
    CHECK((s == Side::On) == (t == Side::On));
    if (s != Side::On) CHECK(s != t);
  }
}

TEST_CASE("affine dimension examples and translation invariance") {
  CHECK(affine_dimension({v2(0, 0)}) == 0);
  CHECK(affine_dimension({v2(0, 0), v2(1, 0), v2(0, 1)}) == 2);
  CHECK(affine_dimension({v2(0, 0), v2(1, 1), v2(2, 2)}) == 1);
  CHECK_THROWS_AS(affine_dimension({}), Error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    PointList pts;
    const int count = 1 + i % 5;
    for (int j = 0; j < count; ++j) pts.push_back(random_point(rng, 3, -2, 2, 1));
    const Vector shift = random_point(rng, 3, -9, 9);
    PointList moved = pts;
    for (auto& p : moved) p += shift;
    CHECK(affine_dimension(pts) == affine_dimension(moved));
  }
}

TEST_CASE("facet enumeration of a square and of a quadrant with an apex") {
  const auto square = enumerate_facets({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1), v2(Scalar(1) / 2, Scalar(1) / 2)}, {}, 2);
  REQUIRE(square.size() == 4);
  // normal·x >= offset; sorted by normal
  CHECK(square[0].normal == v2(-1, 0));
  CHECK(square[0].offset == -1);
  CHECK(square[3].normal == v2(1, 0));
  CHECK(square[3].offset == 0);

  const auto a = enumerate_facets({v2(1, 0), v2(0, 1)}, {v2(1, 0), v2(0, 1)}, 2);
  REQUIRE(a.size() == 3);
  CHECK(a[2].normal == v2(1, 1));
  CHECK(a[2].offset == 1);

  CHECK_THROWS_AS(enumerate_facets({v2(0, 0), v2(1, 1)}, {}, 2), Error);
}
