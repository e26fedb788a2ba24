#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace coconvex {

// Exact arithmetic only. gmp_rational keeps values canonical after every
// arithmetic operation; expression templates are off so the type composes
// cleanly with Eigen's own expression machinery.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Scalar>;
using Matrix = MatrixX<Scalar>;
using PointList = std::vector<Vector>;

/// Parses "p", "-p" or "p/q" (q > 0). Throws Error(SyntaxError) otherwise.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

/// Decimal rendering with `digits` significant digits; display only.
std::string to_decimal(const Scalar& value, int digits = 6);

double to_double(const Scalar& value);

int sign(const Scalar& value);

Vector make_vector(std::initializer_list<Scalar> coords);

/// Strict lexicographic order on coordinates. Vectors must share a dimension.
bool lex_less(const Vector& a, const Vector& b);

/// Structural equality (same size, same coordinates).
bool same(const Vector& a, const Vector& b);

/// Sorts lexicographically and removes duplicates.
void canonicalize(PointList& points);

/// The primitive integer vector positively proportional to `v` (nonzero).
Vector primitive(const Vector& v);

/// Throws DimensionMismatch unless `v` has `dim` coordinates.
void require_dim(const Vector& v, Eigen::Index dim, std::string_view what);

}  // namespace coconvex
