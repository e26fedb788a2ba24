#include "coconvex/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "coconvex/error.hpp"

namespace coconvex {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  const Integer d(std::string{den});
  if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  Scalar value = Scalar(Integer(std::string{num})) / Scalar(d);
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Scalar& value) { return value.convert_to<double>(); }

std::string to_decimal(const Scalar& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_double(value));
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

int sign(const Scalar& value) { return value.sign(); }

Vector make_vector(std::initializer_list<Scalar> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

bool same(const Vector& a, const Vector& b) { return a.size() == b.size() && a == b; }

void canonicalize(PointList& points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(), same), points.end());
}

Vector primitive(const Vector& v) {
  Integer lcm_den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v(i)));
  Integer g(0);
  std::vector<Integer> ints(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v(i)) * (lcm_den / denominator(v(i)));
    g = boost::multiprecision::gcd(g, ints[i]);
  }
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "primitive direction of the zero vector");
  if (g < 0) g = -g;
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Scalar(ints[i] / g);
  return out;
}

void require_dim(const Vector& v, Eigen::Index dim, std::string_view what) {
  if (v.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(v.size()) +
                                                  ", expected " + std::to_string(dim));
  }
}

}  // namespace coconvex
