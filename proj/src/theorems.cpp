#include "coconvex/theorems.hpp"

#include <gmp.h>

#include "coconvex/error.hpp"

namespace coconvex {

namespace {

constexpr int kStartBits = 64;
constexpr int kMaxBits = 1024;

void require_open_lambda(const Scalar& lambda) {
  if (lambda <= 0 || lambda >= 1) throw Error(ErrorCode::LambdaOutOfRange, "lambda " + to_string(lambda) + " not in (0,1)");
}

Integer iroot(const Integer& x, int n) {
  Integer out;
  mpz_root(out.backend().data(), x.backend().data(), static_cast<unsigned long>(n));
  return out;
}

Integer pow2(long bits) { return Integer(1) << bits; }

}  // namespace

RootExpression::RootExpression(std::vector<RootTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "empty root expression");
  for (const auto& t : terms_) {
    if (t.coefficient <= 0 || t.radicand < 0 || t.degree < 1) {
      throw Error(ErrorCode::InvalidArgument, "root terms need c > 0, r >= 0, n >= 1");
    }
  }
}

std::string to_string(const RootExpression& e) {
  std::string out;
  for (const auto& t : e.terms()) {
    if (!out.empty()) out += "+";
    if (t.coefficient != 1) out += to_string(t.coefficient) + "*";
    if (t.degree == 1) {
      out += "(" + to_string(t.radicand) + ")";
    } else {
      out += "(" + to_string(t.radicand) + ")^(1/" + std::to_string(t.degree) + ")";
    }
  }
  return out;
}

Interval enclose(const RootExpression& e, int bits) {
  Interval out{Scalar(0), Scalar(0)};
  const Scalar unit = Scalar(1) / Scalar(pow2(bits));
  for (const auto& t : e.terms()) {
    if (t.degree == 1) {
      out.lo += t.coefficient * t.radicand;
      out.hi += t.coefficient * t.radicand;
      continue;
    }
    // floor(r^(1/n) · 2^bits) = iroot(floor(r · 2^(bits·n)), n)
    const Integer scaled_num = numerator(t.radicand) * pow2(static_cast<long>(bits) * t.degree);
    const Integer floor_value = scaled_num / denominator(t.radicand);
    const Integer root = iroot(floor_value, t.degree);
    Integer power(1);
    for (int i = 0; i < t.degree; ++i) power *= root;
    const bool exact = power * denominator(t.radicand) == scaled_num;
    out.lo += t.coefficient * Scalar(root) * unit;
    out.hi += t.coefficient * Scalar(exact ? root : Integer(root + 1)) * unit;
  }
  return out;
}

Ordering certified_root_compare(const RootExpression& a, const RootExpression& b, EqualityCertificate certificate) {
  for (int bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const Interval x = enclose(a, bits);
    const Interval y = enclose(b, bits);
    if (x.hi < y.lo) return Ordering::Less;
    if (x.lo > y.hi) return Ordering::Greater;
    if (x.exact() && y.exact()) return Ordering::Equal;  // both values are rational and coincide
  }
  if (certificate == EqualityCertificate::Structural) return Ordering::Equal;
  throw Error(ErrorCode::PrecisionExhausted, "enclosures still overlap at " + std::to_string(kMaxBits) + " bits");
}

Polytope OrthogonalSegmentTranslate::segment() const { return convex_hull({from * normal, to * normal}); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictlyLess: return "StrictlyLess";
    case Verdict::Equal: return "Equal";
    case Verdict::Violated: return "Violated";
  }
  return "Unknown";
}

std::string to_string(const EqualityClass& c) {
  struct Printer {
    std::string operator()(const NotEqual&) const { return "NotEqual"; }
    std::string operator()(const Identical&) const { return "Identical"; }
    std::string operator()(const Homothets& h) const { return "Homothets(" + to_string(h.alpha) + ")"; }
    std::string operator()(const OrthogonalSegmentTranslate& s) const {
      return std::string("OrthogonalSegmentTranslate(") + (s.first_is_larger ? "A0=A1+U" : "A1=A0+U") + ",U=[" +
             to_string(s.from) + "," + to_string(s.to) + "]*normal)";
    }
  };
  return std::visit(Printer{}, c);
}

std::string to_string(const Quantity& q) {
  return std::visit([](const auto& value) { return to_string(value); }, q);
}

std::string to_record(const CheckReport& report) {
  return "verdict=" + to_string(report.verdict) + " lhs=" + to_string(report.lhs) + " rhs=" + to_string(report.rhs) +
         " equality_class=" + to_string(report.equality_class);
}

CheckReport check_volume_convexity(const CoconvexBody& k1, const CoconvexBody& k2, const Scalar& lambda) {
  require_open_lambda(lambda);
  const Scalar lhs = volume(combine(lambda, k1, k2));
  const Scalar rhs = (1 - lambda) * volume(k1) + lambda * volume(k2);
  const bool identical = equals(k1, k2);

  CheckReport report{lhs, rhs, Verdict::StrictlyLess, NotEqual{}, std::nullopt};
  if (lhs < rhs && !identical) {
    report.verdict = Verdict::StrictlyLess;
  } else if (lhs == rhs && identical) {
    report.verdict = Verdict::Equal;
    report.equality_class = Identical{};
  } else {
    report.verdict = Verdict::Violated;
    report.witness = BodyWitness{"convexity", k1, k2, lambda};
  }
  return report;
}

CheckReport check_reversed_bm(const CoconvexBody& k1, const CoconvexBody& k2, const Scalar& lambda) {
  require_open_lambda(lambda);
  const int n = static_cast<int>(k1.dim());
  const RootExpression lhs = RootExpression::root(volume(combine(lambda, k1, k2)), n);
  const RootExpression rhs({{1 - lambda, volume(k1), n}, {lambda, volume(k2), n}});
  const auto alpha = detect_homothety(k1, k2);

  CheckReport report{lhs, rhs, Verdict::StrictlyLess, NotEqual{}, std::nullopt};
  const Ordering order =
      certified_root_compare(lhs, rhs, alpha ? EqualityCertificate::Structural : EqualityCertificate::None);
  if (alpha && order == Ordering::Equal) {
    report.verdict = Verdict::Equal;
    report.equality_class = Homothets{*alpha};
  } else if (!alpha && order == Ordering::Less) {
    report.verdict = Verdict::StrictlyLess;
  } else {
    report.verdict = Verdict::Violated;
    report.witness = BodyWitness{"bm", k1, k2, lambda};
  }
  return report;
}

std::optional<OrthogonalSegmentTranslate> classify_cylinder_equality(const Polytope& a0, const Polytope& a1,
                                                                    const Hyperplane& h) {
  if (!(project_onto(a0, h) == project_onto(a1, h))) {
    throw Error(ErrorCode::ProjectionMismatch, "the bodies project onto different bases");
  }
  const Vector& a = h.normal;
  const Scalar nn = a.squaredNorm();
  const Vector minus_a = -a;
  auto attempt = [&](const Polytope& larger, const Polytope& smaller,
                     bool first_is_larger) -> std::optional<OrthogonalSegmentTranslate> {
    // support values fix the only candidate: h_L(±a) = h_S(±a) + h_U(±a)
    const Scalar to = (support(larger, a) - support(smaller, a)) / nn;
    const Scalar from = (support(smaller, minus_a) - support(larger, minus_a)) / nn;
    if (from > to) return std::nullopt;
    OrthogonalSegmentTranslate candidate{first_is_larger, from, to, a};
    if (minkowski_sum(smaller, candidate.segment()) == larger) return candidate;
    return std::nullopt;
  };
  if (auto found = attempt(a0, a1, true)) return found;
  return attempt(a1, a0, false);
}

CheckReport check_cylinder_concavity(const Polytope& a0, const Polytope& a1, const Scalar& lambda, const Hyperplane& h) {
  require_open_lambda(lambda);
  if (a0.dim() != a1.dim()) throw Error(ErrorCode::DimensionMismatch, "bodies of different dimension");
  const auto segment = classify_cylinder_equality(a0, a1, h);
  const Scalar lhs = volume(minkowski_sum(scale(a0, 1 - lambda), scale(a1, lambda)));
  const Scalar rhs = (1 - lambda) * volume(a0) + lambda * volume(a1);

  CheckReport report{lhs, rhs, Verdict::StrictlyLess, NotEqual{}, std::nullopt};
  if (lhs > rhs && !segment) {
    report.verdict = Verdict::StrictlyLess;
  } else if (lhs == rhs && segment) {
    report.verdict = Verdict::Equal;
    report.equality_class = *segment;
  } else {
    report.verdict = Verdict::Violated;
    report.witness = CylinderWitness{a0, a1, lambda, h};
  }
  return report;
}

bool check_segment_remark(const CoconvexBody& k, const Vector& u0, const Vector& u1) {
  require_dim(u0, k.dim(), "segment endpoint");
  require_dim(u1, k.dim(), "segment endpoint");
  const Hyperplane h = choose_hyperplane(k.cone(), {k});
  const Polytope cap = build_cap(k, h);
  PointList moved;
  for (const auto& v : cap.vertices()) {
    moved.push_back(v + u0);
    moved.push_back(v + u1);
  }
  const Polytope shifted = convex_hull(std::move(moved));

  PointList apexes;
  for (const auto& v : shifted.vertices()) {
    if (!contains(k.cone(), v) || side_of(h, v) == Side::Positive) return false;
    if (side_of(h, v) == Side::Negative) apexes.push_back(v);
  }
  if (apexes.empty()) return false;
  try {
    const auto candidate = make_coconvex(k.cone(), apexes);
    return build_cap(candidate, h) == shifted;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace coconvex
