#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coconvex/coconvex.hpp"
#include "coconvex/polytope.hpp"

namespace coconvex {

/// c · r^(1/n) with c > 0, r >= 0, n >= 1.
struct RootTerm {
  Scalar coefficient;
  Scalar radicand;
  int degree = 1;
};

/// A positive combination of n-th roots of rationals.
class RootExpression {
 public:
  explicit RootExpression(std::vector<RootTerm> terms);
  static RootExpression root(const Scalar& radicand, int degree) { return RootExpression({{Scalar(1), radicand, degree}}); }

  const std::vector<RootTerm>& terms() const { return terms_; }

 private:
  std::vector<RootTerm> terms_;
};

std::string to_string(const RootExpression& e);

/// Closed interval with exact rational endpoints.
struct Interval {
  Scalar lo;
  Scalar hi;
  bool exact() const { return lo == hi; }
};

/// Enclosure of the expression's value using `bits` fractional bits per root.
Interval enclose(const RootExpression& e, int bits);

enum class Ordering { Less, Equal, Greater };

/// Whether the caller holds a structural proof that the two values are equal.
enum class EqualityCertificate { None, Structural };

/// Orders the two real values. Strict answers come from disjoint enclosures
/// at 64, 128, ..., 1024 bits; Equal needs either exact enclosures (all roots
/// rational) or a structural certificate. Throws PrecisionExhausted otherwise.
Ordering certified_root_compare(const RootExpression& a, const RootExpression& b,
                                EqualityCertificate certificate = EqualityCertificate::None);

enum class Verdict { StrictlyLess, Equal, Violated };

struct NotEqual {};
struct Homothets {
  Scalar alpha;  // first = alpha · second
};
struct Identical {};
/// larger = smaller + U with U = {s·normal : from <= s <= to}.
struct OrthogonalSegmentTranslate {
  bool first_is_larger;  // A0 = A1 + U; otherwise A1 = A0 + U
  Scalar from;
  Scalar to;
  Vector normal;

  Scalar length() const { return to - from; }  // in units of |normal|
  Polytope segment() const;
};
using EqualityClass = std::variant<NotEqual, Homothets, Identical, OrthogonalSegmentTranslate>;

using Quantity = std::variant<Scalar, RootExpression>;

struct BodyWitness {
  std::string check;
  CoconvexBody first;
  CoconvexBody second;
  Scalar lambda;
};
struct CylinderWitness {
  Polytope first;
  Polytope second;
  Scalar lambda;
  Hyperplane hyperplane;
};
using Witness = std::variant<BodyWitness, CylinderWitness>;

/// Outcome of checking one inequality on one instance. The verdict speaks
/// about the strict form of the checked inequality: StrictlyLess means it
/// holds strictly, Equal means equality together with its structural
/// certificate, Violated carries the instance as a witness.
struct CheckReport {
  Quantity lhs;
  Quantity rhs;
  Verdict verdict = Verdict::StrictlyLess;
  EqualityClass equality_class = NotEqual{};
  std::optional<Witness> witness;
};

std::string to_string(Verdict v);
std::string to_string(const EqualityClass& c);
std::string to_string(const Quantity& q);

/// "verdict=<...> lhs=<...> rhs=<...> equality_class=<...>"
std::string to_record(const CheckReport& report);

/// V((1-λ)K1 ⊕ λK2) <= (1-λ)V(K1) + λV(K2), equality iff K1 = K2.
CheckReport check_volume_convexity(const CoconvexBody& k1, const CoconvexBody& k2, const Scalar& lambda);

/// V((1-λ)K1 ⊕ λK2)^(1/n) <= (1-λ)V(K1)^(1/n) + λV(K2)^(1/n), equality iff
/// K1 = αK2.
CheckReport check_reversed_bm(const CoconvexBody& k1, const CoconvexBody& k2, const Scalar& lambda);

/// For bodies with the same orthogonal projection onto h:
/// V((1-λ)A0 + λA1) >= (1-λ)V(A0) + λV(A1), equality iff one is the other
/// plus a segment orthogonal to h.
CheckReport check_cylinder_concavity(const Polytope& a0, const Polytope& a1, const Scalar& lambda, const Hyperplane& h);

/// Finds U orthogonal to h with A0 = A1 + U or A1 = A0 + U; nullopt means
/// the pair is distinct. Throws ProjectionMismatch.
std::optional<OrthogonalSegmentTranslate> classify_cylinder_equality(const Polytope& a0, const Polytope& a1,
                                                                    const Hyperplane& h);

/// Whether cap_H(K) + U is again the cap of a C-coconvex body for the
/// body's default hyperplane H; U is the segment [u0, u1]. Holds only for
/// U = {0}.
bool check_segment_remark(const CoconvexBody& k, const Vector& u0, const Vector& u1);

}  // namespace coconvex
