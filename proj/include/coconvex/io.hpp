#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "coconvex/coconvex.hpp"
#include "coconvex/theorems.hpp"

namespace coconvex::io {

/// A parsed instance document. Every object has been through its validating
/// constructor. Witness documents add `check`, `lambda` and `verdict`.
struct Instance {
  int dim = 0;
  std::optional<PolyhedralCone> cone;
  std::map<std::string, CoconvexBody> bodies;
  std::map<std::string, Polytope> polytopes;
  std::map<std::string, Hyperplane> hyperplanes;

  std::optional<std::string> check;
  std::optional<Scalar> lambda;
  std::optional<std::string> verdict;

  // Lookups throw UnknownName.
  const CoconvexBody& body(const std::string& name) const;
  const Polytope& polytope(const std::string& name) const;
  const Hyperplane& hyperplane(const std::string& name) const;
};

bool operator==(const Instance& a, const Instance& b);

/// Strict parser: unknown fields raise SchemaError, malformed JSON or
/// rationals raise SyntaxError, and geometry errors are re-raised with the
/// name of the offending object.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

/// Canonical JSON: sorted keys, minimal apex and vertex lists, reduced
/// rationals. parse_instance(serialize(i)) == i.
std::string serialize(const Instance& instance);

/// The witness of a failed check as an instance document. Bodies are named
/// K1 and K2; cylinder witnesses use polytopes A0, A1 and hyperplane h.
Instance witness_instance(const Witness& witness, Verdict verdict);

/// Rectangle [lo, hi] in model coordinates.
using Viewport = std::pair<Vector, Vector>;

struct FigureSpec {
  std::string body;
  std::optional<Hyperplane> hyperplane;  // default: choose_hyperplane
  std::optional<Viewport> viewport;      // default: C ∩ H⁺ with a margin
};

/// SVG with the cone rays, H, the section B, the body K and the hatched cap,
/// each labeled. Planar instances only; throws UnsupportedDimension.
std::string emit_figure(const FigureSpec& spec, const Instance& instance);
std::string emit_figure(const CoconvexBody& k, const Hyperplane& h, const std::optional<Viewport>& viewport = {});

}  // namespace coconvex::io
