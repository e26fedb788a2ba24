#include "coconvex/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "coconvex/error.hpp"
#include "json.hpp"

namespace coconvex::io {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

// Re-raises a geometry error with the name of the object that caused it.
template <typename F>
auto named(const std::string& what, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    std::string detail = e.what();
    const std::string prefix = std::string(to_string(e.code()));
    if (detail.starts_with(prefix)) detail.erase(0, prefix.size());
    if (detail.starts_with(": ")) detail.erase(0, 2);
    throw Error(e.code(), what + (detail.empty() ? "" : ": " + detail));
  }
}

void only_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) schema(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) schema(path, "unknown field '" + key + "'");
  }
}

const json& required(const json& j, const std::string& path, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) schema(path, std::string("missing field '") + key + "'");
  return *it;
}

Scalar scalar_from(const json& j, const std::string& path) {
  if (j.is_string()) {
    return named(path, [&] { return parse_scalar(j.get<std::string>()); });
  }
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  schema(path, "expected a rational string such as \"3/4\"");
}

Vector vector_from(const json& j, const std::string& path, int dim) {
  if (!j.is_array()) schema(path, "expected an array of rationals");
  if (static_cast<int>(j.size()) != dim) {
    throw Error(ErrorCode::DimensionMismatch, path + ": expected " + std::to_string(dim) + " coordinates");
  }
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = scalar_from(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

PointList points_from(const json& j, const std::string& path, int dim) {
  if (!j.is_array()) schema(path, "expected an array of points");
  PointList points;
  for (std::size_t i = 0; i < j.size(); ++i) points.push_back(vector_from(j[i], path + "[" + std::to_string(i) + "]", dim));
  return points;
}

std::string string_from(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

template <typename T>
void for_each_named(const json& doc, const char* key, T&& each) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_object()) schema(key, "expected an object of named entries");
  for (const auto& [name, value] : it->items()) each(name, value, std::string(key) + "." + name);
}

json to_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

json to_json(const PointList& points) {
  json a = json::array();
  for (const auto& p : points) a.push_back(to_json(p));
  return a;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

template <typename Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const char* kind) {
  const auto it = map.find(name);
  if (it == map.end()) throw Error(ErrorCode::UnknownName, std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

}  // namespace

const CoconvexBody& Instance::body(const std::string& name) const { return lookup(bodies, name, "body"); }
const Polytope& Instance::polytope(const std::string& name) const { return lookup(polytopes, name, "polytope"); }
const Hyperplane& Instance::hyperplane(const std::string& name) const {
  return lookup(hyperplanes, name, "hyperplane");
}

bool operator==(const Instance& a, const Instance& b) {
  return a.dim == b.dim && a.cone == b.cone && a.bodies == b.bodies && a.polytopes == b.polytopes &&
         a.hyperplanes == b.hyperplanes && a.check == b.check && a.lambda == b.lambda && a.verdict == b.verdict;
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                            ": malformed JSON");
  }
  only_keys(doc, "document", {"dim", "cone", "bodies", "polytopes", "hyperplanes", "check", "lambda", "verdict"});

  Instance out;
  const json& dim = required(doc, "document", "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 1) schema("dim", "expected a positive integer");
  out.dim = dim.get<int>();

  if (const auto it = doc.find("cone"); it != doc.end()) {
    only_keys(*it, "cone", {"generators"});
    const PointList gens = points_from(required(*it, "cone", "generators"), "cone.generators", out.dim);
    out.cone = named("cone", [&] { return validate(gens); });
  }

  for_each_named(doc, "bodies", [&](const std::string& name, const json& j, const std::string& path) {
    only_keys(j, path, {"apexes"});
    const PointList apexes = points_from(required(j, path, "apexes"), path + ".apexes", out.dim);
    if (!out.cone) schema(path, "bodies need a cone");
    out.bodies.emplace(name, named("body '" + name + "'", [&] { return make_coconvex(*out.cone, apexes); }));
  });

  for_each_named(doc, "polytopes", [&](const std::string& name, const json& j, const std::string& path) {
    only_keys(j, path, {"vertices"});
    PointList vertices = points_from(required(j, path, "vertices"), path + ".vertices", out.dim);
    out.polytopes.emplace(name, named("polytope '" + name + "'", [&] { return convex_hull(std::move(vertices)); }));
  });

  for_each_named(doc, "hyperplanes", [&](const std::string& name, const json& j, const std::string& path) {
    only_keys(j, path, {"normal", "offset"});
    Vector normal = vector_from(required(j, path, "normal"), path + ".normal", out.dim);
    Scalar offset = scalar_from(required(j, path, "offset"), path + ".offset");
    out.hyperplanes.emplace(name, named("hyperplane '" + name + "'", [&] { return Hyperplane(normal, offset); }));
  });

  if (const auto it = doc.find("check"); it != doc.end()) out.check = string_from(*it, "check");
  if (const auto it = doc.find("lambda"); it != doc.end()) out.lambda = scalar_from(*it, "lambda");
  if (const auto it = doc.find("verdict"); it != doc.end()) out.verdict = string_from(*it, "verdict");
  return out;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return named(path, [&] { return parse_instance(text.str()); });
}

std::string serialize(const Instance& instance) {
  json doc;
  doc["dim"] = instance.dim;
  if (instance.cone) doc["cone"] = {{"generators", to_json(instance.cone->generators())}};
  for (const auto& [name, body] : instance.bodies) doc["bodies"][name] = {{"apexes", to_json(body.apexes())}};
  for (const auto& [name, p] : instance.polytopes) doc["polytopes"][name] = {{"vertices", to_json(p.vertices())}};
  for (const auto& [name, h] : instance.hyperplanes) {
    doc["hyperplanes"][name] = {{"normal", to_json(h.normal)}, {"offset", to_string(h.offset)}};
  }
  if (instance.check) doc["check"] = *instance.check;
  if (instance.lambda) doc["lambda"] = to_string(*instance.lambda);
  if (instance.verdict) doc["verdict"] = *instance.verdict;
  return doc.dump(2) + "\n";
}

Instance witness_instance(const Witness& witness, Verdict verdict) {
  Instance out;
  out.verdict = to_string(verdict);
  if (const auto* w = std::get_if<BodyWitness>(&witness)) {
    out.dim = static_cast<int>(w->first.dim());
    out.cone = w->first.cone();
    out.bodies.emplace("K1", w->first);
    out.bodies.emplace("K2", w->second);
    out.check = w->check;
    out.lambda = w->lambda;
  } else {
    const auto& c = std::get<CylinderWitness>(witness);
    out.dim = static_cast<int>(c.first.dim());
    out.polytopes.emplace("A0", c.first);
    out.polytopes.emplace("A1", c.second);
    out.hyperplanes.emplace("h", c.hyperplane);
    out.check = "cylinder";
    out.lambda = c.lambda;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Figures

namespace {

Scalar cross(const Vector& a, const Vector& b) { return a(0) * b(1) - a(1) * b(0); }

// Counter-clockwise order of the vertices of a convex polygon.
PointList ccw_order(PointList pts) {
  Vector c = Vector::Zero(2);
  for (const auto& p : pts) c += p;
  c /= Scalar(static_cast<long>(pts.size()));
  auto upper = [&](const Vector& p) { return p(1) > c(1) || (p(1) == c(1) && p(0) > c(0)); };
  std::sort(pts.begin(), pts.end(), [&](const Vector& a, const Vector& b) {
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return cross(a - c, b - c) > 0;
  });
  return pts;
}

class Svg {
 public:
  explicit Svg(const Viewport& view) : lo_(view.first), hi_(view.second) {
    const double w = to_double(hi_(0) - lo_(0)), h = to_double(hi_(1) - lo_(1));
    unit_ = std::max(w, h) / 100;
    const double px = 480 / std::max(w, h);
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * px) << "\" height=\"" << num(h * px)
         << "\" viewBox=\"" << to_decimal(lo_(0)) << ' ' << to_decimal(lo_(1)) << ' ' << num(w) << ' ' << num(h)
         << "\">\n"
         << "  <defs>\n"
         << "    <pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"" << num(3 * unit_) << "\" height=\""
         << num(3 * unit_) << "\" patternTransform=\"rotate(45)\">\n"
         << "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << num(3 * unit_) << "\" stroke=\"#555\" stroke-width=\""
         << num(0.6 * unit_) << "\"/>\n"
         << "    </pattern>\n"
         << "  </defs>\n"
         // model y grows upwards; the group flips it inside the same viewBox
         << "  <g transform=\"matrix(1 0 0 -1 0 " << to_decimal(lo_(1) + hi_(1)) << ")\">\n";
  }

  void polygon(const PointList& pts, const std::string& id, const std::string& label, const std::string& style) {
    out_ << "    <polygon id=\"" << id << "\" data-label=\"" << label << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i ? " " : "") << to_decimal(pts[i](0)) << ',' << to_decimal(pts[i](1));
    }
    out_ << "\" " << style << "/>\n";
  }

  void line(const Vector& a, const Vector& b, const std::string& id, const std::string& label, double width,
            bool dashed = false) {
    out_ << "    <line id=\"" << id << "\" data-label=\"" << label << "\" x1=\"" << to_decimal(a(0)) << "\" y1=\""
         << to_decimal(a(1)) << "\" x2=\"" << to_decimal(b(0)) << "\" y2=\"" << to_decimal(b(1))
         << "\" stroke=\"black\" stroke-width=\"" << num(width * unit_) << "\"";
    if (dashed) out_ << " stroke-dasharray=\"" << num(2 * unit_) << ' ' << num(unit_) << "\"";
    out_ << "/>\n";
  }

  // Labels are queued and written after the flipped group so the glyphs
  // stay upright.
  void label(const Vector& at, const std::string& text) { labels_.emplace_back(at, text); }

  std::string finish() {
    out_ << "  </g>\n";
    for (const auto& [at, text] : labels_) {
      out_ << "  <text x=\"" << to_decimal(at(0)) << "\" y=\"" << to_decimal(lo_(1) + hi_(1) - at(1))
           << "\" font-size=\"" << num(5 * unit_) << "\" font-family=\"serif\" text-anchor=\"middle\">" << text
           << "</text>\n";
    }
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static std::string num(double x) { return to_decimal(Scalar(x)); }

  Vector lo_, hi_;
  double unit_ = 1;
  std::ostringstream out_;
  std::vector<std::pair<Vector, std::string>> labels_;
};

Vector centroid(const PointList& pts) {
  Vector c = Vector::Zero(pts.front().size());
  for (const auto& p : pts) c += p;
  return c / Scalar(static_cast<long>(pts.size()));
}

}  // namespace

std::string emit_figure(const CoconvexBody& k, const Hyperplane& h, const std::optional<Viewport>& viewport) {
  if (k.dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "figures are planar only");
  const Polytope cap = build_cap(k, h);
  const Polytope section = truncate(k.cone(), h);

  // section endpoints on H, one per extreme ray
  PointList ends;
  for (const auto& g : k.cone().generators()) ends.push_back(g * (h.offset / h.normal.dot(g)));
  if (cross(ends[0], ends[1]) < 0) std::swap(ends[0], ends[1]);

  Viewport view;
  if (viewport) {
    view = *viewport;
  } else {
    auto [lo, hi] = bounding_box(section);
    const Vector margin = (hi - lo) / 5;
    view = {lo - margin, hi + margin};
  }
  if (!(view.first.array() < view.second.array()).all()) {
    throw Error(ErrorCode::DegenerateBox, "viewport has zero extent");
  }

  Svg svg(view);
  const Vector origin = Vector::Zero(2);
  const Scalar reach = Scalar(13) / 10;

  svg.polygon(ccw_order(cap.vertices()), "cap", "cap_H(K)", "fill=\"url(#hatch)\" stroke=\"#555\"");

  // K is star-shaped from the origin; its apexes already run along the
  // boundary of the complement, so angular order around 0 traces it.
  PointList body = k.apexes();
  std::sort(body.begin(), body.end(), [](const Vector& a, const Vector& b) { return cross(a, b) > 0; });
  body.insert(body.begin(), origin);
  svg.polygon(body, "K", "K", "fill=\"#9ecae1\" stroke=\"black\"");

  for (std::size_t i = 0; i < ends.size(); ++i) {
    svg.line(origin, ends[i] * reach, "ray" + std::to_string(i), "C", 0.6);
  }
  const Vector along = (ends[1] - ends[0]) / 4;
  svg.line(ends[0] - along, ends[1] + along, "H", "H", 0.4, true);
  svg.line(ends[0], ends[1], "B", "B", 1.2);

  const Vector mid = (ends[0] + ends[1]) / 2;
  svg.label(mid * reach, "C");
  svg.label(mid + (ends[1] - ends[0]) / 10 + (mid - origin) / 12, "B");
  svg.label(ends[1] + along * Scalar(3) / 5, "H");
  svg.label(ends[0] - along * Scalar(2) / 5 - mid * Scalar(2) / 25, "H⁺");
  svg.label(centroid(body), "K");
  svg.label(centroid(cap.vertices()), "cap_H(K)");
  return svg.finish();
}

std::string emit_figure(const FigureSpec& spec, const Instance& instance) {
  if (instance.dim != 2) throw Error(ErrorCode::UnsupportedDimension, "figures are planar only");
  const CoconvexBody& k = instance.body(spec.body);
  const Hyperplane h = spec.hyperplane ? *spec.hyperplane : choose_hyperplane(k.cone(), {k});
  return named("body '" + spec.body + "'", [&] { return emit_figure(k, h, spec.viewport); });
}

}  // namespace coconvex::io
