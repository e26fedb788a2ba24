#include "coconvex/commands.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "coconvex/error.hpp"
#include "coconvex/oracle.hpp"

namespace coconvex {

int exit_code(const CheckReport& report) { return report.verdict == Verdict::Violated ? ExitViolated : ExitOk; }

CheckReport run_check(const std::string& check, const io::Instance& instance, const std::vector<std::string>& names,
                      const Scalar& lambda, const std::string& hyperplane) {
  if (names.size() != 2) throw Error(ErrorCode::InvalidArgument, "check " + check + " takes two object names");
  if (check == "bm") return check_reversed_bm(instance.body(names[0]), instance.body(names[1]), lambda);
  if (check == "convexity") return check_volume_convexity(instance.body(names[0]), instance.body(names[1]), lambda);
  if (check == "cylinder") {
    return check_cylinder_concavity(instance.polytope(names[0]), instance.polytope(names[1]), lambda,
                                    instance.hyperplane(hyperplane));
  }
  throw Error(ErrorCode::UnknownName, "no check named '" + check + "'");
}

int FuzzSummary::violated() const {
  int n = segment_disagree + uncertified_equal;
  for (const auto& [check, counts] : verdicts) n += counts[static_cast<int>(Verdict::Violated)];
  return n;
}

namespace {

std::string hex(std::uint64_t x) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << x;
  return s.str();
}

// The equality class each check must attach to an Equal verdict.
bool certifies(const std::string& check, const EqualityClass& c) {
  if (check == "bm") return std::holds_alternative<Homothets>(c);
  if (check == "convexity") return std::holds_alternative<Identical>(c);
  return std::holds_alternative<OrthogonalSegmentTranslate>(c);
}

class Fuzzer {
 public:
  Fuzzer(const FuzzOptions& options, FuzzSummary& summary) : options_(options), summary_(summary) {}

  void trial(int index) {
    const std::uint64_t s = oracle::derive_seed(options_.seed, static_cast<std::uint64_t>(index));
    const int dim = options_.dim;
    oracle::RandomSpec spec{dim, dim + index % 2, 2 + index % 3, 4, oracle::derive_seed(s, 0)};
    const PolyhedralCone cone = options_.cone ? *options_.cone : oracle::random_cone(spec);
    spec.seed = oracle::derive_seed(s, 1);
    const CoconvexBody k1 = oracle::random_coconvex(cone, spec);
    oracle::Rng rng(oracle::derive_seed(s, 3));

    // every eighth trial replays K1 and every eighth is a homothet, so the
    // equality branches are exercised alongside generic pairs
    std::optional<CoconvexBody> k2;
    if (index % 8 == 0) {
      k2 = k1;
    } else if (index % 8 == 1) {
      k2 = scale(k1, oracle::random_rational(rng, Scalar(1) / 4, 3));
    } else {
      spec.seed = oracle::derive_seed(s, 2);
      k2 = oracle::random_coconvex(cone, spec);
    }
    const Scalar lambda = oracle::random_lambda(rng);

    for (const std::string check : {"bm", "convexity"}) {
      run(index, s, check, BodyWitness{check, k1, *k2, lambda}, [&] {
        return check == "bm" ? check_reversed_bm(k1, *k2, lambda) : check_volume_convexity(k1, *k2, lambda);
      });
    }

    Vector up = Vector::Zero(dim);
    up(dim - 1) = 1;
    const Hyperplane floor(up, 0);
    spec.seed = oracle::derive_seed(s, 4);
    const Polytope base = oracle::random_base(spec);
    spec.seed = oracle::derive_seed(s, 5);
    auto [a0, a1] = oracle::random_cylinder_pair(base, floor, spec);
    if (index % 4 == 0) {
      const Scalar t = oracle::random_rational(rng, Scalar(1) / 64, 2);
      a1 = minkowski_sum(a0, convex_hull({Vector::Zero(dim), Vector(-t * up)}));
    }
    run(index, s, "cylinder", CylinderWitness{a0, a1, lambda, floor},
        [&] { return check_cylinder_concavity(a0, a1, lambda, floor); });

    segment(index, s, k1, Vector::Zero(dim), Vector::Zero(dim), true);
    Vector v(dim);
    do {
      for (Eigen::Index i = 0; i < dim; ++i) v(i) = oracle::random_rational(rng, -2, 2);
    } while (v.isZero());
    if (index % 2 == 0) {
      // a direction inside C, the case where A + U = A
      v = Vector::Zero(dim);
      for (const auto& g : cone.generators()) v += oracle::random_rational(rng, Scalar(1) / 64, 1) * g;
    }
    const Vector u0 = index % 3 == 0 ? Vector(v / 2) : Vector(Vector::Zero(dim));
    segment(index, s, k1, u0, u0 + v, false);
  }

 private:
  template <typename Check>
  void run(int index, std::uint64_t s, const std::string& name, const Witness& witness, Check&& check) {
    auto& counts = summary_.verdicts[name];
    std::string verdict;
    try {
      const CheckReport report = check();
      ++counts[static_cast<int>(report.verdict)];
      verdict = to_string(report.verdict);
      if (report.verdict == Verdict::Equal) {
        ++(certifies(name, report.equality_class) ? summary_.certified_equal : summary_.uncertified_equal);
      }
      if (report.verdict == Verdict::Violated) write(name, s, io::witness_instance(witness, Verdict::Violated));
    } catch (const Error& e) {
      // an inconclusive or failing check is reported like a violation
      ++counts[static_cast<int>(Verdict::Violated)];
      verdict = "Violated";
      auto doc = io::witness_instance(witness, Verdict::Violated);
      doc.verdict = e.what();
      write(name, s, doc);
    }
    record(index, s, name, verdict);
  }

  void segment(int index, std::uint64_t s, const CoconvexBody& k, const Vector& u0, const Vector& u1, bool expected) {
    const bool ok = check_segment_remark(k, u0, u1) == expected;
    ++(ok ? summary_.segment_agree : summary_.segment_disagree);
    if (!ok) {
      io::Instance doc;
      doc.dim = static_cast<int>(k.dim());
      doc.cone = k.cone();
      doc.bodies.emplace("K", k);
      doc.polytopes.emplace("U", convex_hull({u0, u1}));
      doc.check = "segment";
      doc.verdict = "Violated";
      write("segment", s, doc);
    }
    record(index, s, "segment", ok ? (expected ? "Holds" : "Fails") : "Violated");
  }

  void write(const std::string& check, std::uint64_t s, const io::Instance& doc) {
    std::filesystem::create_directories(options_.witness_dir);
    const auto path = options_.witness_dir / ("witness-" + check + "-" + hex(s) + ".json");
    std::ofstream(path) << io::serialize(doc);
    summary_.witnesses.push_back(path.string());
  }

  void record(int index, std::uint64_t s, const std::string& check, const std::string& verdict) {
    if (!options_.log) return;
    *options_.log << "trial=" << index << " seed=" << hex(s) << " dim=" << options_.dim << " check=" << check
                  << " verdict=" << verdict << '\n';
  }

  const FuzzOptions& options_;
  FuzzSummary& summary_;
};

}  // namespace

FuzzSummary run_fuzz(const FuzzOptions& options) {
  if (options.dim < 2 || options.dim > 4) throw Error(ErrorCode::InvalidArgument, "fuzz dimension must be 2, 3 or 4");
  if (options.count < 1) throw Error(ErrorCode::InvalidArgument, "fuzz count must be positive");
  if (options.cone && options.cone->dim() != options.dim) {
    throw Error(ErrorCode::DimensionMismatch, "instance cone and --dim differ");
  }
  FuzzSummary summary;
  summary.dim = options.dim;
  summary.count = options.count;
  summary.seed = options.seed;
  for (const char* check : {"bm", "convexity", "cylinder"}) summary.verdicts[check] = {0, 0, 0};
  Fuzzer fuzzer(options, summary);
  for (int i = 0; i < options.count; ++i) fuzzer.trial(i);
  return summary;
}

std::string to_string(const FuzzSummary& s) {
  std::ostringstream out;
  out << "fuzz dim=" << s.dim << " count=" << s.count << " seed=" << s.seed << '\n';
  for (const auto& [check, c] : s.verdicts) {
    out << "check=" << check << " StrictlyLess=" << c[0] << " Equal=" << c[1] << " Violated=" << c[2] << '\n';
  }
  out << "check=segment agree=" << s.segment_agree << " disagree=" << s.segment_disagree << '\n';
  out << "equal certified=" << s.certified_equal << " uncertified=" << s.uncertified_equal << '\n';
  out << "violated=" << s.violated() << '\n';
  for (const auto& w : s.witnesses) out << "witness=" << w << '\n';
  return out.str();
}

}  // namespace coconvex
