// coconvex: exact volumes and inequality checks for coconvex bodies.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coconvex/commands.hpp"
#include "coconvex/error.hpp"
#include "coconvex/io.hpp"

using namespace coconvex;

namespace {

std::string points(const PointList& pts) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i ? "," : "") << '(';
    for (Eigen::Index j = 0; j < pts[i].size(); ++j) out << (j ? "," : "") << to_string(pts[i](j));
    out << ')';
  }
  out << '}';
  return out.str();
}

void print_body(const std::string& name, const CoconvexBody& k) {
  std::cout << name << " apexes=" << points(k.apexes()) << " volume=" << to_string(volume(k)) << '\n';
}

// Adds `result` to the instance and writes it when --output was given.
void save(const io::Instance& base, const std::string& name, const CoconvexBody& result, const std::string& path) {
  if (path.empty()) return;
  io::Instance out = base;
  out.bodies.insert_or_assign(name, result);
  std::ofstream(path) << io::serialize(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry of coconvex bodies"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string lambda_text;
  std::string output;
  std::string result_name = "result";
  std::vector<std::string> names;

  auto* volume_cmd = app.add_subcommand("volume", "Exact volumes of named bodies and polytopes");
  volume_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  volume_cmd->add_option("names", names, "Object names (default: all)");

  auto* combine_cmd = app.add_subcommand("combine", "(1-λ)K1 ⊕ λK2");
  combine_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  combine_cmd->add_option("--lambda", lambda_text, "λ in [0,1] as p/q")->required();
  combine_cmd->add_option("names", names, "K1 K2")->expected(2)->required();

  auto* oplus_cmd = app.add_subcommand("oplus", "K1 ⊕ K2");
  oplus_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  oplus_cmd->add_option("names", names, "K1 K2")->expected(2)->required();

  for (auto* cmd : {combine_cmd, oplus_cmd}) {
    cmd->add_option("--output", output, "Write the instance with the result added");
    cmd->add_option("--name", result_name, "Name of the result body")->capture_default_str();
  }

  std::string check_kind;
  std::string hyperplane = "h";
  std::string witness_path = "witness.json";
  auto* check_cmd = app.add_subcommand("check", "Check an inequality on named objects");
  check_cmd->add_option("kind", check_kind, "bm | convexity | cylinder")
      ->required()
      ->check(CLI::IsMember({"bm", "convexity", "cylinder"}));
  check_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  check_cmd->add_option("--lambda", lambda_text, "λ in (0,1) as p/q")->required();
  check_cmd->add_option("--hyperplane", hyperplane, "Hyperplane name for the cylinder check")->capture_default_str();
  check_cmd->add_option("--witness", witness_path, "Where a violation witness is written")->capture_default_str();
  check_cmd->add_option("names", names, "Two bodies, or two polytopes for cylinder")->expected(2)->required();

  FuzzOptions fuzz;
  std::string witness_dir = ".";
  bool log = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random instances through every check");
  fuzz_cmd->add_option("--instance", instance_path, "Use the cone of this instance");
  fuzz_cmd->add_option("--dim", fuzz.dim, "Dimension (2-4)")->required()->check(CLI::Range(2, 4));
  fuzz_cmd->add_option("--count", fuzz.count, "Number of trials")->required()->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fuzz.seed, "Base seed")->required();
  fuzz_cmd->add_option("--witness-dir", witness_dir, "Directory for witness files")->capture_default_str();
  fuzz_cmd->add_flag("--log", log, "Print one record per trial and check");

  std::string body_name;
  auto* plot_cmd = app.add_subcommand("plot", "SVG figure of a planar body and its cap");
  plot_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  plot_cmd->add_option("--body", body_name, "Body name")->required();
  plot_cmd->add_option("--hyperplane", hyperplane, "Hyperplane name (default: automatic)");
  plot_cmd->add_option("--output", output, "SVG file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitOk : ExitUsage;
  }

  try {
    if (*fuzz_cmd) {
      if (!instance_path.empty()) fuzz.cone = io::load_instance(instance_path).cone;
      fuzz.witness_dir = witness_dir;
      if (log) fuzz.log = &std::cout;
      const FuzzSummary summary = run_fuzz(fuzz);
      std::cout << to_string(summary);
      return summary.exit_code();
    }

    const io::Instance instance = io::load_instance(instance_path);
    const Scalar lambda = lambda_text.empty() ? Scalar(0) : parse_scalar(lambda_text);

    if (*volume_cmd) {
      if (names.empty()) {
        for (const auto& [name, body] : instance.bodies) names.push_back(name);
        for (const auto& [name, p] : instance.polytopes) names.push_back(name);
      }
      for (const auto& name : names) {
        if (instance.bodies.contains(name)) {
          std::cout << name << " volume=" << to_string(volume(instance.body(name))) << '\n';
        } else {
          std::cout << name << " volume=" << to_string(volume(instance.polytope(name))) << '\n';
        }
      }
    } else if (*combine_cmd || *oplus_cmd) {
      const auto& k1 = instance.body(names[0]);
      const auto& k2 = instance.body(names[1]);
      const CoconvexBody result = *combine_cmd ? combine(lambda, k1, k2) : oplus(k1, k2);
      print_body(result_name, result);
      save(instance, result_name, result, output);
    } else if (*check_cmd) {
      const CheckReport report = run_check(check_kind, instance, names, lambda, hyperplane);
      std::cout << to_record(report) << '\n';
      if (report.verdict == Verdict::Violated && report.witness) {
        std::ofstream(witness_path) << io::serialize(io::witness_instance(*report.witness, report.verdict));
        std::cout << "witness=" << witness_path << '\n';
      }
      return exit_code(report);
    } else if (*plot_cmd) {
      io::FigureSpec spec{body_name, {}, {}};
      if (!hyperplane.empty() && plot_cmd->count("--hyperplane")) spec.hyperplane = instance.hyperplane(hyperplane);
      const std::string svg = io::emit_figure(spec, instance);
      if (output.empty()) {
        std::cout << svg;
      } else {
        std::ofstream(output) << svg;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitUsage;
  }
  return ExitOk;
}
