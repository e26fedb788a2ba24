#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coconvex/io.hpp"
#include "coconvex/theorems.hpp"

namespace coconvex {

/// Exit status contract shared by every command.
enum ExitCode : int { ExitOk = 0, ExitUsage = 1, ExitViolated = 2 };

int exit_code(const CheckReport& report);

/// Runs `check` ("bm", "convexity" or "cylinder") on named objects. Body
/// checks take two body names; the cylinder check takes two polytope names
/// and the hyperplane name.
CheckReport run_check(const std::string& check, const io::Instance& instance, const std::vector<std::string>& names,
                      const Scalar& lambda, const std::string& hyperplane = "h");

struct FuzzOptions {
  int dim = 2;
  int count = 100;
  std::uint64_t seed = 0;
  std::optional<PolyhedralCone> cone;  // fixed cone instead of a random one per trial
  std::filesystem::path witness_dir = ".";
  std::ostream* log = nullptr;  // one record per trial and check
};

struct FuzzSummary {
  int dim = 0;
  int count = 0;
  std::uint64_t seed = 0;
  // per check: counts indexed by Verdict
  std::map<std::string, std::array<int, 3>> verdicts;
  int certified_equal = 0;
  int uncertified_equal = 0;
  int segment_agree = 0;
  int segment_disagree = 0;
  std::vector<std::string> witnesses;

  int violated() const;
  int exit_code() const { return violated() ? ExitViolated : ExitOk; }
};

/// Random triples (K1, K2, λ) through the bm and convexity checks, a random
/// cylinder pair through the cylinder check, and the segment remark with
/// U = {0} and with a random nonzero segment. Deterministic in the options.
FuzzSummary run_fuzz(const FuzzOptions& options);

/// Line-oriented summary, identical for identical options.
std::string to_string(const FuzzSummary& summary);

}  // namespace coconvex
