#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzv/numeric.hpp"

namespace mzv {

enum class CheckKind { NumericResidual, ExactCoeff };

std::string to_string(CheckKind k);

/// A registered identity check. `tolerance` is the loosest per-point bound;
/// checks with several bounds apply each to its own points.
struct IdentityCheck {
  std::string id;
  std::string description;
  std::map<std::string, std::string> params;
  double tolerance = 0;
  CheckKind kind = CheckKind::NumericResidual;
  double time_limit_s = 0;
};

struct CheckPoint {
  std::string label;
  std::string value;
  std::string reference;
  double residual = 0;
  double tolerance = 0;
  bool pass() const { return residual <= tolerance; }
};

struct VerificationReport {
  std::string id;
  CheckKind kind = CheckKind::NumericResidual;
  std::vector<CheckPoint> points;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = true;
  double elapsed_s = 0;
  double time_limit_s = 0;
  int digits = 0;
};

/// Recognized keys: "tol" (replaces every point tolerance) and "prec"
/// (working digits, >= 30).
using Overrides = std::map<std::string, std::string>;

const std::vector<IdentityCheck>& registry();
const IdentityCheck* find_check(const std::string& id);

/// Runs one check. Unknown ids and malformed overrides raise UsageError.
VerificationReport run(const std::string& id, const Overrides& overrides = {});

struct SuiteConfig {
  /// Ids to run, in registry order; nullopt runs everything.
  std::optional<std::vector<std::string>> ids;
  Overrides overrides;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

struct SuiteSummary {
  std::vector<VerificationReport> reports;
  bool pass = true;
  double elapsed_s = 0;
};

SuiteSummary run_suite(const SuiteConfig& config);

}  // namespace mzv
