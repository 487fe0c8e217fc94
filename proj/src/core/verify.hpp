#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/constants.hpp"
#include "core/geometry.hpp"
#include "core/integrate.hpp"
#include "core/levelset.hpp"

namespace minsph {

enum class Verdict { Pass, Fail, Inconclusive };
const char* verdict_name(Verdict v);

struct InequalityReport {
  std::string check;  // check id, e.g. "thm_main_i"
  std::string name;   // instance id including parameters
  double lhs = 0.0, rhs = 0.0;
  double lhs_error = 0.0, rhs_error = 0.0;
  double margin = 0.0;  // lhs - rhs
  double tolerance = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;  // provenance of each estimate
  std::map<std::string, std::string> params;
};

struct ReportOpts {
  // Substituted bounds (h-hat for h, sampled sup/inf) make FAIL unsound in
  // one direction; such checks downgrade FAIL to INCONCLUSIVE.
  bool downgrade_fail = false;
  bool force_inconclusive = false;  // flagged near-critical inputs
};

InequalityReport make_report(const std::string& check, const std::string& name, double lhs,
                             double lhs_error, double rhs, double rhs_error, double tolerance,
                             std::vector<std::string> notes, ReportOpts opts = {});

struct LabeledAxis {
  Axis axis;
  std::string label;
};

struct CheckContext {
  const Hypersurface* M = nullptr;
  std::vector<LabeledAxis> axes;        // full sampling set (sup/inf checks)
  std::vector<LabeledAxis> probe_axes;  // small set for per-axis parameter grids
  QuadratureSpec quad;
  BandSpec band;
  LevelMethod method = LevelMethod::Auto;
  std::vector<double> s_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  std::vector<double> t_list{0.0, 0.1, 0.3, 0.5};
  std::vector<std::pair<double, double>> sr_grid;  // lemma integral pairs
  double tolerance = 1e-6;
};

std::vector<std::pair<double, double>> default_sr_grid();

// --- individual checks ------------------------------------------------------

std::vector<InequalityReport> check_divergence_identity(const CheckContext& ctx);
std::vector<InequalityReport> check_lemma_moment_bound(const CheckContext& ctx);
std::vector<InequalityReport> check_lemma_integral_inequality(const CheckContext& ctx);
std::vector<InequalityReport> check_theorem_main_i(const CheckContext& ctx);
std::vector<InequalityReport> check_theorem_main_ii(const CheckContext& ctx);
std::vector<InequalityReport> check_corollary_csc(const CheckContext& ctx);

struct IeResult {
  bool is_ie = false;        // Ricci-integral definition
  bool moment_ok = false;    // int phi^2 = Vol/(n+2) within tolerance
  double ricci_disc = 0.0;   // max over axes of |int ricci_quadratic| / Vol
  double moment_disc = 0.0;  // max over axes of |moment2/Vol - 1/(n+2)|
  bool decisive = true;
  std::vector<InequalityReport> reports;
};

IeResult check_ie(const CheckContext& ctx);
std::vector<InequalityReport> check_corollary_ie(const CheckContext& ctx);
std::vector<InequalityReport> check_corollary_epsilon(const CheckContext& ctx);
std::vector<InequalityReport> check_cheeger_chain(const CheckContext& ctx);
std::vector<InequalityReport> check_simons(const CheckContext& ctx);

// --- registry and orchestration ----------------------------------------------

struct CheckInfo {
  std::string name;
  bool needs_non_totally_geodesic = false;
  bool needs_csc = false;
};

// Declared execution/merge order.
const std::vector<CheckInfo>& check_registry();
bool is_known_check(const std::string& name);

struct RunOutcome {
  std::vector<InequalityReport> reports;
  std::vector<std::string> skipped;  // "check: reason" lines
  int pass = 0, fail = 0, inconclusive = 0;
};

// Runs the named checks concurrently and merges reports in registry order.
// strict: a requested check whose hypotheses the surface violates throws
// (explicit request); otherwise it is recorded as skipped (checks=all).
RunOutcome run_checks(const CheckContext& ctx, const std::vector<std::string>& names,
                      bool strict);

}  // namespace minsph
