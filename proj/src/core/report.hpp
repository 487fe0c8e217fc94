#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/constants.hpp"
#include "core/verify.hpp"

namespace minsph {

// Outputs of a verify run; all strings are deterministic functions of the
// config (headers carry version, config hash, seed).
struct VerifyRunResult {
  RunConfig config;
  std::string surface_desc;
  std::optional<ConstantsReport> constants;  // absent for totally geodesic surfaces
  RunOutcome outcome;

  std::string json;
  std::string csv;
  std::string table;
  int exit_code = 0;  // 0 all-pass, 2 any FAIL
};

VerifyRunResult run_verify(const RunConfig& cfg);

struct SweepRunResult {
  RunConfig config;
  std::string csv;
  std::string svg;
  std::string json;
  int exit_code = 0;
};

// Margin-vs-s sweep of the s-dependent theorem checks per axis.
SweepRunResult run_sweep(const RunConfig& cfg);

// Catalog listing.
std::string catalog_json();
std::string catalog_table();

// Constants reports.
std::string constants_json(const ConstantsReport& rep);
std::string constants_table(const ConstantsReport& rep);
std::string constants_sweep_csv(int n, const std::vector<double>& s_values);
std::string c2_profile_svg(int n, double s);

}  // namespace minsph
