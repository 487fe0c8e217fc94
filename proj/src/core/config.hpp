#pragma once

#include <cstdint>
#include <string>

#include "core/verify.hpp"

namespace minsph {

// Flat key=value run configuration shared by the verify and sweep drivers;
// the CLI mirrors every key as a flag (flags override file values).
struct RunConfig {
  std::string surface = "clifford:1,1";
  std::string axes = "default";
  std::string quad;  // empty: surface default
  std::string s_grid = "0:0.7:0.1";
  std::string t_list = "0,0.1,0.3,0.5";
  std::string checks = "all";
  std::string band = "0.02,0.01,0.005";
  std::string band_samples = "2000000";
  std::string method = "auto";
  std::string format = "json";
  std::string out;
  std::string seed = "42";
  std::string tolerance = "1e-6";

  // Canonical serialization: sorted key=value lines, defaults included, so
  // equal configs hash equally.
  std::string to_text() const;
  static RunConfig from_text(const std::string& text);
  void set(const std::string& key, const std::string& value);
  uint64_t hash() const;

  bool operator==(const RunConfig&) const = default;
};

// Materializes surface + context from the textual config.
struct ResolvedRun {
  Hypersurface surface;
  CheckContext ctx;
  std::vector<std::string> checks;
  bool checks_all = false;
  uint64_t seed = 42;
};

ResolvedRun resolve_run(const RunConfig& cfg);

}  // namespace minsph
