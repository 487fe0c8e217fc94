#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/integrate.hpp"

namespace minsph {

// Half-widths for the co-area band estimator, largest first. The estimator
// averages Vol{|phi|=t} over |t - s| <= eps, with O(eps^2) bias at regular
// values; Richardson extrapolation fits that model across the list.
struct BandSpec {
  std::vector<double> half_widths{0.02, 0.01, 0.005};
  bool richardson = true;
  long long samples = 2'000'000;  // Monte Carlo samples for generic axes
  uint64_t seed = 42;

  std::string to_string() const;
};

enum class LevelMethod { Auto, AnalyticSlice, CoareaBand };

struct LevelQuery {
  const Hypersurface* surface = nullptr;
  Axis axis;
  double s = 0.0;
  LevelMethod method = LevelMethod::Auto;
  BandSpec band;
  QuadratureSpec quad;
};

struct LevelEstimate {
  IntegralEstimate est;
  bool near_critical = false;
  std::string note;
};

// Vol{|phi_a| >= s}. Axis-aligned queries reduce to a one-dimensional
// latitude integral; generic axes use indicator Monte Carlo.
LevelEstimate superlevel_volume(const LevelQuery& q);

// (n-1)-volume of {|phi_a| = s}; counts both sheets for s > 0 and the single
// nodal set at s = 0. AnalyticSlice requires an aligned axis; CoareaBand
// estimates (1/2eps) int_{band} |a^T| and refuses certification when the
// sampled band looks critical (|a^T| < 1e-6 on more than 1e-3 of it).
LevelEstimate level_volume(const LevelQuery& q);

// int_{|phi_a| = s} g(phi, |a^T|) dsigma, same sheet conventions. This is the
// general form behind level_volume (g = 1) and the divergence-identity right
// hand side (g = |a^T|).
using LevelField = std::function<double(double phi, double at_norm)>;
LevelEstimate level_integral(const LevelQuery& q, const LevelField& g);

// Vol{phi_a > 0} - Vol{phi_a < 0}; identically zero on the (radially
// symmetric) catalog, estimated for generic axes.
IntegralEstimate signed_balance(const Hypersurface& M, const Axis& a,
                                const QuadratureSpec& quad);

struct CheegerUpperResult {
  double value = 0.0;  // min over axes of 2 Vol{phi_a = 0} / Vol(M)
  int argmin_axis = -1;
  std::vector<double> per_axis;
  bool any_flagged = false;
};

// Remark-4.2 upper bound for h(M); requires radial symmetry (every axis is
// balanced) or per-axis balance checks otherwise.
CheegerUpperResult cheeger_upper_estimate(const Hypersurface& M, const std::vector<Axis>& axes,
                                          const QuadratureSpec& quad,
                                          LevelMethod method = LevelMethod::Auto,
                                          const BandSpec& band = BandSpec{});

// Restricted moments over {|phi_a| >= s}; aligned axes reduce to latitude
// integrals, generic axes use indicator-weighted Monte Carlo.
IntegralEstimate restricted_moment2(const Hypersurface& M, const Axis& a, double s,
                                    const QuadratureSpec& quad);
IntegralEstimate restricted_moment_abs(const Hypersurface& M, const Axis& a, double s,
                                       const QuadratureSpec& quad);

}  // namespace minsph
