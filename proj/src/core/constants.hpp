#pragma once

#include <functional>
#include <optional>
#include <string>

#include "core/geometry.hpp"
#include "core/integrate.hpp"

namespace minsph {

// theta_1 = int S / (2 n S_max Vol); rejects totally geodesic input.
double theta1(double int_S, double S_max, double vol, int n);

// theta_2 = n / (4n^2 - 3n + 1) * (int S)^2 / (Vol int S^2).
double theta2(double int_S, double int_S2, double vol, int n);

struct MinimizeResult {
  double x = 0.0;
  double fx = 0.0;
};

// Dense grid bracketing (default 1e4 points) plus golden-section refinement
// to |dx| < tol; deterministic, rejects non-finite values.
MinimizeResult scalar_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol = 1e-10, int grid_points = 10'000);

struct C2Result {
  double value = 0.0;
  double argmin_r = 0.0;
  double u0 = 0.0;  // n L / (2 + n L) at the argmin
};

// C_2(n, s) = inf over r in [s, 1] of (2 + n r L) / (2 + n L) with
// L = ln((1 - s^2)/(1 - r^2)); both endpoints have the analytic limit 1 and
// the infimum is attained in the interior.
C2Result c2_constant(int n, double s);

// The C2 integrand itself, exposed for profile plots and the lemma checks.
double c2_objective(int n, double s, double r);

// C_0(n) = 4 inf over r in [0, 1] of (2 - n r ln(1-r^2)) / (2 - n ln(1-r^2)),
// algebraically 4 * c2_constant(n, 0).value.
double c0_constant(int n);

enum class CBranch { S_ZERO, SMALL_S, LARGE_S };

struct CMainResult {
  double value = 0.0;
  CBranch branch = CBranch::S_ZERO;
};

// Piecewise constant of the main theorem; ties at the branch boundary go to
// SMALL_S.
CMainResult c_main(int n, double s, double C1, double C2);

const char* branch_name(CBranch b);

// Upper incomplete gamma Gamma(a, x) via the modified Lentz continued
// fraction; relative error target 1e-14 in the needed range (a = n/2 <= 10,
// x = 1).
double upper_incomplete_gamma(double a, double x);

struct ChengLiYau {
  double tildeC = 0.0;           // (1/2) n^{n/2} e Gamma(n/2, 1)
  double log_tildeB = 0.0;       // log(2n + 3 + 2 exp(2n tildeC)), overflow-safe
  double volume_gap_factor = 1.0;  // 1 + 3/tildeB, saturating to 1
};

ChengLiYau cheng_li_yau(int n);

// Lower bound for epsilon(n) in the nodal-volume corollary:
// (1 + 3/B_n) / C0(n). The sup form is recomputed by direct grid search and
// must agree to 1e-9 (an optimizer self-check).
double epsilon_lower(int n);

struct CheegerLower {
  double h_lower = 0.0;
  double delta = 0.0;  // sqrt((S_max - n)/n)
};

// Embedded-case Cheeger lower bound; requires S_max >= n (Simons).
CheegerLower cheeger_embedded_lower(int n, double S_max);

// Buser: lambda_1 <= 2 delta (n-1) h + 10 h^2.
double buser_rhs(int n, double delta, double h);

// Cheeger lower bound for minimal isoparametric hypersurfaces with g distinct
// curvatures (2 <= g <= 6), using lambda_1 = n.
double isoparametric_lower(int n, int g);

struct ConstantsReport {
  int n = 0;
  double s = 0.0;
  bool csc_assumed = true;  // no surface supplied: S == const normalization
  std::string surface;

  double theta1 = 0.0, theta2 = 0.0, C1 = 0.0;
  double C2 = 0.0, argmin_r = 0.0, u0_at_min = 0.0;
  double C_main = 0.0;
  CBranch branch = CBranch::S_ZERO;
  double C0 = 0.0;
  double C_csc_s0 = 0.0;  // Cor-1.2 value C(n,0) = 1/(4 C2); kept distinct from C0
  double tildeC = 0.0, log_tildeB = 0.0, volume_gap_factor = 1.0;
  double epsilon_lower = 0.0;
  double cheeger_embedded_lower = 0.0, delta = 0.0;
  std::optional<double> muto_bound;  // isoparametric g-bound when g is known
};

// Full constants table for (n, s); surface integrals feed theta_1/theta_2
// when a surface is given, otherwise the CSC normalization S == const is
// used. g (2..6) adds the isoparametric bound.
ConstantsReport compute_constants(int n, double s, const Hypersurface* M = nullptr,
                                  std::optional<int> g = std::nullopt);

}  // namespace minsph
