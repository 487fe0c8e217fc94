#include "core/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/util.hpp"

namespace minsph {

double theta1(double int_S, double S_max, double vol, int n) {
  if (!(S_max > 0.0))
    throw HypothesisError(
        "theta1: S_max = 0 (totally geodesic); the surface is outside the theorem's scope");
  if (!(vol > 0.0)) throw std::invalid_argument("theta1: volume must be positive");
  return int_S / (2.0 * n * S_max * vol);
}

double theta2(double int_S, double int_S2, double vol, int n) {
  if (!(int_S2 > 0.0)) throw HypothesisError("theta2: int S^2 = 0 (totally geodesic)");
  if (!(vol > 0.0)) throw std::invalid_argument("theta2: volume must be positive");
  const double nn = static_cast<double>(n);
  return nn / (4.0 * nn * nn - 3.0 * nn + 1.0) * int_S * int_S / (vol * int_S2);
}

MinimizeResult scalar_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol, int grid_points) {
  if (!(hi > lo)) throw std::invalid_argument("scalar_minimize: empty bracket");
  if (grid_points < 3) throw std::invalid_argument("scalar_minimize: grid too small");
  const double step = (hi - lo) / grid_points;
  double best_x = lo, best_f = f(lo);
  if (!std::isfinite(best_f)) throw NumericError("scalar_minimize: non-finite value at grid point");
  for (int i = 1; i <= grid_points; ++i) {
    const double x = (i == grid_points) ? hi : lo + step * i;
    const double fx = f(x);
    if (!std::isfinite(fx)) throw NumericError("scalar_minimize: non-finite value at grid point");
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  double a = std::max(lo, best_x - step), b = std::min(hi, best_x + step);
  // golden-section on the bracketing interval
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  MinimizeResult res{xm, fm};
  if (f1 < res.fx) res = {x1, f1};
  if (f2 < res.fx) res = {x2, f2};
  if (best_f < res.fx) res = {best_x, best_f};
  return res;
}

double c2_objective(int n, double s, double r) {
  if (r <= s) return 1.0;          // L = 0
  if (r >= 1.0 - 1e-15) return 1.0;  // L -> inf, f -> 1
  const double L = std::log((1.0 - s * s) / (1.0 - r * r));
  return (2.0 + n * r * L) / (2.0 + n * L);
}

C2Result c2_constant(int n, double s) {
  if (n < 2) throw std::invalid_argument("c2_constant: n must be >= 2");
  if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("c2_constant: s must be in [0,1)");
  const MinimizeResult m =
      scalar_minimize([n, s](double r) { return c2_objective(n, s, r); }, s, 1.0);
  C2Result out;
  out.value = m.fx;
  out.argmin_r = m.x;
  const double L = std::log((1.0 - s * s) / (1.0 - m.x * m.x));
  out.u0 = n * L / (2.0 + n * L);
  return out;
}

double c0_constant(int n) { return 4.0 * c2_constant(n, 0.0).value; }

CMainResult c_main(int n, double s, double C1, double C2) {
  if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("c_main: s must be in [0,1)");
  if (!(C1 > 0.0) || !(C2 > 0.0 && C2 < 1.0))
    throw std::invalid_argument("c_main: need C1 > 0 and C2 in (0,1)");
  CMainResult out;
  if (s == 0.0) {
    out.branch = CBranch::S_ZERO;
    out.value = n * C1 / (2.0 * C2);
    return out;
  }
  const double threshold = std::min(std::sqrt(C1), C1 / C2);
  if (s <= threshold) {
    out.branch = CBranch::SMALL_S;
    out.value = n * C1 / (C2 * std::sqrt(1.0 - s * s));
  } else {
    out.branch = CBranch::LARGE_S;
    out.value = n * s / std::sqrt(1.0 - s * s);
  }
  return out;
}

const char* branch_name(CBranch b) {
  switch (b) {
    case CBranch::S_ZERO: return "S_ZERO";
    case CBranch::SMALL_S: return "SMALL_S";
    case CBranch::LARGE_S: return "LARGE_S";
  }
  return "?";
}

double upper_incomplete_gamma(double a, double x) {
  if (!(a > 0.0) || !(x > 0.0))
    throw std::invalid_argument("upper_incomplete_gamma: need a > 0 and x > 0");
  // Modified Lentz evaluation of the standard continued fraction
  //   Gamma(a,x) = e^{-x} x^a / (x + 1 - a - 1(1-a)/(x + 3 - a - ...)).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / (b == 0.0 ? tiny : b);
  double h = d;
  for (int i = 1; i <= 200000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

ChengLiYau cheng_li_yau(int n) {
  if (n < 2) throw std::invalid_argument("cheng_li_yau: n must be >= 2");
  ChengLiYau out;
  out.tildeC = 0.5 * std::pow(static_cast<double>(n), 0.5 * n) * std::exp(1.0) *
               upper_incomplete_gamma(0.5 * n, 1.0);
  // tildeB = 2n + 3 + 2 exp(2n tildeC): log-sum-exp keeps it finite long after
  // exp(2n tildeC) has overflowed (n ~ 8 already does).
  const double expo = 2.0 * n * out.tildeC;
  const double lin = 2.0 * n + 3.0;
  if (expo > 700.0) {
    out.log_tildeB = std::log(2.0) + expo + std::log1p(lin / 2.0 * std::exp(-expo));
  } else {
    out.log_tildeB = std::log(lin + 2.0 * std::exp(expo));
  }
  const double log_ratio = std::log(3.0) - out.log_tildeB;
  out.volume_gap_factor = 1.0 + (log_ratio < -745.0 ? 0.0 : std::exp(log_ratio));
  return out;
}

double epsilon_lower(int n) {
  const double c0 = c0_constant(n);
  const ChengLiYau cly = cheng_li_yau(n);
  const double via_inf = cly.volume_gap_factor / c0;
  // Direct grid search of sup (2 - n ln(1-r^2)) / (2 - n r ln(1-r^2)); the two
  // routes are reciprocals of the same optimum and must agree.
  const MinimizeResult m = scalar_minimize(
      [n](double r) {
        if (r >= 1.0 - 1e-15 || r <= 1e-300) return -1.0;
        const double L = -std::log(1.0 - r * r);
        return -(2.0 + n * L) / (2.0 + n * r * L);
      },
      0.0, 1.0);
  const double via_sup = 0.25 * cly.volume_gap_factor * (-m.fx);
  if (std::abs(via_sup - via_inf) > 1e-9)
    throw NumericError("epsilon_lower: sup and 4/C0 routes disagree beyond 1e-9");
  return via_inf;
}

CheegerLower cheeger_embedded_lower(int n, double S_max) {
  if (S_max < static_cast<double>(n) - 1e-12)
    throw HypothesisError(
        "cheeger_embedded_lower: S_max < n contradicts Simons' inequality for "
        "non-totally-geodesic minimal hypersurfaces");
  CheegerLower out;
  out.delta = std::sqrt(std::max(0.0, (S_max - n) / n));
  const double d = out.delta * (n - 1.0);
  out.h_lower = (-d + std::sqrt(d * d + 5.0 * n)) / 10.0;
  return out;
}

double buser_rhs(int n, double delta, double h) {
  if (delta < 0.0 || h < 0.0) throw std::invalid_argument("buser_rhs: need delta, h >= 0");
  return 2.0 * delta * (n - 1.0) * h + 10.0 * h * h;
}

double isoparametric_lower(int n, int g) {
  if (g < 2 || g > 6) throw std::domain_error("isoparametric_lower: g must be in [2,6]");
  const double root = std::sqrt(static_cast<double>(g - 2));
  const double d = root * (n - 1.0);
  return (-d + std::sqrt(root * root * (n - 1.0) * (n - 1.0) + 10.0 * n)) / 10.0;
}

ConstantsReport compute_constants(int n, double s, const Hypersurface* M,
                                  std::optional<int> g) {
  if (n < 2) throw std::invalid_argument("compute_constants: n must be >= 2");
  if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("compute_constants: s must be in [0,1)");
  ConstantsReport rep;
  rep.n = n;
  rep.s = s;
  double S_max = static_cast<double>(n);
  if (M) {
    rep.csc_assumed = false;
    rep.surface = M->descriptor();
    const SIntegrals si = s_integrals(*M, QuadratureSpec::default_for(*M));
    const double vol = M->closed_form_volume();
    rep.theta1 = theta1(si.int_S.value, si.S_max, vol, n);
    rep.theta2 = theta2(si.int_S.value, si.int_S2.value, vol, n);
    S_max = si.S_max;
    if (!g && M->isoparametric_meta()) g = M->isoparametric_meta()->g;
  } else {
    // CSC normalization: S == const > 0 gives theta1 = 1/(2n) and
    // theta2 = n/(4n^2-3n+1) independent of the constant.
    rep.theta1 = 1.0 / (2.0 * n);
    rep.theta2 = static_cast<double>(n) / (4.0 * n * n - 3.0 * n + 1.0);
  }
  rep.C1 = std::max(rep.theta1, rep.theta2);
  const C2Result c2 = c2_constant(n, s);
  rep.C2 = c2.value;
  rep.argmin_r = c2.argmin_r;
  rep.u0_at_min = c2.u0;
  const CMainResult cm = c_main(n, s, rep.C1, rep.C2);
  rep.C_main = cm.value;
  rep.branch = cm.branch;
  rep.C0 = c0_constant(n);
  rep.C_csc_s0 = 1.0 / (4.0 * c2_constant(n, 0.0).value);
  const ChengLiYau cly = cheng_li_yau(n);
  rep.tildeC = cly.tildeC;
  rep.log_tildeB = cly.log_tildeB;
  rep.volume_gap_factor = cly.volume_gap_factor;
  rep.epsilon_lower = minsph::epsilon_lower(n);
  const CheegerLower cl = cheeger_embedded_lower(n, S_max);
  rep.cheeger_embedded_lower = cl.h_lower;
  rep.delta = cl.delta;
  if (g) rep.muto_bound = isoparametric_lower(n, *g);
  return rep;
}

}  // namespace minsph
