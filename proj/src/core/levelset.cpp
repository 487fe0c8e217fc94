#include "core/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/errors.hpp"
#include "core/gauss.hpp"
#include "core/util.hpp"

namespace minsph {

std::string BandSpec::to_string() const {
  std::ostringstream os;
  os << "band:";
  for (std::size_t i = 0; i < half_widths.size(); ++i) os << (i ? "," : "") << half_widths[i];
  os << (richardson ? ":richardson" : ":plain") << ":" << samples << ":" << seed;
  return os.str();
}

namespace {

constexpr double kCritTangentNorm = 1e-6;
constexpr double kCritFraction = 1e-3;

// Volume of the factor complementary to the aligned one (1 for equators).
double other_factor_volume(const Hypersurface& M, const AxisAlignment& al) {
  if (M.kind() == SurfaceKind::Equator) return 1.0;
  if (al.factor == 0) return sphere_volume(M.q()) * std::pow(M.r2(), M.q());
  return sphere_volume(M.p()) * std::pow(M.r1(), M.p());
}

// For an aligned axis every integrand in this module is a function of the
// polar angle of the aligned factor alone (rotating the factor sphere maps
// e_k to its first coordinate and preserves all the integrals), with
// phi = +-r cos(theta) and |a^T| = sin(theta).
//
// cap_integral computes int over {|phi| >= s} of G(phi, |a^T|), i.e.
//   Vol(S^{m-1}) r^m Vol_other int_0^{theta*} [G(r c, st) + G(-r c, st)] sin^{m-1}
// with theta* = acos(s/r).
IntegralEstimate cap_integral(const Hypersurface& M, const AxisAlignment& al, double s,
                              const LevelField& G) {
  IntegralEstimate est;
  est.method_tag = "analytic:cap";
  const double r = al.factor_radius;
  const int m = al.factor_dim;
  if (s >= r * (1.0 - 1e-15)) return est;  // |phi| <= r: empty cap
  const double theta_star = std::acos(std::clamp(s / r, 0.0, 1.0));
  const double scale =
      sphere_volume(m - 1) * std::pow(r, m) * other_factor_volume(M, al);
  auto one_d = [&](int order) {
    return gauss_1d(
        [&](double th) {
          const double c = std::cos(th), st = std::sin(th);
          return (G(r * c, st) + G(-r * c, st)) * std::pow(st, m - 1);
        },
        0.0, theta_star, order);
  };
  const double v64 = one_d(64), v48 = one_d(48);
  est.value = scale * v64;
  est.error = scale * std::abs(v64 - v48) + 1e-14 * std::abs(est.value);
  return est;
}

IntegralEstimate indicator_moment(const Hypersurface& M, const Axis& a, double s,
                                  const LevelField& G, const QuadratureSpec& quad) {
  const QuadratureSpec mc = fallback_monte_carlo(quad);
  return integrate(M, [&](const PointFrame& fr) {
    const double phi = height(fr, a);
    if (std::abs(phi) < s) return 0.0;
    return G(phi, std::sqrt(tangent_norm_sq(fr, a)));
  }, mc);
}

struct BandPoint {
  double eps = 0.0;
  double value = 0.0;
  double error = 0.0;  // 3 sigma (MC) or quadrature difference (aligned)
};

// Weighted least-squares fit of value = L + c eps^2 through the band
// estimates; returns the extrapolated L with a propagated error bar plus a
// residual term for model mismatch.
IntegralEstimate combine_band(const std::vector<BandPoint>& pts, bool richardson) {
  IntegralEstimate est;
  est.method_tag = "coarea-band";
  if (pts.empty()) return est;
  if (pts.size() == 1 || !richardson) {
    // smallest half-width wins; neighbour difference doubles as a bias probe
    const BandPoint& best = pts.back();
    est.value = best.value;
    est.error = best.error;
    if (pts.size() > 1) est.error += std::abs(best.value - pts[pts.size() - 2].value);
    return est;
  }
  double s_ww = 0.0, s_wx = 0.0, s_wxx = 0.0, s_wy = 0.0, s_wxy = 0.0;
  for (const BandPoint& p : pts) {
    const double sig = std::max(p.error, 1e-14 * (std::abs(p.value) + 1.0));
    const double w = 1.0 / (sig * sig);
    const double x = p.eps * p.eps;
    s_ww += w;
    s_wx += w * x;
    s_wxx += w * x * x;
    s_wy += w * p.value;
    s_wxy += w * x * p.value;
  }
  const double det = s_ww * s_wxx - s_wx * s_wx;
  if (!(std::abs(det) > 0.0)) {
    est.value = pts.back().value;
    est.error = pts.back().error;
    return est;
  }
  const double L = (s_wxx * s_wy - s_wx * s_wxy) / det;
  const double c = (s_ww * s_wxy - s_wx * s_wy) / det;
  double max_resid = 0.0;
  for (const BandPoint& p : pts)
    max_resid = std::max(max_resid, std::abs(p.value - (L + c * p.eps * p.eps)));
  est.value = L;
  est.error = std::sqrt(std::max(0.0, s_wxx / det)) + 0.5 * max_resid;
  return est;
}

std::vector<double> effective_half_widths(const BandSpec& band, double s) {
  std::vector<double> eps = band.half_widths;
  if (eps.empty()) eps = {0.02, 0.01, 0.005};
  for (double& e : eps) {
    if (!(e > 0.0)) throw std::invalid_argument("band half-widths must be positive");
    if (s > 0.0 && e >= s) e = 0.9 * s;  // keep the band clear of the mirror sheet at 0
  }
  std::sort(eps.begin(), eps.end(), std::greater<double>());
  eps.erase(std::unique(eps.begin(), eps.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-15; }),
            eps.end());
  return eps;
}

}  // namespace

LevelEstimate superlevel_volume(const LevelQuery& q) {
  const Hypersurface& M = *q.surface;
  if (!(q.s >= 0.0 && q.s < 1.0)) throw std::domain_error("superlevel_volume: s must be in [0,1)");
  LevelEstimate out;
  const std::optional<AxisAlignment> al = M.alignment(q.axis);
  if (al && al->pole) {
    // phi vanishes identically: the superlevel set is all of M or empty.
    out.est.method_tag = "analytic:pole";
    out.est.value = (q.s == 0.0) ? M.closed_form_volume() : 0.0;
    out.note = "phi_a == 0 identically (pole axis)";
    return out;
  }
  if (al && q.method != LevelMethod::CoareaBand) {
    out.est = cap_integral(M, *al, q.s, [](double, double) { return 1.0; });
    return out;
  }
  out.est = indicator_moment(M, q.axis, q.s, [](double, double) { return 1.0; }, q.quad);
  out.est.method_tag += ";indicator";
  return out;
}

LevelEstimate level_integral(const LevelQuery& q, const LevelField& g) {
  const Hypersurface& M = *q.surface;
  if (!(q.s >= 0.0 && q.s < 1.0)) throw std::domain_error("level_integral: s must be in [0,1)");
  const double s = q.s;
  LevelEstimate out;
  const std::optional<AxisAlignment> al = M.alignment(q.axis);

  if (al && al->pole) {
    if (s > 0.0) {
      out.est.method_tag = "analytic:pole";
      out.note = "level set empty (phi_a == 0 identically)";
      return out;
    }
    // {phi = 0} is all of M: no (n-1)-dimensional level set exists.
    out.near_critical = true;
    out.est.method_tag = "analytic:pole";
    out.est.error = std::numeric_limits<double>::infinity();
    out.note = "degenerate level: phi_a == 0 identically, no certified value";
    return out;
  }

  const bool want_analytic = q.method == LevelMethod::AnalyticSlice ||
                             (q.method == LevelMethod::Auto && al.has_value());
  if (want_analytic) {
    if (!al)
      throw std::invalid_argument(
          "level_integral: AnalyticSlice requires an axis aligned with one ambient coordinate");
    const double r = al->factor_radius;
    const int m = al->factor_dim;
    out.est.method_tag = "analytic:slice";
    if (s > r * (1.0 + 1e-12)) {
      out.note = "level set empty (s > sup |phi_a|)";
      return out;
    }
    if (std::abs(s - r) <= 1e-6 * std::max(1.0, r)) {
      out.near_critical = true;
      out.est.error = std::numeric_limits<double>::infinity();
      out.note = "tangent level s ~ r_f: critical value, no certified value";
      return out;
    }
    const double c = std::clamp(s / r, 0.0, 1.0);
    const double st = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double lat = sphere_volume(m - 1) * std::pow(r * st, m - 1) *
                       other_factor_volume(M, *al);
    // sheets phi = +s and phi = -s for s > 0; single nodal latitude at s = 0
    double value = g(s, st) * lat;
    if (s > 0.0) value += g(-s, st) * lat;
    out.est.value = value;
    out.est.error = 1e-14 * std::abs(value);
    return out;
  }

  // Co-area band estimator.
  const std::vector<double> eps_list = effective_half_widths(q.band, s);
  std::vector<BandPoint> pts;
  pts.reserve(eps_list.size());

  if (al) {
    // Aligned axes keep a deterministic path: each band integral is a
    // difference of two latitude-cap integrals.
    for (double eps : eps_list) {
      const double t1 = std::max(0.0, s - eps), t2 = s + eps;
      const LevelField inner = [&](double phi, double at) { return g(phi, at) * at; };
      const IntegralEstimate lo = cap_integral(M, *al, t1, inner);
      const IntegralEstimate hi = cap_integral(M, *al, t2, inner);
      BandPoint bp;
      bp.eps = eps;
      bp.value = (lo.value - hi.value) / (2.0 * eps);
      bp.error = (lo.error + hi.error) / (2.0 * eps);
      pts.push_back(bp);
      if (t2 >= al->factor_radius * (1.0 - 1e-9)) out.near_critical = true;
    }
    if (out.near_critical) {
      out.note = "band touches the critical value |phi| = r_f";
      out.est = combine_band(pts, q.band.richardson);
      out.est.error = std::numeric_limits<double>::infinity();
      out.est.method_tag = "coarea-band:aligned";
      return out;
    }
    out.est = combine_band(pts, q.band.richardson);
    out.est.method_tag = "coarea-band:aligned";
    return out;
  }

  // Generic axis: one Monte Carlo sweep feeds every half-width (the bands are
  // nested), counting near-critical hits inside the widest band.
  const ChartBox& box = M.charts()[0];
  const double meas = box.measure();
  const int dims = box.dim();
  const std::size_t ne = eps_list.size();
  const double eps_max = eps_list.front();
  const int k = static_cast<int>(2 * ne + 2);
  std::vector<double> acc(static_cast<std::size_t>(k));
  ChartPoint pt;
  pt.chart_id = 0;
  pt.coords.resize(static_cast<std::size_t>(dims));
  PointFrame frame;
  pairwise_sum_multi(static_cast<std::size_t>(q.band.samples), k, acc.data(),
                     [&](std::size_t i, double* vals) {
                       std::fill(vals, vals + k, 0.0);
                       for (int d = 0; d < dims; ++d) {
                         const double t = u01(q.band.seed, static_cast<uint64_t>(d), i);
                         pt.coords[static_cast<std::size_t>(d)] =
                             box.lo[static_cast<std::size_t>(d)] +
                             t * (box.hi[static_cast<std::size_t>(d)] -
                                  box.lo[static_cast<std::size_t>(d)]);
                       }
                       M.eval_frame(pt, frame);
                       const double phi = height(frame, q.axis);
                       const double dist = std::abs(std::abs(phi) - s);
                       if (dist > eps_max) return;
                       const double at = std::sqrt(tangent_norm_sq(frame, q.axis));
                       vals[2 * ne] = 1.0;                          // in widest band
                       if (at < kCritTangentNorm) vals[2 * ne + 1] = 1.0;  // near-critical hit
                       const double base = g(phi, at) * at * frame.metric_jacobian * meas;
                       for (std::size_t j = 0; j < ne; ++j) {
                         if (dist <= eps_list[j]) {
                           const double v = base / (2.0 * eps_list[j]);
                           vals[2 * j] = v;
                           vals[2 * j + 1] = v * v;
                         }
                       }
                     });
  const double nsamp = static_cast<double>(q.band.samples);
  const double in_band = acc[2 * ne];
  const double crit = acc[2 * ne + 1];
  for (std::size_t j = 0; j < ne; ++j) {
    BandPoint bp;
    bp.eps = eps_list[j];
    const double mean = acc[2 * j] / nsamp;
    const double mean_sq = acc[2 * j + 1] / nsamp;
    bp.value = mean;
    bp.error = 3.0 * std::sqrt(std::max(0.0, mean_sq - mean * mean) / nsamp);
    pts.push_back(bp);
  }
  if (in_band == 0.0) {
    out.est.method_tag = "coarea-band:mc";
    out.note = "empty band: no samples with |phi| near s";
    return out;
  }
  out.est = combine_band(pts, q.band.richardson);
  out.est.method_tag = "coarea-band:mc";
  if (crit / in_band > kCritFraction) {
    out.near_critical = true;
    out.est.error = std::numeric_limits<double>::infinity();
    out.note = "near-critical level: |a^T| < 1e-6 on > 1e-3 of the band";
  }
  return out;
}

LevelEstimate level_volume(const LevelQuery& q) {
  return level_integral(q, [](double, double) { return 1.0; });
}

IntegralEstimate signed_balance(const Hypersurface& M, const Axis& a,
                                const QuadratureSpec& quad) {
  const std::optional<AxisAlignment> al = M.alignment(a);
  if (al) {
    // The two half-volumes are mirror-image caps: exactly balanced.
    IntegralEstimate est;
    est.method_tag = al->pole ? "analytic:pole" : "analytic:cap";
    return est;
  }
  const QuadratureSpec mc = fallback_monte_carlo(quad);
  IntegralEstimate est = integrate(M, [&](const PointFrame& fr) {
    const double phi = height(fr, a);
    return phi > 0.0 ? 1.0 : (phi < 0.0 ? -1.0 : 0.0);
  }, mc);
  est.method_tag += ";signed-indicator";
  return est;
}

CheegerUpperResult cheeger_upper_estimate(const Hypersurface& M, const std::vector<Axis>& axes,
                                          const QuadratureSpec& quad, LevelMethod method,
                                          const BandSpec& band) {
  if (axes.empty()) throw std::invalid_argument("cheeger_upper_estimate: empty axis list");
  CheegerUpperResult out;
  out.value = std::numeric_limits<double>::infinity();
  const double vol = M.closed_form_volume();
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (!M.radially_symmetric()) {
      const IntegralEstimate bal = signed_balance(M, axes[i], quad);
      if (std::abs(bal.value) > bal.error + 1e-12)
        throw HypothesisError("cheeger_upper_estimate: axis is not balanced on this surface");
    }
    LevelQuery q;
    q.surface = &M;
    q.axis = axes[i];
    q.s = 0.0;
    q.method = method;
    q.band = band;
    q.quad = quad;
    const LevelEstimate lv = level_volume(q);
    const double h = 2.0 * lv.est.value / vol;
    out.per_axis.push_back(h);
    if (lv.near_critical) {
      out.any_flagged = true;
      continue;  // no certified value from this axis
    }
    if (h < out.value) {
      out.value = h;
      out.argmin_axis = static_cast<int>(i);
    }
  }
  return out;
}

IntegralEstimate restricted_moment2(const Hypersurface& M, const Axis& a, double s,
                                    const QuadratureSpec& quad) {
  const std::optional<AxisAlignment> al = M.alignment(a);
  const LevelField g = [](double phi, double) { return phi * phi; };
  if (al && al->pole) return {0.0, 0.0, "analytic:pole"};
  if (al && quad.method == QuadratureSpec::Method::TensorGauss) return cap_integral(M, *al, s, g);
  return indicator_moment(M, a, s, g, quad);
}

IntegralEstimate restricted_moment_abs(const Hypersurface& M, const Axis& a, double s,
                                       const QuadratureSpec& quad) {
  const std::optional<AxisAlignment> al = M.alignment(a);
  const LevelField g = [](double phi, double) { return std::abs(phi); };
  if (al && al->pole) return {0.0, 0.0, "analytic:pole"};
  if (al && quad.method == QuadratureSpec::Method::TensorGauss) return cap_integral(M, *al, s, g);
  return indicator_moment(M, a, s, g, quad);
}

}  // namespace minsph
