#include "core/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/gauss.hpp"
#include "core/util.hpp"

namespace minsph {

QuadratureSpec QuadratureSpec::gauss(int order) {
  QuadratureSpec s;
  s.method = Method::TensorGauss;
  s.orders = {order};
  return s;
}

QuadratureSpec QuadratureSpec::gauss(std::vector<int> orders) {
  QuadratureSpec s;
  s.method = Method::TensorGauss;
  s.orders = std::move(orders);
  return s;
}

QuadratureSpec QuadratureSpec::monte_carlo(long long samples, uint64_t seed) {
  QuadratureSpec s;
  s.method = Method::MonteCarlo;
  s.samples = samples;
  s.seed = seed;
  return s;
}

QuadratureSpec QuadratureSpec::default_for(const Hypersurface& M) {
  return M.n() <= 3 ? gauss(64) : monte_carlo(1'000'000, 42);
}

int QuadratureSpec::order_for_dim(int d) const {
  if (orders.empty()) throw std::invalid_argument("QuadratureSpec: no orders");
  if (orders.size() == 1) return orders[0];
  return orders.at(static_cast<std::size_t>(d));
}

void QuadratureSpec::validate(int dims) const {
  if (method == Method::TensorGauss) {
    if (orders.empty()) throw std::invalid_argument("TensorGauss: orders required");
    if (orders.size() != 1 && static_cast<int>(orders.size()) != dims)
      throw std::invalid_argument("TensorGauss: order list does not match chart dimension");
    for (int d = 0; d < dims; ++d)
      if (order_for_dim(d) < 2) throw std::invalid_argument("TensorGauss: orders must be >= 2");
  } else {
    if (samples < 100) throw std::invalid_argument("MonteCarlo: samples must be >= 100");
  }
}

std::string QuadratureSpec::to_string() const {
  std::ostringstream os;
  if (method == Method::TensorGauss) {
    os << "gauss:";
    for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
  } else {
    os << "mc:" << samples << ":" << seed;
  }
  return os.str();
}

QuadratureSpec fallback_monte_carlo(const QuadratureSpec& spec) {
  if (spec.method == QuadratureSpec::Method::MonteCarlo) return spec;
  return QuadratureSpec::monte_carlo(1'000'000, 42);
}

namespace {

[[noreturn]] void abort_nonfinite(const Hypersurface& M, const ChartPoint& pt, double fv) {
  std::ostringstream os;
  os << "integrate: non-finite integrand (" << fv << ") on " << M.descriptor()
     << " chart " << pt.chart_id << " at (";
  for (std::size_t i = 0; i < pt.coords.size(); ++i) os << (i ? ", " : "") << pt.coords[i];
  os << ")";
  throw NumericError(os.str());
}

double gauss_box_value(const Hypersurface& M, const ChartBox& box, const ScalarField& f,
                       const QuadratureSpec& spec, int order_shift) {
  const int dims = box.dim();
  std::vector<const GaussRule*> rules(static_cast<std::size_t>(dims));
  std::vector<double> mid(static_cast<std::size_t>(dims)), half(static_cast<std::size_t>(dims));
  std::size_t total = 1;
  for (int d = 0; d < dims; ++d) {
    const int order = std::max(1, spec.order_for_dim(d) + order_shift);
    rules[static_cast<std::size_t>(d)] = &gauss_legendre(order);
    mid[static_cast<std::size_t>(d)] =
        0.5 * (box.lo[static_cast<std::size_t>(d)] + box.hi[static_cast<std::size_t>(d)]);
    half[static_cast<std::size_t>(d)] =
        0.5 * (box.hi[static_cast<std::size_t>(d)] - box.lo[static_cast<std::size_t>(d)]);
    total *= rules[static_cast<std::size_t>(d)]->nodes.size();
  }
  ChartPoint pt;
  pt.chart_id = 0;
  pt.coords.resize(static_cast<std::size_t>(dims));
  PointFrame frame;
  return pairwise_sum(total, [&](std::size_t flat) {
    std::size_t rem = flat;
    double w = 1.0;
    for (int d = dims - 1; d >= 0; --d) {
      const GaussRule& rule = *rules[static_cast<std::size_t>(d)];
      const std::size_t k = rem % rule.nodes.size();
      rem /= rule.nodes.size();
      pt.coords[static_cast<std::size_t>(d)] =
          mid[static_cast<std::size_t>(d)] + half[static_cast<std::size_t>(d)] * rule.nodes[k];
      w *= rule.weights[k] * half[static_cast<std::size_t>(d)];
    }
    M.eval_frame(pt, frame);
    const double fv = f(frame);
    if (!std::isfinite(fv)) abort_nonfinite(M, pt, fv);
    return w * fv * frame.metric_jacobian;
  });
}

struct McMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
  long long count = 0;
};

McMoments mc_box_moments(const Hypersurface& M, const ChartBox& box, const ScalarField& f,
                         long long samples, uint64_t seed, uint64_t stream_base) {
  const int dims = box.dim();
  ChartPoint pt;
  pt.chart_id = 0;
  pt.coords.resize(static_cast<std::size_t>(dims));
  PointFrame frame;
  const double meas = box.measure();
  double acc[2];
  pairwise_sum_multi(static_cast<std::size_t>(samples), 2, acc, [&](std::size_t i, double* out) {
    for (int d = 0; d < dims; ++d) {
      const double t = u01(seed, stream_base + static_cast<uint64_t>(d), i);
      pt.coords[static_cast<std::size_t>(d)] =
          box.lo[static_cast<std::size_t>(d)] +
          t * (box.hi[static_cast<std::size_t>(d)] - box.lo[static_cast<std::size_t>(d)]);
    }
    M.eval_frame(pt, frame);
    const double fv = f(frame);
    if (!std::isfinite(fv)) abort_nonfinite(M, pt, fv);
    const double g = fv * frame.metric_jacobian * meas;
    out[0] = g;
    out[1] = g * g;
  });
  return {acc[0], acc[1], samples};
}

}  // namespace

IntegralEstimate integrate_boxes(const Hypersurface& M, const std::vector<ChartBox>& boxes,
                                 const ScalarField& f, const QuadratureSpec& spec) {
  if (boxes.empty()) return {0.0, 0.0, spec.to_string()};
  spec.validate(boxes[0].dim());
  IntegralEstimate est;
  est.method_tag = spec.to_string();
  if (spec.method == QuadratureSpec::Method::TensorGauss) {
    double value = 0.0, lower = 0.0;
    for (const ChartBox& box : boxes) {
      value += gauss_box_value(M, box, f, spec, 0);
      lower += gauss_box_value(M, box, f, spec, -1);
    }
    est.value = value;
    // Rounding floor keeps the reported error meaningful when both orders
    // agree to machine precision.
    est.error = std::abs(value - lower) + 1e-14 * std::abs(value);
    return est;
  }
  // Monte Carlo: samples split across boxes by measure, streams disjoint per
  // box so the estimate is independent of box enumeration details.
  double total_meas = 0.0;
  for (const ChartBox& box : boxes) total_meas += box.measure();
  double value = 0.0, var_sum = 0.0;
  uint64_t stream_base = 0;
  for (const ChartBox& box : boxes) {
    long long ns = boxes.size() == 1
                       ? spec.samples
                       : std::max<long long>(100, static_cast<long long>(std::llround(
                                                      static_cast<double>(spec.samples) *
                                                      box.measure() / total_meas)));
    const McMoments m = mc_box_moments(M, box, f, ns, spec.seed, stream_base);
    const double mean = m.sum / static_cast<double>(m.count);
    const double mean_sq = m.sum_sq / static_cast<double>(m.count);
    const double var = std::max(0.0, mean_sq - mean * mean);
    value += mean;
    var_sum += var / static_cast<double>(m.count);
    stream_base += static_cast<uint64_t>(box.dim()) + 7;
  }
  est.value = value;
  est.error = 3.0 * std::sqrt(var_sum);
  return est;
}

IntegralEstimate integrate(const Hypersurface& M, const ScalarField& f,
                           const QuadratureSpec& spec) {
  return integrate_boxes(M, M.charts(), f, spec);
}

IntegralEstimate volume(const Hypersurface& M, const QuadratureSpec& spec) {
  return integrate(M, [](const PointFrame&) { return 1.0; }, spec);
}

IntegralEstimate moment2(const Hypersurface& M, const Axis& a, const QuadratureSpec& spec) {
  return integrate(M, [&a](const PointFrame& fr) {
    const double phi = height(fr, a);
    return phi * phi;
  }, spec);
}

namespace {

// For an axis-aligned phi the sign of phi over the chart box changes only
// across hyperplanes of the angle that carries the aligned coordinate's
// trigonometric factor (the sin-prefix is nonnegative on the box), so |phi|
// is smooth on the split boxes.
std::vector<ChartBox> split_boxes_at(const ChartBox& box, int dim, std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  std::vector<ChartBox> out;
  double lo = box.lo[static_cast<std::size_t>(dim)];
  const double hi = box.hi[static_cast<std::size_t>(dim)];
  std::vector<double> edges;
  edges.push_back(lo);
  for (double c : cuts)
    if (c > lo + 1e-14 && c < hi - 1e-14) edges.push_back(c);
  edges.push_back(hi);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    ChartBox b = box;
    b.lo[static_cast<std::size_t>(dim)] = edges[i];
    b.hi[static_cast<std::size_t>(dim)] = edges[i + 1];
    out.push_back(std::move(b));
  }
  return out;
}

// Angle dimension and cut points where the aligned ambient coordinate
// changes sign inside the chart box.
struct SignSplit {
  int dim = -1;
  std::vector<double> cuts;
};

SignSplit sign_split_for(const Hypersurface& M, const AxisAlignment& al) {
  SignSplit sp;
  const int m = al.factor_dim;
  const int j = al.coord_in_factor;           // coordinate within the factor block
  const int base = (al.factor == 0) ? 0 : M.p();  // angle offset of the factor
  if (j < m) {
    // w_j = prefix * cos(theta_j): polar angles cross zero at pi/2, the
    // azimuthal one (j = m-1) also at 3pi/2.
    sp.dim = base + j;
    sp.cuts = {kPi / 2};
    if (j == m - 1) sp.cuts.push_back(3 * kPi / 2);
  } else {
    // w_m = prefix * sin(theta_{m-1}): sign flips at pi (0 and 2pi are box edges).
    sp.dim = base + (m - 1);
    sp.cuts = {kPi};
  }
  return sp;
}

}  // namespace

IntegralEstimate moment_abs(const Hypersurface& M, const Axis& a, const QuadratureSpec& spec) {
  const ScalarField f = [&a](const PointFrame& fr) { return std::abs(height(fr, a)); };
  if (spec.method == QuadratureSpec::Method::MonteCarlo) return integrate(M, f, spec);
  const std::optional<AxisAlignment> al = M.alignment(a);
  if (al && al->pole) {
    // phi vanishes identically; the integral is exactly 0.
    IntegralEstimate est;
    est.method_tag = "analytic:pole";
    return est;
  }
  if (al) {
    const SignSplit sp = sign_split_for(M, *al);
    const std::vector<ChartBox> boxes = split_boxes_at(M.charts()[0], sp.dim, sp.cuts);
    IntegralEstimate est = integrate_boxes(M, boxes, f, spec);
    est.method_tag += ";split";
    return est;
  }
  IntegralEstimate est = integrate(M, f, fallback_monte_carlo(spec));
  est.method_tag += ";mc-fallback";
  return est;
}

SIntegrals s_integrals(const Hypersurface& M, const QuadratureSpec&) {
  // Catalog members have constant S; the moments are exact multiples of the
  // closed-form volume, no quadrature involved.
  const double s = *M.S_const();
  const double vol = M.closed_form_volume();
  SIntegrals out;
  out.int_S = {s * vol, 0.0, "analytic:S-const"};
  out.int_S2 = {s * s * vol, 0.0, "analytic:S-const"};
  out.S_max = s;
  return out;
}

}  // namespace minsph
