#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/util.hpp"

namespace minsph {

double sphere_volume(int m) {
  if (m < 0) throw std::invalid_argument("sphere_volume: m must be >= 0");
  return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

double ChartBox::measure() const {
  double v = 1.0;
  for (int d = 0; d < dim(); ++d) v *= hi[static_cast<std::size_t>(d)] - lo[static_cast<std::size_t>(d)];
  return v;
}

// ---------------------------------------------------------------------------
// Axis
// ---------------------------------------------------------------------------

Axis Axis::basis(int ambient_dim, int k, double sign) {
  if (ambient_dim < 1 || k < 1 || k > ambient_dim)
    throw std::invalid_argument("Axis::basis: index out of range");
  Axis a;
  a.c.assign(static_cast<std::size_t>(ambient_dim), 0.0);
  a.c[static_cast<std::size_t>(k - 1)] = sign >= 0.0 ? 1.0 : -1.0;
  return a;
}

Axis Axis::random(int ambient_dim, uint64_t seed) {
  if (ambient_dim < 1) throw std::invalid_argument("Axis::random: bad dimension");
  std::vector<double> v(static_cast<std::size_t>(ambient_dim));
  for (uint64_t attempt = 0;; ++attempt) {
    for (int i = 0; i < ambient_dim; ++i)
      v[static_cast<std::size_t>(i)] = gauss01(seed, static_cast<uint64_t>(i), attempt);
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    if (nrm > 1e-12) {
      nrm = std::sqrt(nrm);
      for (double& x : v) x /= nrm;
      Axis a;
      a.c = std::move(v);
      return a;
    }
  }
}

Axis Axis::normalized(std::vector<double> v) {
  double nrm = 0.0;
  for (double x : v) nrm += x * x;
  if (!(nrm > 1e-24)) throw std::invalid_argument("Axis::normalized: zero vector");
  nrm = std::sqrt(nrm);
  for (double& x : v) x /= nrm;
  Axis a;
  a.c = std::move(v);
  return a;
}

// ---------------------------------------------------------------------------
// Hyperspherical charts. For S^m the angles t_0..t_{m-1} have t_0..t_{m-2} in
// [0,pi] and t_{m-1} in [0,2pi); coordinates are
//   w_i = sin t_0 ... sin t_{i-1} cos t_i   (i < m),   w_m = sin t_0 ... sin t_{m-1},
// with unit-sphere density prod_{i<m-1} sin^{m-1-i} t_i.
// ---------------------------------------------------------------------------

namespace {

ChartBox factor_box(int m) {
  ChartBox b;
  b.lo.assign(static_cast<std::size_t>(m), 0.0);
  b.hi.assign(static_cast<std::size_t>(m), kPi);
  b.hi[static_cast<std::size_t>(m - 1)] = 2.0 * kPi;
  return b;
}

// Writes m+1 coordinates scaled by r; returns the unit-sphere angle density.
double hyperspherical_point(const double* angles, int m, double r, double* out) {
  double prefix = 1.0, jac = 1.0;
  for (int i = 0; i < m; ++i) {
    const double c = std::cos(angles[i]);
    const double s = std::sin(angles[i]);
    out[i] = r * prefix * c;
    if (i < m - 1) jac *= std::pow(s, m - 1 - i);
    prefix *= s;
  }
  out[m] = r * prefix;
  return jac;
}

// Recovers angles from a unit vector w[0..m]; degenerate prefixes leave the
// remaining angles at 0.
void hyperspherical_invert(const double* w, int m, double* angles) {
  double prefix = 1.0;
  for (int i = 0; i < m - 1; ++i) {
    double c = prefix > 1e-300 ? w[i] / prefix : 1.0;
    c = std::clamp(c, -1.0, 1.0);
    angles[i] = std::acos(c);
    prefix *= std::sin(angles[i]);
  }
  double az = std::atan2(w[m], w[m - 1]);
  if (az < 0.0) az += 2.0 * kPi;
  if (prefix <= 1e-300) az = 0.0;
  angles[m - 1] = az;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hypersurface
// ---------------------------------------------------------------------------

Hypersurface Hypersurface::equator(int n) {
  if (n < 2) throw std::invalid_argument("equator: n must be >= 2");
  Hypersurface M;
  M.kind_ = SurfaceKind::Equator;
  M.n_ = n;
  M.S_const_ = 0.0;
  M.charts_ = {factor_box(n)};
  return M;
}

Hypersurface Hypersurface::clifford(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("clifford: p and q must be >= 1");
  Hypersurface M;
  M.kind_ = SurfaceKind::Clifford;
  M.p_ = p;
  M.q_ = q;
  M.n_ = p + q;
  M.r1_ = std::sqrt(static_cast<double>(p) / M.n_);
  M.r2_ = std::sqrt(static_cast<double>(q) / M.n_);
  M.S_const_ = static_cast<double>(M.n_);
  ChartBox box = factor_box(p);
  const ChartBox second = factor_box(q);
  box.lo.insert(box.lo.end(), second.lo.begin(), second.lo.end());
  box.hi.insert(box.hi.end(), second.hi.begin(), second.hi.end());
  M.charts_ = {box};
  return M;
}

std::optional<IsoparametricMeta> Hypersurface::isoparametric_meta() const {
  if (kind_ == SurfaceKind::Clifford) return IsoparametricMeta{n_, 2};
  return std::nullopt;  // the equator has g = 1, outside the 2 <= g <= 6 family
}

void Hypersurface::eval_frame(const ChartPoint& pt, PointFrame& out) const {
  if (pt.chart_id != 0) throw std::domain_error("eval_frame: unknown chart id");
  const ChartBox& box = charts_[0];
  if (static_cast<int>(pt.coords.size()) != box.dim())
    throw std::domain_error("eval_frame: coordinate count mismatch");
  for (int d = 0; d < box.dim(); ++d) {
    const double c = pt.coords[static_cast<std::size_t>(d)];
    if (!(c >= box.lo[static_cast<std::size_t>(d)] - 1e-9 &&
          c <= box.hi[static_cast<std::size_t>(d)] + 1e-9)) {
      std::ostringstream os;
      os << "eval_frame: coordinate " << d << " = " << c << " outside chart domain ["
         << box.lo[static_cast<std::size_t>(d)] << ", " << box.hi[static_cast<std::size_t>(d)] << "]";
      throw std::domain_error(os.str());
    }
  }

  const std::size_t adim = static_cast<std::size_t>(ambient_dim());
  out.position.resize(adim);
  out.normal.resize(adim);

  if (kind_ == SurfaceKind::Equator) {
    const double jac = hyperspherical_point(pt.coords.data(), n_, 1.0, out.position.data());
    out.position[adim - 1] = 0.0;
    std::fill(out.normal.begin(), out.normal.end(), 0.0);
    out.normal[adim - 1] = 1.0;  // outward pole convention
    out.principal = {{0.0, n_}};
    out.S = 0.0;
    out.H = 0.0;
    out.metric_jacobian = jac;
    return;
  }

  const double jac_u = hyperspherical_point(pt.coords.data(), p_, 1.0, out.position.data());
  const double jac_v =
      hyperspherical_point(pt.coords.data() + p_, q_, 1.0, out.position.data() + p_ + 1);
  for (int i = 0; i <= p_; ++i) {
    const double u = out.position[static_cast<std::size_t>(i)];
    out.position[static_cast<std::size_t>(i)] = r1_ * u;
    out.normal[static_cast<std::size_t>(i)] = -r2_ * u;
  }
  for (int i = 0; i <= q_; ++i) {
    const double v = out.position[static_cast<std::size_t>(p_ + 1 + i)];
    out.position[static_cast<std::size_t>(p_ + 1 + i)] = r2_ * v;
    out.normal[static_cast<std::size_t>(p_ + 1 + i)] = r1_ * v;
  }
  // A = (r2/r1) Id on the first factor, -(r1/r2) Id on the second; minimality
  // p (r2/r1) = q (r1/r2) holds by the choice of radii, and S = q + p = n.
  out.principal = {{r2_ / r1_, p_}, {-r1_ / r2_, q_}};
  out.S = static_cast<double>(n_);
  out.H = 0.0;
  out.metric_jacobian = std::pow(r1_, p_) * std::pow(r2_, q_) * jac_u * jac_v;
}

PointFrame Hypersurface::frame_at(const ChartPoint& p) const {
  PointFrame f;
  eval_frame(p, f);
  return f;
}

ChartPoint Hypersurface::invert_point(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != ambient_dim())
    throw std::invalid_argument("invert_point: dimension mismatch");
  ChartPoint pt;
  pt.chart_id = 0;
  pt.coords.assign(static_cast<std::size_t>(n_), 0.0);
  if (kind_ == SurfaceKind::Equator) {
    hyperspherical_invert(x.data(), n_, pt.coords.data());
    return pt;
  }
  std::vector<double> u(static_cast<std::size_t>(p_ + 1)), v(static_cast<std::size_t>(q_ + 1));
  for (int i = 0; i <= p_; ++i) u[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] / r1_;
  for (int i = 0; i <= q_; ++i)
    v[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(p_ + 1 + i)] / r2_;
  hyperspherical_invert(u.data(), p_, pt.coords.data());
  hyperspherical_invert(v.data(), q_, pt.coords.data() + p_);
  return pt;
}

ChartPoint Hypersurface::sample_point(uint64_t seed, uint64_t index) const {
  const ChartBox& box = charts_[0];
  ChartPoint pt;
  pt.chart_id = 0;
  pt.coords.resize(static_cast<std::size_t>(box.dim()));
  for (int d = 0; d < box.dim(); ++d) {
    const double t = u01(seed, static_cast<uint64_t>(d), index);
    pt.coords[static_cast<std::size_t>(d)] =
        box.lo[static_cast<std::size_t>(d)] +
        t * (box.hi[static_cast<std::size_t>(d)] - box.lo[static_cast<std::size_t>(d)]);
  }
  return pt;
}

double Hypersurface::closed_form_volume() const {
  if (kind_ == SurfaceKind::Equator) return sphere_volume(n_);
  return sphere_volume(p_) * std::pow(r1_, p_) * sphere_volume(q_) * std::pow(r2_, q_);
}

std::string Hypersurface::descriptor() const {
  std::ostringstream os;
  if (kind_ == SurfaceKind::Equator)
    os << "equator:" << n_;
  else
    os << "clifford:" << p_ << "," << q_;
  return os.str();
}

std::optional<AxisAlignment> Hypersurface::alignment(const Axis& a) const {
  if (a.dim() != ambient_dim()) throw std::invalid_argument("alignment: axis dimension mismatch");
  int idx = -1;
  for (int i = 0; i < a.dim(); ++i) {
    const double v = std::abs(a.c[static_cast<std::size_t>(i)]);
    if (v > 1e-12) {
      if (v < 1.0 - 1e-12 || idx >= 0) return std::nullopt;
      idx = i;
    }
  }
  if (idx < 0) return std::nullopt;
  AxisAlignment al;
  al.ambient_index = idx;
  al.sign = a.c[static_cast<std::size_t>(idx)] >= 0.0 ? 1.0 : -1.0;
  if (kind_ == SurfaceKind::Equator) {
    if (idx == ambient_dim() - 1) {
      al.pole = true;
      return al;
    }
    al.factor = 0;
    al.factor_dim = n_;
    al.factor_radius = 1.0;
    al.coord_in_factor = idx;
    return al;
  }
  if (idx <= p_) {
    al.factor = 0;
    al.factor_dim = p_;
    al.factor_radius = r1_;
    al.coord_in_factor = idx;
  } else {
    al.factor = 1;
    al.factor_dim = q_;
    al.factor_radius = r2_;
    al.coord_in_factor = idx - (p_ + 1);
  }
  return al;
}

// ---------------------------------------------------------------------------
// Pointwise operations
// ---------------------------------------------------------------------------

namespace {
double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
}  // namespace

double height(const PointFrame& f, const Axis& a) { return dot(f.position, a.c); }

double normal_height(const PointFrame& f, const Axis& a) { return dot(f.normal, a.c); }

double tangent_norm_sq(const PointFrame& f, const Axis& a) {
  const double phi = height(f, a);
  const double psi = normal_height(f, a);
  return std::clamp(1.0 - phi * phi - psi * psi, 0.0, 1.0);
}

double laplacian_height(const Hypersurface& M, const PointFrame& f, const Axis& a) {
  const double n = static_cast<double>(M.n());
  return -n * height(f, a) + n * f.H * normal_height(f, a);
}

double laplacian_normal_height(const Hypersurface& M, const PointFrame& f, const Axis& a) {
  // grad H vanishes identically on the catalog (H = 0 everywhere).
  const double n = static_cast<double>(M.n());
  return n * f.H * height(f, a) - f.S * normal_height(f, a);
}

std::vector<double> principal_components_sq(const Hypersurface& M, const PointFrame& f,
                                            const Axis& a) {
  if (M.kind() == SurfaceKind::Equator) {
    // A = 0: the principal frame is any orthonormal completion, so the single
    // eigenvalue's subspace carries all of a^T.
    return {tangent_norm_sq(f, a)};
  }
  const int p = M.p(), q = M.q();
  double a1_sq = 0.0, a1u = 0.0, a2_sq = 0.0, a2v = 0.0;
  for (int i = 0; i <= p; ++i) {
    const double ai = a.c[static_cast<std::size_t>(i)];
    const double ui = f.position[static_cast<std::size_t>(i)] / M.r1();
    a1_sq += ai * ai;
    a1u += ai * ui;
  }
  for (int i = 0; i <= q; ++i) {
    const double ai = a.c[static_cast<std::size_t>(p + 1 + i)];
    const double vi = f.position[static_cast<std::size_t>(p + 1 + i)] / M.r2();
    a2_sq += ai * ai;
    a2v += ai * vi;
  }
  return {std::max(0.0, a1_sq - a1u * a1u), std::max(0.0, a2_sq - a2v * a2v)};
}

double ricci_quadratic(const Hypersurface& M, const PointFrame& f, const Axis& a) {
  const std::vector<double> comp = principal_components_sq(M, f, a);
  const double n = static_cast<double>(M.n());
  double out = 0.0;
  for (std::size_t i = 0; i < f.principal.size(); ++i) {
    const double lam = f.principal[i].value;
    out += (f.S / n - lam * lam) * comp[i];
  }
  return out;
}

}  // namespace minsph
