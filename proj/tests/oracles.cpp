#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace minsph::oracle {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double m, double fm,
               double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double m,
                     double fm, double b, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, lm, flm, m, fm);
  const double right = simpson(f, m, fm, rm, frm, b, fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, fa, lm, flm, m, fm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, fm, rm, frm, b, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (b <= a) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_step(f, a, fa, m, fm, b, fb, simpson(f, a, fa, m, fm, b, fb), tol, 40);
}

GridMin grid_minimize(const std::function<double(double)>& f, double a, double b, int points) {
  GridMin best{a, f(a)};
  for (int i = 1; i <= points; ++i) {
    const double x = a + (b - a) * i / points;
    const double fx = f(x);
    if (fx < best.fx) best = {x, fx};
  }
  double lo = std::max(a, best.x - (b - a) / points);
  double hi = std::min(b, best.x + (b - a) / points);
  for (int it = 0; it < 300; ++it) {
    const double x1 = lo + (hi - lo) / 3.0, x2 = hi - (hi - lo) / 3.0;
    if (f(x1) < f(x2))
      hi = x2;
    else
      lo = x1;
  }
  const double xm = 0.5 * (lo + hi);
  const double fxm = f(xm);
  if (fxm < best.fx) best = {xm, fxm};
  return best;
}

double c2_objective_ref(int n, double s, double r) {
  if (r <= s || r >= 1.0) return 1.0;
  const double L = std::log((1.0 - s * s) / (1.0 - r * r));
  return (2.0 + n * r * L) / (2.0 + n * L);
}

GridMin c2_oracle(int n, double s, int points) {
  return grid_minimize([n, s](double r) { return c2_objective_ref(n, s, r); }, s, 1.0, points);
}

double upper_gamma_series(double a, double x) {
  // lower gamma power series: x^a e^-x sum_k x^k / (a (a+1) ... (a+k))
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  const double lower = std::pow(x, a) * std::exp(-x) * sum;
  return std::tgamma(a) - lower;
}

namespace {

// Solve the small SPD system g y = d by Gaussian elimination with partial
// pivoting; dimensions here are <= ~8.
std::vector<double> solve(std::vector<std::vector<double>> g, std::vector<double> d) {
  const int n = static_cast<int>(d.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(g[row][col]) > std::abs(g[piv][col])) piv = row;
    std::swap(g[piv], g[col]);
    std::swap(d[piv], d[col]);
    if (std::abs(g[col][col]) < 1e-14) throw std::runtime_error("fd oracle: singular metric");
    for (int row = col + 1; row < n; ++row) {
      const double f = g[row][col] / g[col][col];
      for (int k = col; k < n; ++k) g[row][k] -= f * g[col][k];
      d[row] -= f * d[col];
    }
  }
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int row = n - 1; row >= 0; --row) {
    double acc = d[row];
    for (int k = row + 1; k < n; ++k) acc -= g[row][k] * y[static_cast<std::size_t>(k)];
    y[static_cast<std::size_t>(row)] = acc / g[row][row];
  }
  return y;
}

}  // namespace

double fd_tangent_norm_sq(const Hypersurface& M, const ChartPoint& pt, const Axis& a, double h) {
  const int dims = static_cast<int>(pt.coords.size());
  const int adim = M.ambient_dim();
  auto position = [&](const ChartPoint& p) { return M.frame_at(p).position; };
  std::vector<std::vector<double>> dx(static_cast<std::size_t>(dims));
  std::vector<double> dphi(static_cast<std::size_t>(dims));
  for (int d = 0; d < dims; ++d) {
    ChartPoint plus = pt, minus = pt;
    plus.coords[static_cast<std::size_t>(d)] += h;
    minus.coords[static_cast<std::size_t>(d)] -= h;
    const std::vector<double> xp = position(plus), xm = position(minus);
    std::vector<double> der(static_cast<std::size_t>(adim));
    double dp = 0.0;
    for (int i = 0; i < adim; ++i) {
      der[static_cast<std::size_t>(i)] =
          (xp[static_cast<std::size_t>(i)] - xm[static_cast<std::size_t>(i)]) / (2.0 * h);
      dp += der[static_cast<std::size_t>(i)] * a.c[static_cast<std::size_t>(i)];
    }
    dx[static_cast<std::size_t>(d)] = std::move(der);
    dphi[static_cast<std::size_t>(d)] = dp;
  }
  std::vector<std::vector<double>> g(static_cast<std::size_t>(dims),
                                     std::vector<double>(static_cast<std::size_t>(dims), 0.0));
  for (int i = 0; i < dims; ++i)
    for (int j = 0; j < dims; ++j) {
      double acc = 0.0;
      for (int k = 0; k < adim; ++k)
        acc += dx[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
               dx[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  const std::vector<double> gradient = solve(g, dphi);
  double out = 0.0;
  for (int i = 0; i < dims; ++i) out += gradient[static_cast<std::size_t>(i)] * dphi[static_cast<std::size_t>(i)];
  return out;
}

double clifford_moment2_fraction(int p, int q, double alpha) {
  const double n = p + q;
  return alpha * (p / n) / (p + 1.0) + (1.0 - alpha) * (q / n) / (q + 1.0);
}

double sphere_volume_ref(int m) {
  if (m == 0) return 2.0;
  if (m == 1) return 2.0 * 3.14159265358979323846;
  return sphere_volume_ref(m - 2) * 2.0 * 3.14159265358979323846 / (m - 1);
}

}  // namespace minsph::oracle
