// Test-only reference computations, kept independent of the implementation
// paths they check: straight Simpson quadrature, dense-grid minimization,
// series incomplete gamma, finite-difference gradients, closed-form moments.
#pragma once

#include <functional>

#include "core/geometry.hpp"

namespace minsph::oracle {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12);

struct GridMin {
  double x = 0.0;
  double fx = 0.0;
};

// Dense grid plus ternary-search refinement of the best cell.
GridMin grid_minimize(const std::function<double(double)>& f, double a, double b, int points);

double c2_objective_ref(int n, double s, double r);
GridMin c2_oracle(int n, double s, int points = 100000);

// Gamma(a, x) computed as Gamma(a) minus the lower-gamma power series.
double upper_gamma_series(double a, double x);

// |grad phi_a|^2 from central differences of the chart embedding: both the
// differential of phi and the full chart metric come from finite differences.
double fd_tangent_norm_sq(const Hypersurface& M, const ChartPoint& pt, const Axis& a,
                          double h = 1e-5);

// Mean of phi_a^2 over the Clifford torus: alpha (p/n)/(p+1) + (1-alpha) (q/n)/(q+1),
// alpha the squared axis mass on the first factor.
double clifford_moment2_fraction(int p, int q, double alpha);

// Vol(S^m) by the 2 pi / (m-1) recursion from S^0 and S^1.
double sphere_volume_ref(int m);

}  // namespace minsph::oracle
