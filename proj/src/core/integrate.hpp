#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace minsph {

struct QuadratureSpec {
  enum class Method { TensorGauss, MonteCarlo };

  Method method = Method::TensorGauss;
  std::vector<int> orders;     // per-dimension node counts (broadcast if size 1)
  long long samples = 0;       // Monte Carlo
  uint64_t seed = 0;

  static QuadratureSpec gauss(int order);
  static QuadratureSpec gauss(std::vector<int> orders);
  static QuadratureSpec monte_carlo(long long samples, uint64_t seed);
  // gauss:64 for n <= 3, mc:1000000:42 otherwise.
  static QuadratureSpec default_for(const Hypersurface& M);

  int order_for_dim(int d) const;
  void validate(int dims) const;
  std::string to_string() const;
};

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;  // TensorGauss: next-lower-order difference; MC: 3x standard error
  std::string method_tag;
};

using ScalarField = std::function<double(const PointFrame&)>;

// Chart-sum of f * metric_jacobian over the given boxes (defaults to the
// surface's charts). Deterministic for a fixed spec; Monte Carlo streams are
// counter-based per (box, dimension). A non-finite integrand value aborts
// with a diagnostic naming the chart point.
IntegralEstimate integrate(const Hypersurface& M, const ScalarField& f,
                           const QuadratureSpec& spec);
IntegralEstimate integrate_boxes(const Hypersurface& M, const std::vector<ChartBox>& boxes,
                                 const ScalarField& f, const QuadratureSpec& spec);

IntegralEstimate volume(const Hypersurface& M, const QuadratureSpec& spec);

// Second moment of the height function, int phi_a^2.
IntegralEstimate moment2(const Hypersurface& M, const Axis& a, const QuadratureSpec& spec);

// int |phi_a|. For axis-aligned axes under TensorGauss the chart is split
// along the sign-change hyperplanes of the aligned coordinate; generic axes
// fall back to Monte Carlo (the kink defeats polynomial quadrature).
IntegralEstimate moment_abs(const Hypersurface& M, const Axis& a, const QuadratureSpec& spec);

struct SIntegrals {
  IntegralEstimate int_S;
  IntegralEstimate int_S2;
  double S_max = 0.0;
};

// Exact on catalog members (S is constant): S*Vol, S^2*Vol, S.
SIntegrals s_integrals(const Hypersurface& M, const QuadratureSpec& spec);

// Monte Carlo spec used when a TensorGauss request meets a non-smooth
// integrand with no analytic split available.
QuadratureSpec fallback_monte_carlo(const QuadratureSpec& spec);

}  // namespace minsph
