#pragma once

#include <vector>

namespace minsph {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule of the given order (number of nodes >= 1).
// Rules are cached; lookup is thread-safe.
const GaussRule& gauss_legendre(int order);

// Integrate f over [a, b] with the given order.
template <class F>
double gauss_1d(F&& f, double a, double b, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

}  // namespace minsph
