#pragma once

// Quadrature building blocks: Gauss-Legendre rules and graded product meshes.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace homvol {

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre recurrence from the standard cosine initial guesses.
struct GaussRule {
  std::vector<double> node, weight;
};

inline GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  GaussRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  const double pi = 3.14159265358979323846;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double deriv = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      // Evaluate P_n and P_{n-1} by upward recurrence.
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      deriv = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.node[i] = -x;
    rule.node[n - 1 - i] = x;
    rule.weight[i] = rule.weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * deriv * deriv);
  }
  return rule;
}

// A composite quadrature axis on [0, 1]: nodes and weights of an n-point
// Gauss rule mapped onto each cell of a mesh.
struct QuadAxis {
  std::vector<double> node, weight;
};

// Dyadic mesh on [0, 1] graded toward both endpoints:
//   {0, 2^-R, ..., 1/4, 1/2, 3/4, ..., 1 - 2^-R, 1}
// (2R cells; a single cell when R = 0).  Composite Gauss quadrature on this
// mesh resolves integrable endpoint singularities: cell widths shrink
// geometrically toward the ends, so an integrand blowing up like a negative
// power with integrable strength is captured to roughly 2^-R accuracy.
inline QuadAxis graded_axis(int refinement, int n) {
  if (refinement < 0) throw std::invalid_argument("graded_axis: refinement must be non-negative");
  const GaussRule rule = gauss_legendre(n);
  std::vector<double> breaks;
  breaks.push_back(0.0);
  for (int k = refinement; k >= 1; --k) breaks.push_back(std::ldexp(1.0, -k));
  for (int k = 2; k <= refinement; ++k) breaks.push_back(1.0 - std::ldexp(1.0, -k));
  breaks.push_back(1.0);
  QuadAxis axis;
  axis.node.reserve((breaks.size() - 1) * n);
  axis.weight.reserve((breaks.size() - 1) * n);
  for (std::size_t c = 0; c + 1 < breaks.size(); ++c) {
    const double a = breaks[c], b = breaks[c + 1];
    const double mid = 0.5 * (a + b), scale = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
      axis.node.push_back(mid + scale * rule.node[i]);
      axis.weight.push_back(scale * rule.weight[i]);
    }
  }
  return axis;
}

}  // namespace homvol
