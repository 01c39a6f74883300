#pragma once

// Differential geometry of the homogeneity surfaces: graph Jacobians, the
// Gram-determinant area factor, pointwise volume elements, and the closed-form
// domain/surface volumes where they exist.
//
// Each surface is the graph of w = solve_fourth(x, y, z) over its domain, so
// its parametrisation has Jacobian J = [I_3; grad w] (4x3) and the induced
// three-volume element is sqrt(det(J^T J)) = sqrt(1 + |grad w|^2).

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "homvol/estimate.hpp"
#include "homvol/scales.hpp"

namespace homvol {

// Jacobian of the graph map (x, y, z) -> (x, y, z, w): three unit rows on top,
// the gradient of the solved fourth cell at the bottom.
struct JacobianMatrix {
  std::array<std::array<double, 3>, 4> rows{};
};

// sqrt(det(A^T A)) for a tall matrix A (row-major, rows >= cols, cols <= 3):
// the k-volume scaling factor of the linear map A.  The Gram matrix is formed
// explicitly and its determinant taken in closed form; for the rank-deficient
// case the determinant is zero up to rounding, and tiny negative rounding
// residue is clamped before the square root.
inline double gram_volume(const double* a, std::size_t rows, std::size_t cols) {
  if (cols < 1 || cols > 3) {
    throw std::invalid_argument("gram_volume: column count must be 1, 2, or 3");
  }
  if (rows < cols) {
    throw std::invalid_argument("gram_volume: matrix has fewer rows than columns");
  }
  double g[3][3] = {};
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = i; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < rows; ++r) s += a[r * cols + i] * a[r * cols + j];
      g[i][j] = g[j][i] = s;
    }
  }
  double det = 0.0;
  switch (cols) {
    case 1:
      det = g[0][0];
      break;
    case 2:
      det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
      break;
    case 3:
      det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
            g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
            g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
      break;
  }
  return std::sqrt(det > 0.0 ? det : 0.0);
}

template <std::size_t R, std::size_t C>
double gram_volume(const std::array<std::array<double, C>, R>& a) {
  return gram_volume(&a[0][0], R, C);
}

inline double gram_volume(const JacobianMatrix& j) { return gram_volume(j.rows); }

// Shared pieces of the odds-scale gradient.  With h = odds and
// l(u) = 1/(u (1-u)), the solved cell w = inverse_odds(h(y) h(z) / h(x)) has
//   grad w = k * (-l(x), l(y), l(z)),  k = h(x) h(y) h(z) / (h(x) + h(y) h(z))^2,
// because d/du inverse_odds(c) = c/(1+c)^2 * dlog(c)/du and dlog h(u)/du = l(u).
struct GramFactor {
  double k;
  double lx, ly, lz;
};

inline double recip_var(double u) { return 1.0 / (u * (1.0 - u)); }

inline GramFactor gram_factor(const CellTriple& t) {
  const double hx = odds(t.x), hy = odds(t.y), hz = odds(t.z);
  const double s = hx + hy * hz;
  return {hx * hy * hz / (s * s), recip_var(t.x), recip_var(t.y), recip_var(t.z)};
}

inline JacobianMatrix jacobian(EffectScale s, const CellTriple& t) {
  JacobianMatrix j;
  j.rows[0] = {1.0, 0.0, 0.0};
  j.rows[1] = {0.0, 1.0, 0.0};
  j.rows[2] = {0.0, 0.0, 1.0};
  switch (s) {
    case EffectScale::RiskDifference:
      j.rows[3] = {-1.0, 1.0, 1.0};
      break;
    case EffectScale::RiskRatio:
      j.rows[3] = {-t.y * t.z / (t.x * t.x), t.z / t.x, t.y / t.x};
      break;
    case EffectScale::OddsRatio: {
      const GramFactor f = gram_factor(t);
      j.rows[3] = {-f.k * f.lx, f.k * f.ly, f.k * f.lz};
      break;
    }
  }
  return j;
}

// sqrt(1 + |grad w|^2), specialised per scale:
//   additive:        2 (constant)
//   multiplicative:  sqrt((1 + (y/x)^2)(1 + (z/x)^2)), since the cross term
//                    (yz/x^2)^2 completes the product
//   odds:            sqrt(1 + k^2 (l(x)^2 + l(y)^2 + l(z)^2))
inline double volume_element(EffectScale s, const CellTriple& t) {
  switch (s) {
    case EffectScale::RiskDifference:
      return 2.0;
    case EffectScale::RiskRatio: {
      const double ry = t.y / t.x, rz = t.z / t.x;
      return std::sqrt((1.0 + ry * ry) * (1.0 + rz * rz));
    }
    case EffectScale::OddsRatio: {
      const GramFactor f = gram_factor(t);
      return std::sqrt(1.0 + f.k * f.k * (f.lx * f.lx + f.ly * f.ly + f.lz * f.lz));
    }
  }
  throw std::invalid_argument("volume_element: unknown scale");
}

// Unit-bound surface volume of the multiplicative scale:
// (sqrt(2) + arcsinh(1))^2 / 3, with arcsinh(1) = log(1 + sqrt(2)).
inline double surface_unit_rr() {
  const double r = std::sqrt(2.0) + std::asinh(1.0);
  return r * r / 3.0;
}

// Closed-form domain volumes F(p).  The additive and multiplicative scales
// are exact cubics in p; the odds scale has a closed value only at p = 1
// (the whole open cube, volume one).  Every cubic is written unit * (p*p*p)
// so the p^3 scaling law holds exactly in floating point as well.
inline std::optional<double> closed_domain_volume(EffectScale s, ProbBound bound) {
  const double p3 = bound.p * bound.p * bound.p;
  switch (s) {
    case EffectScale::RiskDifference:
      return (2.0 / 3.0) * p3;
    case EffectScale::RiskRatio:
      return (3.0 / 4.0) * p3;
    case EffectScale::OddsRatio:
      if (bound.p == 1.0) return 1.0;
      return std::nullopt;
  }
  throw std::invalid_argument("closed_domain_volume: unknown scale");
}

// Closed-form surface volumes V(p); the odds scale has none.
inline std::optional<double> closed_surface_volume(EffectScale s, ProbBound bound) {
  const double p3 = bound.p * bound.p * bound.p;
  switch (s) {
    case EffectScale::RiskDifference:
      return (4.0 / 3.0) * p3;
    case EffectScale::RiskRatio:
      return surface_unit_rr() * p3;
    case EffectScale::OddsRatio:
      return std::nullopt;
  }
  throw std::invalid_argument("closed_surface_volume: unknown scale");
}

// Surface-to-domain volume ratio V(p)/F(p), with the pair that produced it.
struct VolumeRatio {
  double ratio;
  VolumeEstimate surface;
  VolumeEstimate domain;
};

// Uses closed forms whenever they exist; otherwise falls back to the supplied
// numeric estimates (as produced by the integration engines).  The additive
// ratio is exactly 2 in floating point: both closed cubics share the factor
// p*p*p and their unit coefficients differ by an exact power of two.
inline VolumeRatio ratio_v_over_f(EffectScale s, ProbBound bound,
                                  std::optional<VolumeEstimate> surface_fallback = std::nullopt,
                                  std::optional<VolumeEstimate> domain_fallback = std::nullopt) {
  std::optional<VolumeEstimate> v, f;
  if (auto closed = closed_surface_volume(s, bound)) {
    v = closed_estimate(*closed);
  } else {
    v = surface_fallback;
  }
  if (auto closed = closed_domain_volume(s, bound)) {
    f = closed_estimate(*closed);
  } else {
    f = domain_fallback;
  }
  if (!v || !f) {
    throw std::invalid_argument(
        "ratio_v_over_f: no closed form on this scale; supply numeric estimates");
  }
  if (!(f->value > 0.0)) {
    throw std::domain_error("ratio_v_over_f: domain volume must be positive");
  }
  return {v->value / f->value, *v, *f};
}

}  // namespace homvol
