#pragma once

// Wald tests for homogeneity and the Monte Carlo volume of their acceptance
// regions in the space of estimated cell proportions.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "homvol/estimate.hpp"
#include "homvol/integrate.hpp"
#include "homvol/rng.hpp"
#include "homvol/scales.hpp"

namespace homvol {

// Estimated cell proportions from the four exposure groups; same open-cube
// constraint as the probabilities they estimate.
using EstimateQuad = OutcomeQuad;

// Per-group sample sizes and the test level.
struct WaldConfig {
  std::int64_t n11, n10, n01, n00;
  double alpha;

  WaldConfig(std::int64_t n11_, std::int64_t n10_, std::int64_t n01_, std::int64_t n00_,
             double alpha_)
      : n11(n11_), n10(n10_), n01(n01_), n00(n00_), alpha(alpha_) {
    if (n11 < 1 || n10 < 1 || n01 < 1 || n00 < 1) {
      throw std::invalid_argument("WaldConfig: every group size must be at least 1");
    }
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
      throw std::domain_error("WaldConfig: alpha must lie strictly inside (0, 1)");
    }
  }

  WaldConfig(std::int64_t n, double alpha_) : WaldConfig(n, n, n, n, alpha_) {}
};

// Inverse standard normal CDF.  The upper half is mapped to the lower by
// symmetry, then a rational initial approximation (the classic minimax fit,
// |error| < 1.2e-9) is polished by one Halley step against the erfc-based
// CDF, which leaves the result accurate to a few ulp across (1e-12, 1 - 1e-12).
inline double normal_quantile(double q) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw std::domain_error("normal_quantile: argument must lie strictly inside (0, 1)");
  }
  // Reduce the upper half to the lower by symmetry: for q in (0.5, 1) the
  // complement 1 - q is exact (Sterbenz), the refinement below then works on
  // a CDF value with full relative accuracy (erfc of a nonnegative argument
  // instead of a value crowded against one), and antisymmetry is exact by
  // construction.
  if (q > 0.5) return -normal_quantile(1.0 - q);
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (q < p_low) {
    const double u = std::sqrt(-2.0 * std::log(q));
    x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  } else {
    const double u = q - 0.5;
    const double r = u * u;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  // Halley refinement of Phi(x) = q, with Phi(x) = erfc(-x / sqrt(2)) / 2.
  // Skipped in the far tails where exp(x^2 / 2) would overflow; there the
  // initial approximation already meets its stated error bound.
  if (x * x < 1400.0) {
    const double sqrt2 = 1.4142135623730951;
    const double sqrt_2pi = 2.5066282746310002;
    const double err = 0.5 * std::erfc(-x / sqrt2) - q;
    const double step = err * sqrt_2pi * std::exp(0.5 * x * x);
    x -= step / (1.0 + 0.5 * x * step);
  }
  return x;
}

// Chi-square(1) critical value at level alpha, as the squared normal
// quantile: {Phi^-1(alpha/2)}^2.
inline double critical_value(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::domain_error("critical_value: alpha must lie strictly inside (0, 1)");
  }
  const double z = normal_quantile(alpha / 2.0);
  return z * z;
}

namespace detail {
inline double logit(double u) { return std::log(u) - std::log1p(-u); }
}  // namespace detail

// Wald statistic for homogeneity: squared estimated contrast over its
// estimated variance, on the scale where the contrast is linear in the
// transformed cells.
//   additive:        contrast p11 - p10 - p01 + p00, term p(1-p)/n
//   multiplicative:  contrast of logs,               term (1-p)/(n p)
//   odds:            contrast of logits,             term 1/(n p (1-p))
inline double wald_statistic(const EstimateQuad& q, EffectScale s, const WaldConfig& cfg) {
  const double n11 = static_cast<double>(cfg.n11), n10 = static_cast<double>(cfg.n10);
  const double n01 = static_cast<double>(cfg.n01), n00 = static_cast<double>(cfg.n00);
  double contrast = 0.0, var = 0.0;
  switch (s) {
    case EffectScale::RiskDifference:
      contrast = q.p11 - q.p10 - q.p01 + q.p00;
      var = q.p11 * (1.0 - q.p11) / n11 + q.p10 * (1.0 - q.p10) / n10 +
            q.p01 * (1.0 - q.p01) / n01 + q.p00 * (1.0 - q.p00) / n00;
      break;
    case EffectScale::RiskRatio:
      contrast = std::log(q.p11) - std::log(q.p10) - std::log(q.p01) + std::log(q.p00);
      var = (1.0 - q.p11) / (n11 * q.p11) + (1.0 - q.p10) / (n10 * q.p10) +
            (1.0 - q.p01) / (n01 * q.p01) + (1.0 - q.p00) / (n00 * q.p00);
      break;
    case EffectScale::OddsRatio:
      contrast = detail::logit(q.p11) - detail::logit(q.p10) - detail::logit(q.p01) +
                 detail::logit(q.p00);
      var = 1.0 / (n11 * q.p11 * (1.0 - q.p11)) + 1.0 / (n10 * q.p10 * (1.0 - q.p10)) +
            1.0 / (n01 * q.p01 * (1.0 - q.p01)) + 1.0 / (n00 * q.p00 * (1.0 - q.p00));
      break;
  }
  return contrast * contrast / var;
}

namespace detail {
// Uniform draw in the open interval (0, 1): an exact 0 from the generator
// would put an estimated proportion on the cell boundary, so it is redrawn.
inline double uniform_open(std::mt19937_64& eng) {
  double u;
  do {
    u = uniform01(eng);
  } while (u == 0.0);
  return u;
}
}  // namespace detail

// Monte Carlo volume of the Wald acceptance region
//   {q in (0,1)^4 : statistic(q) <= critical_value(alpha)}
// inside the unit four-cube of estimated proportions.  Chunked sampling as in
// mc_volume, so results are bit-identical for identical (seed, samples,
// chunks); with a fixed seed the hit set shrinks as every group size grows,
// because the draws do not depend on the group sizes while the statistic
// scales up with them.
inline VolumeEstimate acceptance_volume(EffectScale s, const WaldConfig& wald,
                                        const McConfig& cfg) {
  detail::validate(cfg);
  const double crit = critical_value(wald.alpha);
  const std::uint64_t base = cfg.samples / cfg.chunks;
  const std::uint64_t extra = cfg.samples % cfg.chunks;
  std::uint64_t hits = 0;
  for (std::uint32_t c = 0; c < cfg.chunks; ++c) {
    std::mt19937_64 eng = chunk_engine(cfg.seed, c);
    const std::uint64_t count = base + (c < extra ? 1 : 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double u1 = detail::uniform_open(eng);
      const double u2 = detail::uniform_open(eng);
      const double u3 = detail::uniform_open(eng);
      const double u4 = detail::uniform_open(eng);
      const EstimateQuad q(u1, u2, u3, u4);
      if (wald_statistic(q, s, wald) <= crit) ++hits;
    }
  }
  const double n = static_cast<double>(cfg.samples);
  const double value = static_cast<double>(hits) / n;
  const double se = std::sqrt(value * (1.0 - value) / n);
  return monte_carlo_estimate(value, se, cfg.samples, cfg.seed);
}

// Standard per-group size grid used by the tabulated results.
inline std::vector<std::int64_t> default_n_grid() { return {100, 500, 2000, 5000, 10000}; }

// One row of the acceptance-volume table: the three volumes at common group
// size n, their standard errors, and the ratios against the additive scale.
struct WaldRow {
  std::int64_t n;
  std::array<double, 3> volume;     // ordered as kAllScales: rd, rr, or
  std::array<double, 3> std_error;
  double ratio_rr_over_rd;
  double ratio_or_over_rd;
};

// Acceptance-region volumes over a grid of common group sizes, all scales and
// all sizes evaluated on one shared set of draws (common random numbers).
// For common group size n each statistic factors as n * T(q) with T free of
// n, so a draw is a hit at size n exactly when T(q) <= critical_value / n:
// one pass over the samples fills the whole table, the ratios compare like
// with like, and the volumes are exactly non-increasing in n.
inline std::vector<WaldRow> table_wald(const std::vector<std::int64_t>& ns, double alpha,
                                       const McConfig& cfg) {
  if (ns.empty()) throw std::invalid_argument("table_wald: empty size grid");
  for (std::int64_t n : ns) {
    if (n < 1) throw std::invalid_argument("table_wald: every group size must be at least 1");
  }
  detail::validate(cfg);
  const double crit = critical_value(alpha);
  std::vector<double> threshold(ns.size());
  for (std::size_t k = 0; k < ns.size(); ++k) {
    threshold[k] = crit / static_cast<double>(ns[k]);
  }
  std::vector<std::array<std::uint64_t, 3>> hits(ns.size(), {0, 0, 0});
  const std::uint64_t base = cfg.samples / cfg.chunks;
  const std::uint64_t extra = cfg.samples % cfg.chunks;
  for (std::uint32_t c = 0; c < cfg.chunks; ++c) {
    std::mt19937_64 eng = chunk_engine(cfg.seed, c);
    const std::uint64_t count = base + (c < extra ? 1 : 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double u1 = detail::uniform_open(eng);
      const double u2 = detail::uniform_open(eng);
      const double u3 = detail::uniform_open(eng);
      const double u4 = detail::uniform_open(eng);
      const double ca = u1 - u2 - u3 + u4;
      const double va = u1 * (1.0 - u1) + u2 * (1.0 - u2) + u3 * (1.0 - u3) + u4 * (1.0 - u4);
      const double ta = ca * ca / va;
      const double l1 = std::log(u1), l2 = std::log(u2), l3 = std::log(u3), l4 = std::log(u4);
      const double cm = l1 - l2 - l3 + l4;
      const double vm = (1.0 - u1) / u1 + (1.0 - u2) / u2 + (1.0 - u3) / u3 + (1.0 - u4) / u4;
      const double tm = cm * cm / vm;
      const double g1 = l1 - std::log1p(-u1), g2 = l2 - std::log1p(-u2);
      const double g3 = l3 - std::log1p(-u3), g4 = l4 - std::log1p(-u4);
      const double co = g1 - g2 - g3 + g4;
      const double vo = 1.0 / (u1 * (1.0 - u1)) + 1.0 / (u2 * (1.0 - u2)) +
                        1.0 / (u3 * (1.0 - u3)) + 1.0 / (u4 * (1.0 - u4));
      const double to = co * co / vo;
      for (std::size_t k = 0; k < ns.size(); ++k) {
        hits[k][0] += ta <= threshold[k] ? 1 : 0;
        hits[k][1] += tm <= threshold[k] ? 1 : 0;
        hits[k][2] += to <= threshold[k] ? 1 : 0;
      }
    }
  }
  const double n = static_cast<double>(cfg.samples);
  std::vector<WaldRow> rows;
  rows.reserve(ns.size());
  for (std::size_t k = 0; k < ns.size(); ++k) {
    WaldRow row;
    row.n = ns[k];
    for (std::size_t j = 0; j < 3; ++j) {
      row.volume[j] = static_cast<double>(hits[k][j]) / n;
      row.std_error[j] = std::sqrt(row.volume[j] * (1.0 - row.volume[j]) / n);
    }
    row.ratio_rr_over_rd = row.volume[0] > 0.0 ? row.volume[1] / row.volume[0] : 0.0;
    row.ratio_or_over_rd = row.volume[0] > 0.0 ? row.volume[2] / row.volume[0] : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace homvol
