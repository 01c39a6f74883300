#pragma once

// Numeric volume engines for the homogeneity surfaces and their domains:
// hit-or-miss Monte Carlo (with surface-measure weights) and deterministic
// cubature built on analytic reduction of the inner coordinate.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "homvol/estimate.hpp"
#include "homvol/geometry.hpp"
#include "homvol/quadrature.hpp"
#include "homvol/rng.hpp"
#include "homvol/scales.hpp"

namespace homvol {

enum class VolumeKind {
  Domain,   // plain three-volume of the admissible (x, y, z) set
  Surface,  // surface measure: the domain integral of the volume element
};

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint32_t chunks = 16;
};

struct QuadConfig {
  int nodes_per_axis = 64;  // Gauss-Legendre order per axis (per mesh cell)
  int refinement = 0;       // dyadic grading levels toward each axis endpoint
};

// Defaults per operation: the reduced two-dimensional domain integrals have
// analytic integrands, where a single high-order rule is best; the
// three-dimensional surface integrals have integrable edge singularities in
// the volume element, where a graded mesh with a moderate per-cell order is.
inline QuadConfig domain_quad_defaults() { return {64, 0}; }
inline QuadConfig surface_quad_defaults() { return {10, 14}; }

namespace detail {

inline void validate(const McConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("mc: samples must be positive");
  if (cfg.chunks < 1) throw std::invalid_argument("mc: chunks must be positive");
  if (cfg.chunks > cfg.samples) throw std::invalid_argument("mc: more chunks than samples");
}

inline void validate(const QuadConfig& cfg) {
  if (cfg.nodes_per_axis < 1) throw std::invalid_argument("quad: nodes_per_axis must be positive");
  if (cfg.refinement < 0) throw std::invalid_argument("quad: refinement must be non-negative");
}

}  // namespace detail

// Hit-or-miss Monte Carlo over the box (0, p)^3.  Domain volume uses the
// indicator of the admissible set; surface volume weights each hit by the
// volume element.  Draws on the box boundary (an exact 0 from the generator)
// count as misses, consistent with the open-set convention.  Sampling is
// split into chunks with derived sub-seeds and combined in chunk order, so
// the result is bit-identical for identical (seed, samples, chunks).
inline VolumeEstimate mc_volume(VolumeKind kind, EffectScale s, ProbBound bound,
                                const McConfig& cfg) {
  detail::validate(cfg);
  const double p = bound.p;
  const std::uint64_t base = cfg.samples / cfg.chunks;
  const std::uint64_t extra = cfg.samples % cfg.chunks;
  double sum = 0.0, sumsq = 0.0;
  for (std::uint32_t c = 0; c < cfg.chunks; ++c) {
    std::mt19937_64 eng = chunk_engine(cfg.seed, c);
    const std::uint64_t count = base + (c < extra ? 1 : 0);
    double csum = 0.0, csumsq = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double u1 = uniform01(eng);
      const double u2 = uniform01(eng);
      const double u3 = uniform01(eng);
      double w = 0.0;
      if (u1 > 0.0 && u2 > 0.0 && u3 > 0.0) {
        const CellTriple t(p * u1, p * u2, p * u3);
        if (in_domain(t, bound, s)) {
          w = kind == VolumeKind::Surface ? volume_element(s, t) : 1.0;
        }
      }
      csum += w;
      csumsq += w * w;
    }
    sum += csum;
    sumsq += csumsq;
  }
  const double n = static_cast<double>(cfg.samples);
  const double box = p * p * p;
  const double value = box * (sum / n);
  double se = 0.0;
  if (cfg.samples > 1) {
    const double var = (sumsq - sum * sum / n) / (n - 1.0);
    se = box * std::sqrt((var > 0.0 ? var : 0.0) / n);
  }
  return monte_carlo_estimate(value, se, cfg.samples, cfg.seed);
}

// Domain volume by analytic reduction over the inner coordinate: the
// admissible x-interval for each (y, z) has closed-form length, leaving a
// two-dimensional integral over (0, p)^2.
//
//   additive:        length min(y+z, p) - max(y+z-p, 0); the square is split
//                    along y+z = p into two patches, each mapped to a product
//                    domain so the integrand is polynomial (the rule is then
//                    exact): below, z = s(p-y) with length y+z; above,
//                    z = (p-y) + s y with length 2p - y - z
//   multiplicative:  length p - yz/p (already polynomial)
//   odds:            length p - or_lower_bound(y, z), analytic on the square
inline VolumeEstimate quad_domain_volume(EffectScale s, ProbBound bound,
                                         const QuadConfig& cfg = domain_quad_defaults()) {
  detail::validate(cfg);
  const double p = bound.p;
  const QuadAxis ax = graded_axis(cfg.refinement, cfg.nodes_per_axis);
  const std::size_t m = ax.node.size();
  double acc = 0.0;
  std::uint64_t nodes = 0;
  switch (s) {
    case EffectScale::RiskDifference: {
      for (std::size_t iy = 0; iy < m; ++iy) {
        const double y = p * ax.node[iy], wy = p * ax.weight[iy];
        double row = 0.0;
        for (std::size_t is = 0; is < m; ++is) {
          const double sv = ax.node[is], ws = ax.weight[is];
          const double below = (y + sv * (p - y)) * (p - y);
          const double above = (p - sv * y) * y;
          row += ws * (below + above);
        }
        acc += wy * row;
      }
      nodes = 2 * m * m;
      break;
    }
    case EffectScale::RiskRatio: {
      for (std::size_t iy = 0; iy < m; ++iy) {
        const double y = p * ax.node[iy], wy = p * ax.weight[iy];
        double row = 0.0;
        for (std::size_t iz = 0; iz < m; ++iz) {
          row += ax.weight[iz] * (p - y * (p * ax.node[iz]) / p);
        }
        acc += wy * p * row;
      }
      nodes = m * m;
      break;
    }
    case EffectScale::OddsRatio: {
      for (std::size_t iy = 0; iy < m; ++iy) {
        const double y = p * ax.node[iy], wy = p * ax.weight[iy];
        double row = 0.0;
        for (std::size_t iz = 0; iz < m; ++iz) {
          row += ax.weight[iz] * (p - or_lower_bound(y, p * ax.node[iz], bound));
        }
        acc += wy * p * row;
      }
      nodes = m * m;
      break;
    }
  }
  return cubature_estimate(acc, nodes);
}

// Surface volume sqrt(1 + |grad w|^2) integrated over the domain.  The
// additive scale reuses the reduced two-dimensional scheme (the element is
// the constant 2, so the rule stays exact).  The other scales integrate in
// three dimensions: for each (y, z) the inner coordinate is mapped onto the
// admissible interval (lower bound, p), and all three axes use the graded
// mesh so the integrable blow-up of the element along the domain edges is
// resolved.
inline VolumeEstimate quad_surface_volume(EffectScale s, ProbBound bound,
                                          const QuadConfig& cfg = surface_quad_defaults()) {
  detail::validate(cfg);
  const double p = bound.p;
  if (s == EffectScale::RiskDifference) {
    const VolumeEstimate domain = quad_domain_volume(s, bound, cfg);
    return cubature_estimate(2.0 * domain.value, domain.samples_or_nodes);
  }
  const QuadAxis ax = graded_axis(cfg.refinement, cfg.nodes_per_axis);
  const std::size_t m = ax.node.size();
  double acc = 0.0;
  for (std::size_t iy = 0; iy < m; ++iy) {
    const double y = p * ax.node[iy], wy = p * ax.weight[iy];
    for (std::size_t iz = 0; iz < m; ++iz) {
      const double z = p * ax.node[iz], wz = p * ax.weight[iz];
      const double lo =
          s == EffectScale::RiskRatio ? y * z / p : or_lower_bound(y, z, bound);
      const double len = p - lo;
      const double base = wy * wz * len;
      double col = 0.0;
      for (std::size_t it = 0; it < m; ++it) {
        const CellTriple t(lo + ax.node[it] * len, y, z);
        col += ax.weight[it] * volume_element(s, t);
      }
      acc += base * col;
    }
  }
  return cubature_estimate(acc, static_cast<std::uint64_t>(m) * m * m);
}

// Standard bound grid used by the tabulated results.
inline std::vector<double> default_p_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

// One column of the odds-scale domain-volume table: F_o(p) and F_o(p)/p^3.
struct OddsDomainRow {
  double p;
  VolumeEstimate volume;
  double normalized;
};

inline std::vector<OddsDomainRow> table_thm1(const std::vector<double>& ps,
                                             const QuadConfig& cfg = domain_quad_defaults()) {
  std::vector<OddsDomainRow> rows;
  rows.reserve(ps.size());
  for (double p : ps) {
    const ProbBound bound(p);
    VolumeEstimate est = quad_domain_volume(EffectScale::OddsRatio, bound, cfg);
    rows.push_back({p, est, est.value / (p * p * p)});
  }
  return rows;
}

// One column of the odds-scale surface-volume table: V_o(p), the matching
// F_o(p), their normalized values, and the ratio V_o(p)/F_o(p).
struct OddsSurfaceRow {
  double p;
  VolumeEstimate surface;
  VolumeEstimate domain;
  double surface_normalized;
  double domain_normalized;
  double ratio;
};

inline std::vector<OddsSurfaceRow> table_thm2(
    const std::vector<double>& ps,
    const QuadConfig& surface_cfg = surface_quad_defaults(),
    const QuadConfig& domain_cfg = domain_quad_defaults()) {
  std::vector<OddsSurfaceRow> rows;
  rows.reserve(ps.size());
  for (double p : ps) {
    const ProbBound bound(p);
    VolumeEstimate vo = quad_surface_volume(EffectScale::OddsRatio, bound, surface_cfg);
    VolumeEstimate fo = quad_domain_volume(EffectScale::OddsRatio, bound, domain_cfg);
    const double p3 = p * p * p;
    const VolumeRatio r = ratio_v_over_f(EffectScale::OddsRatio, bound, vo, fo);
    rows.push_back({p, vo, fo, vo.value / p3, fo.value / p3, r.ratio});
  }
  return rows;
}

}  // namespace homvol
