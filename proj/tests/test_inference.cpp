#include "homvol/inference.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "homvol/rng.hpp"

using namespace homvol;

namespace {

double cdf_normal(double x) { return 0.5 * std::erfc(-x / 1.4142135623730951); }

// The oracle mirrors the upper half to the lower for the same reason the
// implementation does: near one the CDF carries only absolute precision, so
// bisecting there would locate the root no better than eps/density.
double quantile_by_bisection(double q) {
  if (q > 0.5) return -quantile_by_bisection(1.0 - q);
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf_normal(mid) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(NormalQuantile, KnownValues) {
  EXPECT_DOUBLE_EQ(normal_quantile(0.5), 0.0);
  EXPECT_NEAR(normal_quantile(0.975), 1.959964, 5e-7);
  EXPECT_NEAR(normal_quantile(0.025), -1.959964, 5e-7);
  EXPECT_NEAR(normal_quantile(0.8413447460685429), 1.0, 1e-9);
}

TEST(NormalQuantile, MatchesBisectionOracle) {
  for (double q : {1e-12, 1e-10, 1e-6, 1e-3, 0.02, 0.024, 0.025, 0.3, 0.5, 0.7, 0.976, 0.999,
                   1.0 - 1e-6, 1.0 - 1e-10, 1.0 - 1e-12}) {
    EXPECT_NEAR(normal_quantile(q), quantile_by_bisection(q), 1e-9) << "q=" << q;
  }
  for (int i = 1; i < 500; ++i) {
    const double q = static_cast<double>(i) / 500.0;
    EXPECT_NEAR(normal_quantile(q), quantile_by_bisection(q), 1e-9) << "q=" << q;
  }
}

TEST(NormalQuantile, AntisymmetricAboutTheMedian) {
  // Dyadic arguments: 1 - q is then exact in floating point, and the
  // symmetry reduction makes the identity hold bitwise.
  for (int k = 2; k <= 40; ++k) {
    const double q = std::ldexp(1.0, -k);
    EXPECT_EQ(normal_quantile(q), -normal_quantile(1.0 - q)) << "k=" << k;
  }
  // Generic central arguments round the complement by at most half an ulp,
  // which moves the quantile by eps over the density - far inside 1e-13.
  for (double q : {0.2, 0.3, 0.41, 0.49}) {
    EXPECT_NEAR(normal_quantile(q), -normal_quantile(1.0 - q), 1e-13);
  }
}

TEST(NormalQuantile, RejectsBoundaryArguments) {
  EXPECT_THROW(normal_quantile(0.0), std::domain_error);
  EXPECT_THROW(normal_quantile(1.0), std::domain_error);
  EXPECT_THROW(normal_quantile(-0.2), std::domain_error);
}

TEST(CriticalValue, KnownValues) {
  EXPECT_NEAR(critical_value(0.05), 3.841459, 5e-7);
  EXPECT_NEAR(critical_value(0.3173), 1.0, 1e-4);
  EXPECT_LT(critical_value(0.999999), 1e-10);
  EXPECT_THROW(critical_value(0.0), std::domain_error);
  EXPECT_THROW(critical_value(1.0), std::domain_error);
}

TEST(CriticalValue, DecreasesWithTheLevel) {
  double prev = critical_value(0.001);
  for (double alpha : {0.01, 0.05, 0.1, 0.5, 0.9}) {
    const double cur = critical_value(alpha);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
}

TEST(WaldConfig, Validation) {
  EXPECT_THROW(WaldConfig(0, 10, 10, 10, 0.05), std::invalid_argument);
  EXPECT_THROW(WaldConfig(10, 10, 10, -5, 0.05), std::invalid_argument);
  EXPECT_THROW(WaldConfig(10, 0.0), std::domain_error);
  EXPECT_THROW(WaldConfig(10, 1.0), std::domain_error);
  const WaldConfig even(250, 0.05);
  EXPECT_EQ(even.n11, 250);
  EXPECT_EQ(even.n00, 250);
}

TEST(WaldStatistic, KnownAdditiveValue) {
  // contrast 0.1, variance (0.24 + 3 * 0.25) / 100 = 0.0099
  const WaldConfig cfg(100, 0.05);
  const EstimateQuad q(0.6, 0.5, 0.5, 0.5);
  EXPECT_NEAR(wald_statistic(q, EffectScale::RiskDifference, cfg), 0.01 / 0.0099, 1e-9);
}

TEST(WaldStatistic, VanishesOnExactNullTables) {
  const WaldConfig cfg(100, 0.05);
  EXPECT_LT(wald_statistic(EstimateQuad(0.2, 0.1, 0.4, 0.2), EffectScale::RiskRatio, cfg), 1e-25);
  EXPECT_LT(wald_statistic(EstimateQuad(0.3, 0.3, 0.3, 0.3), EffectScale::RiskDifference, cfg),
            1e-30);
  EXPECT_LT(wald_statistic(EstimateQuad(0.5, 0.5, 0.5, 0.5), EffectScale::OddsRatio, cfg), 1e-25);
}

TEST(WaldStatistic, NearZeroAcrossTheWholeNullSurface) {
  // Tables built by solving the homogeneity constraint give statistics that
  // are zero up to rounding, uniformly over the surface.
  const WaldConfig cfg(100, 0.05);
  std::mt19937_64 eng(4242);
  int used = 0;
  for (int i = 0; i < 20000; ++i) {
    const CellTriple t(1e-3 + 0.998 * uniform01(eng), 1e-3 + 0.998 * uniform01(eng),
                       1e-3 + 0.998 * uniform01(eng));
    for (EffectScale s : kAllScales) {
      const double w = solve_fourth(t, s);
      if (!(w > 1e-3) || !(w < 1.0 - 1e-3)) continue;
      ++used;
      const EstimateQuad q(t.x, t.y, t.z, w);
      ASSERT_LT(wald_statistic(q, s, cfg), 1e-18)
          << scale_token(s) << " at (" << t.x << ", " << t.y << ", " << t.z << ")";
    }
  }
  EXPECT_GE(used, 20000);
}

TEST(WaldStatistic, SymmetricUnderJointCellSwap) {
  // Swapping (p11, n11) with (p00, n00) and (p10, n10) with (p01, n01) fixes
  // the contrast up to sign and permutes the variance terms.
  std::mt19937_64 eng(515151);
  for (int i = 0; i < 5000; ++i) {
    const EstimateQuad q(1e-3 + 0.998 * uniform01(eng), 1e-3 + 0.998 * uniform01(eng),
                         1e-3 + 0.998 * uniform01(eng), 1e-3 + 0.998 * uniform01(eng));
    const EstimateQuad swapped(q.p00, q.p01, q.p10, q.p11);
    const WaldConfig cfg(130, 70, 220, 90, 0.05);
    const WaldConfig swapped_cfg(90, 220, 70, 130, 0.05);
    for (EffectScale s : kAllScales) {
      const double a = wald_statistic(q, s, cfg);
      const double b = wald_statistic(swapped, s, swapped_cfg);
      EXPECT_NEAR(a, b, 1e-12 * (1.0 + a));
    }
  }
}

TEST(WaldStatistic, ScalesLinearlyInTheGroupSizes) {
  const EstimateQuad q(0.31, 0.12, 0.47, 0.66);
  for (EffectScale s : kAllScales) {
    const double base = wald_statistic(q, s, WaldConfig(100, 0.05));
    const double scaled = wald_statistic(q, s, WaldConfig(700, 0.05));
    EXPECT_NEAR(scaled, 7.0 * base, 1e-11 * scaled);
  }
}

TEST(AcceptanceVolume, DeterministicAndAnnotated) {
  McConfig mc;
  mc.samples = 50'000;
  mc.seed = 321;
  const WaldConfig wald(100, 0.05);
  const VolumeEstimate a = acceptance_volume(EffectScale::RiskDifference, wald, mc);
  const VolumeEstimate b = acceptance_volume(EffectScale::RiskDifference, wald, mc);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(*a.std_error, *b.std_error);
  EXPECT_EQ(*a.seed, 321u);
  EXPECT_EQ(a.method, Method::MonteCarlo);
  EXPECT_GT(a.value, 0.0);
  EXPECT_LT(a.value, 1.0);
}

TEST(AcceptanceVolume, MatchesFrozenReferenceValue) {
  McConfig mc;
  mc.samples = 1'000'000;
  mc.seed = 31415;
  const VolumeEstimate est =
      acceptance_volume(EffectScale::RiskDifference, WaldConfig(100, 0.05), mc);
  EXPECT_NEAR(est.value, 0.214, 0.005);
}

TEST(AcceptanceVolume, ShrinksAsTheLevelLoosens) {
  // Larger alpha means a smaller critical value, hence a smaller region;
  // with common draws the hit sets are nested.
  McConfig mc;
  mc.samples = 100'000;
  mc.seed = 11;
  const VolumeEstimate tight = acceptance_volume(EffectScale::RiskRatio, WaldConfig(500, 0.01), mc);
  const VolumeEstimate loose = acceptance_volume(EffectScale::RiskRatio, WaldConfig(500, 0.10), mc);
  EXPECT_GT(tight.value, loose.value);

  const VolumeEstimate degenerate =
      acceptance_volume(EffectScale::RiskRatio, WaldConfig(500, 0.999999), mc);
  EXPECT_LT(degenerate.value, 1e-4);
}

TEST(AcceptanceVolume, NonIncreasingInTheGroupSizes) {
  // The draws do not depend on the group sizes, so with a fixed seed the
  // acceptance volume can only shrink as every group grows.
  McConfig mc;
  mc.samples = 100'000;
  mc.seed = 2222;
  for (EffectScale s : kAllScales) {
    double prev = 2.0;
    for (std::int64_t n : {50, 100, 400, 1600, 6400}) {
      const double cur = acceptance_volume(s, WaldConfig(n, 0.05), mc).value;
      EXPECT_LE(cur, prev) << scale_token(s) << " n=" << n;
      prev = cur;
    }
  }
}

TEST(WaldTable, StructureAndDeterminism) {
  McConfig mc;
  mc.samples = 200'000;
  mc.seed = 42;
  const std::vector<std::int64_t> ns = default_n_grid();
  ASSERT_EQ(ns.size(), 5u);
  EXPECT_EQ(ns.front(), 100);
  EXPECT_EQ(ns.back(), 10000);

  const std::vector<WaldRow> rows = table_wald(ns, 0.05, mc);
  const std::vector<WaldRow> again = table_wald(ns, 0.05, mc);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].n, ns[k]);
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(rows[k].volume[j], again[k].volume[j]);
      const double v = rows[k].volume[j];
      EXPECT_DOUBLE_EQ(rows[k].std_error[j],
                       std::sqrt(v * (1.0 - v) / static_cast<double>(mc.samples)));
    }
    EXPECT_DOUBLE_EQ(rows[k].ratio_rr_over_rd, rows[k].volume[1] / rows[k].volume[0]);
    EXPECT_DOUBLE_EQ(rows[k].ratio_or_over_rd, rows[k].volume[2] / rows[k].volume[0]);
  }
}

TEST(WaldTable, MonotoneAndOrderedAcrossScales) {
  McConfig mc;
  mc.samples = 300'000;
  mc.seed = 777;
  const std::vector<WaldRow> rows = table_wald(default_n_grid(), 0.05, mc);
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_GE(rows[k].volume[j], rows[k + 1].volume[j]) << "scale " << j << " row " << k;
    }
  }
  for (const WaldRow& r : rows) {
    EXPECT_LT(r.volume[0], r.volume[1]) << "n=" << r.n;
    EXPECT_LT(r.volume[1], r.volume[2]) << "n=" << r.n;
    EXPECT_GT(r.ratio_rr_over_rd, 1.0);
    EXPECT_GT(r.ratio_or_over_rd, r.ratio_rr_over_rd);
  }
}

TEST(WaldTable, ConsistentWithTheSingleRegionEstimator) {
  // Same seed, same draws: the one-pass table and the direct estimator see
  // the same points, so the estimates can differ only through rounding of
  // the statistic right at the critical boundary.
  McConfig mc;
  mc.samples = 100'000;
  mc.seed = 10101;
  const std::vector<WaldRow> rows = table_wald({100}, 0.05, mc);
  for (int j = 0; j < 3; ++j) {
    const VolumeEstimate direct = acceptance_volume(kAllScales[j], WaldConfig(100, 0.05), mc);
    EXPECT_NEAR(rows[0].volume[j], direct.value, 3.0 / static_cast<double>(mc.samples));
  }
}

TEST(WaldTable, RejectsBadGrids) {
  McConfig mc;
  mc.samples = 1000;
  EXPECT_THROW(table_wald({}, 0.05, mc), std::invalid_argument);
  EXPECT_THROW(table_wald({100, 0}, 0.05, mc), std::invalid_argument);
  EXPECT_THROW(table_wald({100}, 1.5, mc), std::domain_error);
}
