// Usage sample: domain and surface volumes on the three effect scales,
// mixing closed forms, cubature, and Monte Carlo.

#include <cstdio>

#include "homvol/homvol.hpp"

int main() {
  using namespace homvol;

  const ProbBound half(0.5);

  std::printf("bound p = 0.5\n");
  for (EffectScale s : kAllScales) {
    const VolumeEstimate domain = quad_domain_volume(s, half);
    const VolumeEstimate surface = quad_surface_volume(s, half);
    std::printf("  %s: domain %.6f  surface %.6f  ratio %.4f\n", scale_token(s), domain.value,
                surface.value, surface.value / domain.value);
    if (auto closed = closed_domain_volume(s, half)) {
      std::printf("      closed domain %.6f\n", *closed);
    }
  }

  McConfig mc;
  mc.samples = 2'000'000;
  mc.seed = 7;
  const VolumeEstimate vo = mc_volume(VolumeKind::Surface, EffectScale::OddsRatio, half, mc);
  std::printf("mc surface or: %.5f +/- %.5f (%llu draws, seed %llu)\n", vo.value, *vo.std_error,
              static_cast<unsigned long long>(vo.samples_or_nodes),
              static_cast<unsigned long long>(*vo.seed));
  return 0;
}
