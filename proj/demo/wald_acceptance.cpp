// Usage sample: Wald acceptance-region volumes, one-off and tabulated.

#include <cstdio>

#include "homvol/homvol.hpp"

int main() {
  using namespace homvol;

  McConfig mc;
  mc.samples = 500'000;
  mc.seed = 11;

  const WaldConfig wald(200, 0.05);
  for (EffectScale s : kAllScales) {
    const VolumeEstimate v = acceptance_volume(s, wald, mc);
    std::printf("acceptance volume %s (n=200, alpha=0.05): %.4f +/- %.4f\n", scale_token(s),
                v.value, *v.std_error);
  }

  std::printf("\nshared-draw table:\n  n      rd     rr     or\n");
  for (const WaldRow& row : table_wald(default_n_grid(), 0.05, mc)) {
    std::printf("  %-6lld %.3f  %.3f  %.3f\n", static_cast<long long>(row.n), row.volume[0],
                row.volume[1], row.volume[2]);
  }
  return 0;
}
