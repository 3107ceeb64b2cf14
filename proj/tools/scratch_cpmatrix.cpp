#include <chrono>
#include <cstdio>

#include "vss/errors.hpp"
#include "vss/profiles.hpp"

using namespace vss;

namespace {
void run(double p, double n, int index) {
  SimilarityParams params;
  params.p = p;
  params.n = n;
  params.N = 1;
  params.eps = 1e-2;
  CpSeed seed;
  seed.index = index;
  CpOptions opts;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Profile prof = solve_cp_profile(params, seed, opts);
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf(
        "p=%.2f n=%.2f seed=%d -> index=%d norm=%.4f f(0)=%+.4f sup=%6.2f "
        "L=%6.2f  [%.1fs]\n",
        p, n, index, prof.index, prof.norm_inf, prof.value_at_origin(),
        prof.support, prof.y0, dt);
  } catch (const Error& e) {
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("p=%.2f n=%.2f seed=%d -> FAIL: %s  [%.1fs]\n", p, n, index,
                e.what(), dt);
  }
}
}  // namespace

int main() {
  std::puts("--- five profiles, p=1.7 n=0");
  for (int l = 0; l <= 4; ++l) run(1.7, 0.0, l);
  std::puts("--- even ladder, p=2 n=0.95");
  for (int l : {0, 2, 4, 6}) run(2.0, 0.95, l);
  std::puts("--- moderate cases");
  run(2.0, 0.5, 0);
  run(2.0, 0.5, 2);
  run(3.0, 0.0, 0);
  run(3.0, 0.0, 2);
  run(3.0, 1.0, 0);
  run(3.6, 1.0, 0);
  run(3.6, 1.0, 2);
  std::puts("--- near-critical");
  run(5.05, 0.13, 0);
  run(5.05, 0.11, 0);
  return 0;
}
