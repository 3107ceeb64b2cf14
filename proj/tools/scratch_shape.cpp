// Probe: print the skeleton of a converged profile so seed geometry can be
// matched to what Newton actually settles on: zero crossings and the
// locations and values of interior extrema.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "vss/errors.hpp"
#include "vss/profiles.hpp"

using namespace vss;

int main(int argc, char** argv) {
  SimilarityParams params;
  params.p = argc > 1 ? std::atof(argv[1]) : 2.0;
  params.n = argc > 2 ? std::atof(argv[2]) : 0.95;
  int index = argc > 3 ? std::atoi(argv[3]) : 0;
  params.eps = argc > 4 ? std::atof(argv[4]) : 1e-2;

  CpSeed seed;
  seed.index = index;
  CpOptions opts;
  opts.check_truncation = false;
  if (argc > 5) opts.L = std::atof(argv[5]);
  Profile prof;
  try {
    prof = solve_cp_profile(params, seed, opts);
  } catch (const Error& e) {
    std::printf("FAIL: %s\n", e.what());
    return 1;
  }
  std::printf("index=%d norm=%.5f sup=%.3f L=%.3f f(0)=%.4f\n", prof.index,
              prof.norm_inf, prof.support, prof.y0, prof.f.front());
  const auto& y = prof.y;
  const auto& f = prof.f;
  std::printf("crossings:");
  for (size_t i = 1; i < y.size(); ++i)
    if (f[i - 1] != 0.0 && f[i] != 0.0 && (f[i - 1] > 0) != (f[i] > 0))
      std::printf(" %.2f", y[i]);
  std::printf("\nextrema:");
  for (size_t i = 1; i + 1 < y.size(); ++i) {
    const bool mx = f[i] > f[i - 1] && f[i] >= f[i + 1];
    const bool mn = f[i] < f[i - 1] && f[i] <= f[i + 1];
    if ((mx || mn) && std::abs(f[i]) > 0.02 * prof.norm_inf)
      std::printf(" (%.2f, %+.3f)", y[i], f[i]);
  }
  std::printf("\n");
  return 0;
}
