#include <chrono>
#include <cstdio>
#include "vss/profiles.hpp"
using namespace vss;
int main() {
  for (auto [p, n] : {std::pair{2.0, 0.95}, {2.0, 0.5}, {1.7, 0.0}, {3.6, 1.0}, {2.0, 0.0}, {5.05, 0.11}, {5.05, 0.13}}) {
    SimilarityParams params; params.p = p; params.n = n; params.N = 1; params.eps = 1e-2;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Profile prof = solve_fbp_profile(params);
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::printf("p=%.2f n=%.2f  y0=%.4f norm=%.4f  [%.2fs]\n", p, n, prof.y0, prof.norm_inf, dt);
    } catch (const std::exception& e) {
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::printf("p=%.2f n=%.2f  FAILED: %s  [%.2fs]\n", p, n, e.what(), dt);
    }
  }
  return 0;
}
