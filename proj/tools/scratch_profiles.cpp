// Exploration driver for the profile solvers; not part of the test suite.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "vss/errors.hpp"
#include "vss/profiles.hpp"

using namespace vss;

static double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

static void run_fbp(double p, double n, double expect) {
  SimilarityParams params;
  params.p = p;
  params.n = n;
  params.eps = 1e-3;
  const double t0 = now_s();
  try {
    Profile prof = solve_fbp_profile(params);
    const double t1 = now_s();
    auto res = profile_equation_residual(prof);
    std::printf(
        "FBP p=%.2f n=%.2f: y0=%.4f (expect %.3f, err %.2f%%) norm=%.4f "
        "f(0)=%.4f nodes=%zu res=%.2e extra=%zu  [%.2fs]\n",
        p, n, prof.y0, expect, 100.0 * std::abs(prof.y0 - expect) / expect,
        prof.norm_inf, prof.value_at_origin(), prof.y.size(), res.max_scaled,
        prof.other_roots.size(), t1 - t0);
  } catch (const Error& e) {
    std::printf("FBP p=%.2f n=%.2f: FAILED: %s\n", p, n, e.what());
  }
}

static void run_cp(double p, double n, int index) {
  SimilarityParams params;
  params.p = p;
  params.n = n;
  params.eps = 1e-2;
  params.problem = ProblemKind::CP;
  CpSeed seed;
  seed.index = index;
  const double t0 = now_s();
  try {
    Profile prof = solve_cp_profile(params, seed);
    const double t1 = now_s();
    std::printf(
        "CP p=%.2f n=%.2f l=%d: index=%d L=%.1f support=%.2f norm=%.4f "
        "f(0)=%.5f nodes=%zu  [%.2fs]\n",
        p, n, index, prof.index, prof.y0, prof.support, prof.norm_inf,
        prof.value_at_origin(), prof.y.size(), t1 - t0);
  } catch (const Error& e) {
    std::printf("CP p=%.2f n=%.2f l=%d: FAILED: %s\n", p, n, index, e.what());
  }
}

int main(int argc, char** argv) {
  const bool all = argc < 2;
  if (all || !std::strcmp(argv[1], "fbp")) {
    run_fbp(2.0, 0.4, 6.606);
    run_fbp(2.0, 0.0, 5.109);
    run_fbp(2.0, 0.8, 14.822);
    run_fbp(3.0, 1.0, 4.455);
  }
  if (all || !std::strcmp(argv[1], "pure")) {
    try {
      Profile ex = explicit_pure_tfe_profile(1);
      Profile num = pure_tfe_profile(1.0, 1, ProblemKind::FBP);
      double worst = 0.0;
      for (size_t i = 0; i < num.y.size(); ++i) {
        const double w = 1.0 - num.y[i] * num.y[i];
        const double exact = w * w / 120.0;
        worst = std::max(worst, std::abs(num.f[i] - exact));
      }
      std::printf("pure n=1: max|err|=%.3e rel=%.3e norm=%.6f (exact %.6f)\n",
                  worst, worst * 120.0, num.norm_inf, ex.norm_inf);
    } catch (const Error& e) {
      std::printf("pure n=1 FAILED: %s\n", e.what());
    }
    for (double n : {0.5, 1.5, 2.0}) {
      try {
        const double t0 = now_s();
        Profile prof = pure_tfe_profile(n, 1, ProblemKind::CP);
        const double t1 = now_s();
        std::printf("pure CP n=%.2f: index=%d norm=%.5e f(0)=%.5e  [%.2fs]\n",
                    n, prof.index, prof.norm_inf, prof.value_at_origin(),
                    t1 - t0);
      } catch (const Error& e) {
        std::printf("pure CP n=%.2f FAILED: %s\n", n, e.what());
      }
    }
  }
  if (all || !std::strcmp(argv[1], "second")) {
    for (int l : {0, 1, 2, 3}) {
      try {
        const double t0 = now_s();
        auto r = tfe_second_kind_alpha(1.0, 1, l);
        const double t1 = now_s();
        const double seed = (1.0 + l) / (5.0 + l);
        std::printf(
            "second n=1 l=%d: alpha=%.6f (seed %.6f) p_l=%.4f index=%d "
            "[%.2fs]\n",
            l, r.alpha, seed, r.p_l, r.profile.index, t1 - t0);
      } catch (const Error& e) {
        std::printf("second n=1 l=%d FAILED: %s\n", l, e.what());
      }
    }
  }
  if (all || !std::strcmp(argv[1], "cp")) {
    run_cp(2.0, 0.95, 0);
    run_cp(2.0, 0.95, 2);
    run_cp(2.0, 0.5, 0);
    run_cp(3.0, 0.0, 0);
    run_cp(2.0, 0.0, 2);
  }
  return 0;
}
