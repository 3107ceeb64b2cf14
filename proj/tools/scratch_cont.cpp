// Probe: march the truncation point outward in small steps, re-solving warm
// from the previous solution, and watch whether the sup norm settles. Tells
// whether a family of truncated solutions has an L -> infinity limit.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "vss/bvp.hpp"
#include "vss/errors.hpp"
#include "vss/profiles.hpp"

using namespace vss;

int main(int argc, char** argv) {
  SimilarityParams params;
  params.p = argc > 1 ? std::atof(argv[1]) : 1.7;
  params.n = argc > 2 ? std::atof(argv[2]) : 0.0;
  int index = argc > 3 ? std::atoi(argv[3]) : 0;
  double L0 = argc > 4 ? std::atof(argv[4]) : 9.0;
  double Lmax = argc > 5 ? std::atof(argv[5]) : 18.0;
  double step = argc > 6 ? std::atof(argv[6]) : 0.25;
  params.eps = 1e-2;

  CpSeed seed;
  seed.index = index;
  CpOptions opts;
  opts.check_truncation = false;
  opts.L = L0;
  Profile prof;
  try {
    prof = solve_cp_profile(params, seed, opts);
  } catch (const Error& e) {
    std::printf("inner FAIL: %s\n", e.what());
    return 1;
  }
  std::printf("start: index=%d norm=%.6f sup=%.3f L=%.3f\n", prof.index,
              prof.norm_inf, prof.support, prof.y0);

  BvpProblem pr = vss_ode_system(params);
  pr.a = 0.0;
  const bool odd = index % 2 != 0;
  if (odd) {
    pr.bc = [](const double* xa, const double* xb, double* r) {
      r[0] = xa[0];
      r[1] = xa[2];
      r[2] = xb[0];
      r[3] = xb[1];
    };
  } else {
    pr.bc = [](const double* xa, const double* xb, double* r) {
      r[0] = xa[1];
      r[1] = xa[3];
      r[2] = xb[0];
      r[3] = xb[1];
    };
  }
  BvpOptions bopts;
  bopts.tol = 3e-3;

  BvpSolution cur = prof.solution;
  double Lc = prof.y0;
  for (double Lw = Lc + step; Lw <= Lmax + 1e-9; Lw += step) {
    pr.b = Lw;
    BvpGuess g;
    g.nodes = uniform_mesh(0.0, Lw,
                           static_cast<int>(std::max(128.0, 10.0 * Lw)));
    const BvpSolution& inner = cur;
    const double Li = Lc;
    double end_state[4];
    inner.eval(Li, end_state);
    const double f2e = end_state[2], ge = end_state[3];
    g.eval = [&inner, Li, f2e, ge](double y, double* s) {
      if (y <= Li) {
        inner.eval(y, s);
      } else {
        const double d = std::exp(-(y - Li));
        s[0] = 0.0;
        s[1] = 0.0;
        s[2] = f2e * d;
        s[3] = ge * d;
      }
    };
    BvpSolution wsol = solve_bvp(pr, g, bopts);
    if (!wsol.converged()) {
      std::printf("  L=%7.3f: no convergence (kept seed at %.3f)\n", Lw, Lc);
      continue;
    }
    Profile wp = detail::package_profile(params, ProfileKind::Cp, wsol, 1.0,
                                         Lw);
    wp.index = count_sign_changes(wp, 0.2);
    std::printf("  L=%7.3f: norm=%.6f index=%d\n", Lw, wp.norm_inf,
                wp.index);
    cur = wsol;
    Lc = Lw;
  }
  return 0;
}
