// Probe: how does the truncated-line profile respond to widening the domain?
// Solves once with the truncation check disabled, then re-solves on a series
// of wider domains seeded by the decay-extended solution, printing the norm
// at each width.
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "vss/bvp.hpp"
#include "vss/errors.hpp"
#include "vss/profiles.hpp"

using namespace vss;

int main(int argc, char** argv) {
  SimilarityParams params;
  params.p = argc > 1 ? std::atof(argv[1]) : 1.7;
  params.n = argc > 2 ? std::atof(argv[2]) : 0.0;
  int index = argc > 3 ? std::atoi(argv[3]) : 0;
  params.eps = argc > 4 ? std::atof(argv[4]) : 1e-2;
  double tol = argc > 5 ? std::atof(argv[5]) : 3e-3;

  CpSeed seed;
  seed.index = index;
  CpOptions opts;
  opts.check_truncation = false;
  opts.tol = tol;
  if (argc > 6) opts.L = std::atof(argv[6]);
  Profile prof;
  try {
    prof = solve_cp_profile(params, seed, opts);
  } catch (const Error& e) {
    std::printf("inner FAIL: %s\n", e.what());
    return 1;
  }
  const double L = prof.y0;
  double sup5i = 0.0;
  for (size_t i = 0; i < prof.y.size(); ++i)
    if (std::abs(prof.f[i]) > std::max(params.n != 0.0 ? 3.0 * params.eps : 0.0,
                                       0.05 * prof.norm_inf))
      sup5i = prof.y[i];
  std::printf("inner: index=%d norm=%.6f sup=%.3f sup5=%.3f L=%.3f\n",
              prof.index, prof.norm_inf, prof.support, sup5i, L);

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
  bopts.tol = tol;
  const BvpSolution& inner = prof.solution;
  double end_state[4];
  inner.eval(L, end_state);
  const double f2_end = end_state[2], g_end = end_state[3];
  for (double widen : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, -0.3, -0.5, -0.8,
                       -1.2, -1.8}) {
    const double Lw = L + widen;
    if (Lw <= prof.support + 0.1) continue;
    pr.b = Lw;
    BvpGuess g;
    g.nodes = uniform_mesh(0.0, Lw,
                           static_cast<int>(std::max(128.0, 10.0 * Lw)));
    g.eval = [&inner, L, f2_end, g_end](double y, double* s) {
      if (y <= L) {
        inner.eval(y, s);
      } else {
        const double decay = std::exp(-(y - L));
        s[0] = 0.0;
        s[1] = 0.0;
        s[2] = f2_end * decay;
        s[3] = g_end * decay;
      }
    };
    BvpSolution wsol = solve_bvp(pr, g, bopts);
    if (!wsol.converged()) {
      std::printf("  Lw=%7.3f: no convergence\n", Lw);
      continue;
    }
    const double n2 = wsol.max_abs(0);
    Profile wp = detail::package_profile(params, ProfileKind::Cp, wsol, 1.0, Lw);
    double sup5 = 0.0;
    for (size_t i = 0; i < wp.y.size(); ++i)
      if (std::abs(wp.f[i]) >
          std::max(params.n != 0.0 ? 3.0 * params.eps : 0.0, 0.05 * n2))
        sup5 = wp.y[i];
    std::printf("  Lw=%7.3f: norm=%.6f  drift=%+.3f%%  sup5=%.3f\n", Lw, n2,
                100.0 * (n2 - prof.norm_inf) / prof.norm_inf, sup5);
  }
  return 0;
}
