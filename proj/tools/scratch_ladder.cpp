// Probe: build the seed for a high-index profile from the converged state
// two indices below it, appending one opposite-sign feature at the tail.
// Sweeps the appended feature's spacing and depth and the extra domain.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "vss/bvp.hpp"
#include "vss/errors.hpp"
#include "vss/model.hpp"
#include "vss/profiles.hpp"

using namespace vss;

int main(int argc, char** argv) {
  SimilarityParams params;
  params.p = argc > 1 ? std::atof(argv[1]) : 2.0;
  params.n = argc > 2 ? std::atof(argv[2]) : 0.95;
  int index = argc > 3 ? std::atoi(argv[3]) : 6;
  params.eps = argc > 4 ? std::atof(argv[4]) : 1e-2;
  double tol = argc > 5 ? std::atof(argv[5]) : 3e-3;

  CpSeed seed;
  seed.index = index - 2;
  CpOptions opts;
  opts.check_truncation = false;
  opts.tol = tol;
  Profile base;
  try {
    base = solve_cp_profile(params, seed, opts);
  } catch (const Error& e) {
    std::printf("base FAIL: %s\n", e.what());
    return 1;
  }
  // last interior extremum of the base state: the terminal feature's peak
  double m = 0.0, vm = 0.0;
  for (size_t i = 1; i + 1 < base.y.size(); ++i) {
    const double v = base.f[i];
    if (std::abs(v) < 0.05 * base.norm_inf) continue;
    if ((v > base.f[i - 1] && v >= base.f[i + 1]) ||
        (v < base.f[i - 1] && v <= base.f[i + 1])) {
      m = base.y[i];
      vm = v;
    }
  }
  std::printf("base: index=%d norm=%.5f sup=%.3f L=%.3f last-extremum %.3f @ %.2f\n",
              base.index, base.norm_inf, base.support, base.y0, vm, m);

  const bool odd = index % 2 != 0;
  BvpProblem pr = vss_ode_system(params);
  pr.a = 0.0;
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
  const BvpSolution& inner = base.solution;
  const double nn = params.n, ee = params.eps;

  for (double spc : {1.5, 1.7, 1.9}) {
    for (double depth : {0.25, 0.35}) {
      for (double pad : {2.6, 3.2}) {
        const double L = m + spc + pad;
        const double c = m + spc;       // appended feature center
        const double fw = 0.55 * spc + 0.35;
        const double sgn = vm > 0 ? -1.0 : 1.0;
        const double d = depth * base.norm_inf;
        auto shape = [&, m, c, fw, sgn, d](double y) {
          double s[4];
          double v;
          if (y <= m) {
            inner.eval(y, s);
            v = s[0];
          } else {
            // carry the terminal peak down symmetrically, then the new lobe
            const double mirror = 2.0 * m - y;
            if (mirror >= 0.0) {
              inner.eval(mirror, s);
              v = s[0];
            } else {
              v = 0.0;
            }
            const double w = (y - m) / (0.5 * spc);
            v *= std::exp(-w * w);
          }
          v += sgn * d * std::exp(-std::pow((y - c) / fw, 2.0));
          return v;
        };
        BvpGuess g;
        g.nodes = uniform_mesh(0.0, L, static_cast<int>(std::max(128.0, 10.0 * L)));
        g.eval = [&](double y, double* s) {
          const double dd = 1e-4;
          const double f0 = shape(y);
          const double fp1 = shape(y + dd), fm1 = shape(y - dd);
          const double fp2 = shape(y + 2 * dd), fm2 = shape(y - 2 * dd);
          s[0] = f0;
          s[1] = (fp1 - fm1) / (2 * dd);
          s[2] = (fp1 - 2 * f0 + fm1) / (dd * dd);
          const double f3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * dd * dd * dd);
          s[3] = std::pow(ee * ee + f0 * f0, nn / 2.0) * f3;
        };
        pr.b = L;
        BvpSolution sol = solve_bvp(pr, g, bopts);
        if (!sol.converged()) {
          std::printf("spc=%.1f depth=%.2f pad=%.1f: no convergence\n", spc,
                      depth, pad);
          continue;
        }
        Profile prof =
            detail::package_profile(params, ProfileKind::Cp, sol, 1.0, L);
        prof.index = count_sign_changes(prof, 0.2);
        double sup = 0.0;
        for (size_t i = 0; i < prof.y.size(); ++i)
          if (std::abs(prof.f[i]) >
              std::max(params.n != 0.0 ? 3.0 * params.eps : 0.0,
                       1e-3 * prof.norm_inf))
            sup = prof.y[i];
        std::printf("spc=%.1f depth=%.2f pad=%.1f: index=%d norm=%.5f sup=%.3f L=%.2f\n",
                    spc, depth, pad, prof.index, prof.norm_inf, sup, L);
      }
    }
  }
  return 0;
}
