// Probe: seed an even profile as hump + sign-change lobes placed right after
// the hump (not against the cut), with a long empty tail out to L. Sweeps
// lobe position and depth at production solver settings.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "vss/bvp.hpp"
#include "vss/model.hpp"
#include "vss/profiles.hpp"

using namespace vss;

int main(int argc, char** argv) {
  SimilarityParams params;
  params.p = argc > 1 ? std::atof(argv[1]) : 1.7;
  params.n = argc > 2 ? std::atof(argv[2]) : 0.0;
  int index = argc > 3 ? std::atoi(argv[3]) : 2;
  double L = argc > 4 ? std::atof(argv[4]) : 14.0;
  double hump = argc > 5 ? std::atof(argv[5]) : 4.2;  // dome edge
  double spc = argc > 6 ? std::atof(argv[6]) : 3.0;
  double amp_scale = argc > 7 ? std::atof(argv[7]) : 1.0;
  int mode = argc > 8 ? std::atoi(argv[8]) : 0;  // 1 = cos/sin packet
  double tol = argc > 9 ? std::atof(argv[9]) : 3e-3;
  params.eps = 1e-2;
  const double A = std::pow(params.p - 1.0, -1.0 / (params.p - 1.0));
  const bool odd = index % 2 != 0;
  const int features = odd ? (index - 1) / 2 : index / 2;

  BvpProblem pr = vss_ode_system(params);
  pr.a = 0.0;
  pr.b = L;
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

  for (double depth : {0.2, 0.3, 0.45}) {
    for (double fw : {1.1, 1.6}) {
      const int per = argc > 10 ? std::atoi(argv[10]) : 10;
      const int intervals = std::max(128, static_cast<int>(per * L));
      BvpGuess g;
      g.nodes = uniform_mesh(0.0, L, intervals);
      const double nn = params.n, ee = params.eps;
      const double amp = amp_scale * A;
      auto shape = [&](double y) {
        if (mode == 1) {
          // oscillatory packet: hump = packet width, index sign changes
          const double W = hump;
          const double mu = (index + 0.5) * M_PI / W;
          const double env = std::exp(-std::pow(y / W, 6.0));
          return amp * env * (odd ? std::sin(mu * y) : std::cos(mu * y));
        }
        if (mode == 3) {
          // production-style train pressed against the cut, growing depths
          const double off = std::max(1.3, 0.68 * spc);
          const double y1 = L - off - spc * (features - 1);
          const double edge = y1 - std::max(2.4, 0.8 * spc);
          double v = amp * 0.5 * (1.0 + std::tanh((edge - y) / 1.8));
          if (odd) v *= std::tanh(y / 2.0);
          double d = depth;
          for (int j = 1; j <= features; ++j) {
            const double dz = (y - (y1 + spc * (j - 1))) / fw;
            v += amp * (j % 2 ? -1.0 : 1.0) * d * std::exp(-dz * dz);
            d *= 1.25;
          }
          return v;
        }
        if (mode == 2) {
          // plateau-edge train, outward-growing depths, last feature largest
          double v = amp * 0.5 * (1.0 + std::tanh((hump - y) / 1.6));
          if (odd) v *= std::tanh(y / 2.0);
          double d = depth * amp;
          for (int j = 0; j < features; ++j) {
            const double c = hump + 0.8 + spc * j;
            const double sgn = (j % 2 == 0) ? -1.0 : 1.0;
            v += sgn * d * std::exp(-std::pow((y - c) / fw, 2.0));
            d *= 1.2;
          }
          return v;
        }
        double v = amp * 0.5 * (1.0 + std::tanh((hump - y) / 1.2));
        if (odd) v *= std::tanh(y / 2.0);
        double d = depth * amp;
        for (int j = 0; j < features; ++j) {
          const double c = hump + 1.2 + spc * j;
          const double sgn = (j % 2 == 0) ? -1.0 : 1.0;
          v += sgn * d * std::exp(-std::pow((y - c) / fw, 2.0));
          d *= 0.6;
        }
        return v;
      };
      g.eval = [&](double y, double* s) {
        const double d = 1e-4;
        const double f0 = shape(y);
        const double fp1 = shape(y + d), fm1 = shape(y - d);
        const double fp2 = shape(y + 2 * d), fm2 = shape(y - 2 * d);
        s[0] = f0;
        s[1] = (fp1 - fm1) / (2 * d);
        s[2] = (fp1 - 2 * f0 + fm1) / (d * d);
        const double f3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * d * d * d);
        s[3] = std::pow(ee * ee + f0 * f0, nn / 2.0) * f3;
      };
      BvpSolution sol = solve_bvp(pr, g, bopts);
      if (!sol.converged()) {
        std::printf("depth=%.2f fw=%.1f: no convergence\n", depth, fw);
        continue;
      }
      Profile prof =
          detail::package_profile(params, ProfileKind::Cp, sol, 1.0, L);
      prof.index = count_sign_changes(prof, 0.2);
      // where the deepest negative lobe sits
      double mn = 0.0, at = 0.0;
      for (size_t i = 0; i < prof.f.size(); ++i)
        if (prof.f[i] < mn) { mn = prof.f[i]; at = prof.y[i]; }
      std::printf("depth=%.2f fw=%.1f: index=%d norm=%.5f min=%.4f@%.2f\n",
                  depth, fw, prof.index, prof.norm_inf, mn, at);
    }
  }
  return 0;
}
