#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "vss/bvp.hpp"

using namespace vss;

namespace {
double kDr = 1e-3;

double mob(double g, double n) {
  return std::pow(kDr * kDr + g * g, 0.5 * n);
}
double mob_dg(double g, double n) {
  return n * g * std::pow(kDr * kDr + g * g, 0.5 * n - 1.0);
}

BvpSolution raw(double n, int l, double a_seed, double kappa_seed,
                double width, double tol, int intervals) {
  const bool odd = l % 2 != 0;
  BvpProblem pr;
  pr.dim = 6;
  pr.a = 0.0;
  pr.b = 1.0;
  pr.rhs = [n](double y, const double* s, double* ds) {
    const double kap = s[4];
    const double al = s[5];
    ds[0] = s[1];
    ds[1] = s[2];
    ds[2] = s[3] / (kap * mob(s[0], n));
    ds[3] = 0.25 * (1.0 - n * al) * y * s[1] + al * s[0];
    ds[4] = 0.0;
    ds[5] = 0.0;
  };
  pr.rhs_jac = [n](double y, const double* s, double* J) {
    std::memset(J, 0, sizeof(double) * 36);
    const double kap = s[4];
    const double al = s[5];
    const double q = mob(s[0], n);
    J[0 * 6 + 1] = 1.0;
    J[1 * 6 + 2] = 1.0;
    J[2 * 6 + 0] = -s[3] * mob_dg(s[0], n) / (kap * q * q);
    J[2 * 6 + 3] = 1.0 / (kap * q);
    J[2 * 6 + 4] = -s[3] / (kap * kap * q);
    J[3 * 6 + 0] = al;
    J[3 * 6 + 1] = 0.25 * (1.0 - n * al) * y;
    J[3 * 6 + 5] = -0.25 * n * y * s[1] + s[0];
  };
  if (odd) {
    pr.bc = [](const double* xa, const double* xb, double* r) {
      r[0] = xa[0];
      r[1] = xa[2];
      r[2] = xa[1] - 1.0;
      r[3] = xb[0];
      r[4] = xb[1];
      r[5] = xb[3];
    };
  } else {
    pr.bc = [](const double* xa, const double* xb, double* r) {
      r[0] = xa[1];
      r[1] = xa[3];
      r[2] = xa[0] - 1.0;
      r[3] = xb[0];
      r[4] = xb[1];
      r[5] = xb[3];
    };
  }

  BvpGuess guess;
  guess.nodes = uniform_mesh(0.0, 1.0, intervals);
  guess.eval = [odd, l, width, a_seed, kappa_seed, n](double y, double* s) {
    auto shape = [odd, l, width](double t) {
      const double env = (1.0 - t * t) * (1.0 - t * t);
      if (odd) {
        const double k = 0.5 * (l + 1) * M_PI * width;
        return std::sin(k * t) * env / k;
      }
      return std::cos(0.5 * l * M_PI * width * t) * env;
    };
    const double d = 1e-4;
    const double fm2 = shape(y - 2 * d), fm1 = shape(y - d), f0 = shape(y),
                 fp1 = shape(y + d), fp2 = shape(y + 2 * d);
    s[0] = f0;
    s[1] = (fp1 - fm1) / (2 * d);
    s[2] = (fp1 - 2 * f0 + fm1) / (d * d);
    const double f3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * d * d * d);
    s[3] = kappa_seed * mob(f0, n) * f3;
    s[4] = kappa_seed;
    s[5] = a_seed;
  };

  BvpOptions bopts;
  bopts.tol = tol;
  return solve_bvp(pr, guess, bopts);
}

int essential_zeros(const BvpSolution& sol, double frac) {
  const int nn = static_cast<int>(sol.nodes().size());
  const double thr = frac * sol.max_abs(0);
  int count = 0;
  double last = 0.0;
  for (int i = 0; i < nn; ++i) {
    const double v = sol.state(i, 0);
    if (std::abs(v) < thr) continue;
    if (last != 0.0 && v * last < 0.0) ++count;
    last = v;
  }
  return count;
}
}  // namespace

int main(int argc, char** argv) {
  double n = argc > 1 ? std::atof(argv[1]) : 1.0;
  int l = argc > 2 ? std::atoi(argv[2]) : 2;
  double a_seed = argc > 3 ? std::atof(argv[3])
                           : (1.0 + l) / (4.0 + n * (1.0 + l));
  for (double dr : {1e-2, 3e-3, 1e-3, 3e-2}) {
    kDr = dr;
    for (int iv : {200, 400}) {
      for (double width : {1.0, 1.2, 0.85}) {
        for (double amp : {0.01, 0.003, 0.03}) {
          const double kappa = std::pow(amp, n);
          BvpSolution sol = raw(n, l, a_seed, kappa, width, 1e-6, iv);
          const double kap = sol.converged() ? sol.state(0, 4) : 0.0;
          const double al = sol.converged() ? sol.state(0, 5) : 0.0;
          const int ez = sol.converged() ? essential_zeros(sol, 0.02) : -1;
          std::printf(
              "dr=%7.1e iv=%d w=%4.2f amp=%7.1e conv=%d it=%2d maxG=%8.2e "
              "kap=%9.3e al=%9.6f zeros=%d\n",
              dr, iv, width, amp, sol.converged() ? 1 : 0,
              sol.newton_iterations(), sol.max_abs(0), kap, al, ez);
        }
      }
    }
  }
  return 0;
}
