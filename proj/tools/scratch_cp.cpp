#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "vss/bvp.hpp"
#include "vss/model.hpp"
#include "vss/profiles.hpp"

using namespace vss;

namespace {
double mob(double f, double n, double e) {
  return std::pow(e * e + f * f, 0.5 * n);
}

BvpGuess make_guess(const SimilarityParams& params, int index, double amp,
                    double width, double L, int intervals, int smode,
                    double sw) {
  const bool odd = index % 2 != 0;
  const double n = params.n, eps = params.eps;
  const double domain = L;
  auto shape = [odd, index, amp, width, smode, sw, domain](double y) {
    const double r = y / width;
    if (smode == 1) {
      const int c = odd ? (index - 1) / 2 : index / 2;
      double v = amp * std::tanh((1.0 - r) / sw);
      if (odd) v *= std::tanh(r / sw);
      for (int k = 1; k <= c; ++k)
        v *= std::tanh((0.9 * k / (c + 1.0) - r) / sw);
      return r >= 1.0 ? 0.0 : v;
    }
    if (smode == 2) {
      const int c = odd ? (index - 1) / 2 : index / 2;
      const double off = std::getenv("CP_OFF") ? std::atof(std::getenv("CP_OFF")) : 1.3;
      const double spc = std::getenv("CP_SPC") ? std::atof(std::getenv("CP_SPC")) : 2.4;
      const double ratio = std::getenv("CP_RATIO") ? std::atof(std::getenv("CP_RATIO")) : 0.6;
      const double fw = std::getenv("CP_FW") ? std::atof(std::getenv("CP_FW")) : 1.1;
      const double y1 = domain - off - spc * (c - 1);
      double v = amp * 0.5 * (1.0 + std::tanh((y1 - 2.4 - y) / 1.8));
      if (odd) v *= std::tanh(y / 2.0);
      double depth = sw;
      for (int j = 1; j <= c; ++j) {
        const double z = y1 + spc * (j - 1);
        const double dz = (y - z) / fw;
        v += amp * (j % 2 ? -1.0 : 1.0) * depth * std::exp(-dz * dz);
        depth *= ratio;
      }
      return v;
    }
    const double envelope = std::exp(-r * r * r * r);
    if (odd) return amp * std::sin(0.5 * (index + 1) * M_PI * r) * envelope;
    return amp * std::cos(0.5 * index * M_PI * r) * envelope;
  };
  BvpGuess g;
  g.nodes = uniform_mesh(0.0, L, intervals);
  g.eval = [shape, n, eps, width](double y, double* s) {
    const double d = 1e-4 * width;
    const double fm2 = shape(y - 2 * d), fm1 = shape(y - d), f0 = shape(y),
                 fp1 = shape(y + d), fp2 = shape(y + 2 * d);
    s[0] = f0;
    s[1] = (fp1 - fm1) / (2 * d);
    s[2] = (fp1 - 2 * f0 + fm1) / (d * d);
    const double f3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * d * d * d);
    s[3] = mob(f0, n, eps) * f3;
  };
  return g;
}

void interp_state(const BvpSolution& sol, double y, double* st) {
  const auto& nd = sol.nodes();
  const int m = static_cast<int>(nd.size());
  if (y <= nd.front()) y = nd.front();
  if (y >= nd.back()) y = nd.back();
  int i = 0;
  while (i + 2 < m && nd[i + 1] < y) ++i;
  const double t = (y - nd[i]) / (nd[i + 1] - nd[i]);
  for (int c = 0; c < 4; ++c)
    st[c] = (1.0 - t) * sol.state(i, c) + t * sol.state(i + 1, c);
}

int zeros_of(const BvpSolution& sol, double thresh) {
  int count = 0;
  double last = 0.0;
  bool have = false;
  for (int i = 0; i < static_cast<int>(sol.nodes().size()); ++i) {
    const double v = sol.state(i, 0);
    if (std::abs(v) <= thresh) continue;
    if (have && v * last < 0.0) ++count;
    last = v;
    have = true;
  }
  return count;
}
}  // namespace

int main(int argc, char** argv) {
  SimilarityParams params;
  params.p = argc > 1 ? std::atof(argv[1]) : 2.0;
  params.n = argc > 2 ? std::atof(argv[2]) : 0.95;
  int index = argc > 3 ? std::atoi(argv[3]) : 0;
  params.eps = argc > 4 ? std::atof(argv[4]) : 1e-2;
  params.N = 1;

  const bool odd = index % 2 != 0;
  const double beta = derive_exponents(params).beta;
  const double stretch = std::pow(0.25 / std::max(beta, 1e-3), 0.25);
  double support_est = (4.0 + 1.1 * index) * stretch;
  if (argc > 5) support_est = std::atof(argv[5]);
  double L = 3.0 * support_est;
  if (argc > 6) L = std::atof(argv[6]);
  const int smode = argc > 7 ? std::atoi(argv[7]) : 0;
  const double sw = argc > 8 ? std::atof(argv[8]) : 0.15;
  const double A = std::pow(params.p - 1.0, -1.0 / (params.p - 1.0));
  std::printf("beta=%.4f support_est=%.2f L=%.2f plateau=%.3f eps=%g\n", beta,
              support_est, L, A, params.eps);

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
  bopts.tol = 1e-2;
  const int intervals = std::max(96, static_cast<int>(8.0 * L));

  if (smode == 3) {
    const int c = odd ? (index - 1) / 2 : index / 2;
    const double spacing = 2.4;
    BvpSolution prev;
    bool have_prev = false;
    for (int k = 0; k <= c; ++k) {
      const double Lk = L - spacing * (c - k);
      pr.b = Lk;
      const int iv = std::max(96, static_cast<int>(8.0 * Lk));
      BvpGuess g;
      g.nodes = uniform_mesh(0.0, Lk, iv);
      if (k == 0) {
        g = make_guess(params, odd ? 1 : 0, A, support_est, Lk, iv, 2, sw);
      } else {
        const auto& pn = prev.nodes();
        const double Lprev = pn.back();
        const double zf = Lk - 1.3;
        const double depth = sw * std::pow(0.6, k - 1) * (k % 2 ? -1.0 : 1.0);
        BvpSolution base = prev;
        const double nn = params.n, ee = params.eps;
        g.eval = [&base, Lprev, zf, depth, A, nn, ee](double y, double* s) {
          double st[4] = {0, 0, 0, 0};
          if (y <= Lprev) interp_state(base, y, st);
          const double dz = (y - zf) / 1.1;
          const double bump = A * depth * std::exp(-dz * dz);
          s[0] = st[0] + bump;
          s[1] = st[1] - 2.0 * dz / 1.1 * bump;
          s[2] = st[2] + (4.0 * dz * dz - 2.0) / (1.1 * 1.1) * bump;
          double f3 = 0.0;
          if (std::abs(st[0]) > 1e-12 || std::abs(st[3]) > 1e-12)
            f3 = st[3] / mob(st[0], nn, ee);
          f3 += (12.0 * dz - 8.0 * dz * dz * dz) / (1.1 * 1.1 * 1.1) * bump;
          s[3] = mob(s[0], nn, ee) * f3;
        };
        BvpSolution trial = solve_bvp(pr, g, bopts);
        if (!trial.converged()) {
          std::printf("stage %d (L=%.2f) failed\n", k, Lk);
          return 1;
        }
        prev = trial;
        std::printf("stage %d L=%5.2f maxf=%.4e halfzeros=%d\n", k, Lk,
                    prev.max_abs(0),
                    zeros_of(prev, 0.02 * prev.max_abs(0)));
        continue;
      }
      BvpSolution trial = solve_bvp(pr, g, bopts);
      if (!trial.converged()) {
        std::printf("stage %d (L=%.2f) failed\n", k, Lk);
        return 1;
      }
      prev = trial;
      have_prev = true;
      std::printf("stage %d L=%5.2f maxf=%.4e halfzeros=%d\n", k, Lk,
                  prev.max_abs(0), zeros_of(prev, 0.02 * prev.max_abs(0)));
    }
    (void)have_prev;
    return 0;
  }

  for (double ws : {1.0, 1.3, 0.8, 1.6, 0.65, 1.9}) {
    for (double as : {1.0, 0.75, 1.2, 0.6, 0.85}) {
      auto guess = make_guess(params, index, A * as, support_est * ws, L,
                              intervals, smode, sw);
      BvpSolution sol = solve_bvp(pr, guess, bopts);
      double maxf = sol.converged() ? sol.max_abs(0) : 0.0;
      int z = sol.converged()
                  ? zeros_of(sol, std::max(10.0 * params.eps * (params.n != 0.0),
                                           1e-3 * maxf))
                  : -1;
      double support = 0.0;
      if (sol.converged()) {
        for (int i = 0; i < static_cast<int>(sol.nodes().size()); ++i)
          if (std::abs(sol.state(i, 0)) > 1e-3 * maxf)
            support = sol.nodes()[i];
      }
      std::printf(
          "w=%4.2f a=%4.2f conv=%d it=%2d maxf=%8.3e halfzeros=%d sup=%6.2f\n",
          ws, as, sol.converged() ? 1 : 0, sol.newton_iterations(), maxf, z,
          support);
      if (sol.converged() && maxf > 1e-3 * A && std::getenv("CP_DUMP")) {
        FILE* out = std::fopen(std::getenv("CP_DUMP"), "w");
        for (int i = 0; i < static_cast<int>(sol.nodes().size()); ++i)
          std::fprintf(out, "%.6f %.8e\n", sol.nodes()[i], sol.state(i, 0));
        std::fclose(out);
        return 0;
      }
    }
  }
  return 0;
}
