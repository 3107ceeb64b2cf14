// Similarity profiles of the fourth-order absorption equation. The profile
// ODE is integrated as a first-order system in (f, f', f'', g) where
// g = (eps^2+f^2)^{n/2} f''' regularizes the degenerate mobility. Free
// boundary profiles are found by collocation on a scaled domain plus a scan
// with bisection and secant polish on the leftover interface height;
// Cauchy-problem profiles are solved on a truncated half-line with parity
// conditions at the origin. The absorption-free source profiles use the
// once-integrated third-order form |F|^n F''' = beta y F and the scaling
// F -> c F(y c^{-n/4}) for unit-support normalization.

#include "vss/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <optional>
#include <limits>
#include <string>

#include "vss/errors.hpp"

namespace vss {

namespace detail {

double mobility(double f, double n, double eps) {
  if (n == 0.0) return 1.0;
  return std::pow(eps * eps + f * f, 0.5 * n);
}

double mobility_df(double f, double n, double eps) {
  if (n == 0.0) return 0.0;
  const double m2 = eps * eps + f * f;
  return n * f * std::pow(m2, 0.5 * n - 1.0);
}

double absorption(double f, double p) {
  return std::pow(std::abs(f), p - 1.0) * f;
}

double absorption_df(double f, double p) {
  return p * std::pow(std::abs(f), p - 1.0);
}

Profile package_profile(const SimilarityParams& params, ProfileKind kind,
                        const BvpSolution& sol, double domain_scale,
                        double y0_or_L) {
  Profile prof;
  prof.kind = kind;
  prof.params = params;
  prof.y0 = y0_or_L;
  prof.domain_scale = domain_scale;
  prof.solution = sol;
  const int nn = static_cast<int>(sol.nodes().size());
  prof.y.resize(nn);
  prof.f.resize(nn);
  prof.f1.resize(nn);
  prof.f2.resize(nn);
  prof.f3.resize(nn);
  for (int i = 0; i < nn; ++i) {
    prof.y[i] = domain_scale * sol.nodes()[i];
    prof.f[i] = sol.state(i, 0);
    prof.f1[i] = sol.state(i, 1);
    prof.f2[i] = sol.state(i, 2);
    const double g = sol.dim() >= 4 ? sol.state(i, 3) : 0.0;
    prof.f3[i] = g / mobility(prof.f[i], params.n, params.eps);
  }
  prof.norm_inf = sol.max_abs(0);
  return prof;
}

}  // namespace detail

using detail::absorption;
using detail::absorption_df;
using detail::mobility;
using detail::mobility_df;

BvpProblem vss_ode_system(const SimilarityParams& params) {
  params.validate();
  const auto exps = derive_exponents(params);
  const double n = params.n, p = params.p, eps = params.eps;
  const double beta = exps.beta, alpha = exps.alpha;
  BvpProblem pr;
  pr.dim = 4;
  pr.a = 0.0;
  pr.b = 1.0;  // callers overwrite the span
  pr.rhs = [n, p, eps, beta, alpha](double y, const double* s, double* ds) {
    const double q = mobility(s[0], n, eps);
    ds[0] = s[1];
    ds[1] = s[2];
    ds[2] = s[3] / q;
    ds[3] = beta * y * s[1] + alpha * s[0] - absorption(s[0], p);
  };
  pr.rhs_jac = [n, p, eps, beta, alpha](double y, const double* s, double* J) {
    std::memset(J, 0, sizeof(double) * 16);
    const double q = mobility(s[0], n, eps);
    J[0 * 4 + 1] = 1.0;
    J[1 * 4 + 2] = 1.0;
    J[2 * 4 + 0] = -s[3] * mobility_df(s[0], n, eps) / (q * q);
    J[2 * 4 + 3] = 1.0 / q;
    J[3 * 4 + 0] = alpha - absorption_df(s[0], p);
    J[3 * 4 + 1] = beta * y;
  };
  return pr;
}

namespace {

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = a + (b - a) * (static_cast<double>(i) / (count - 1));
  v.back() = b;
  return v;
}

double plateau_amplitude(double p) {
  return std::pow(p - 1.0, -1.0 / (p - 1.0));
}

void reject_super_linear_absorption(const SimilarityParams& params) {
  if (!(params.p > params.n + 1.0))
    fail_invalid(
        "no very singular profile at p <= n+1: the spatial similarity "
        "exponent is nonpositive there");
  if (!derive_exponents(params).subcritical)
    fail_invalid("very singular profile needs p below 1 + n + 4/N");
}

// The similarity system on [0,1] with y = y0 * xi; states keep their
// physical-derivative meaning, only the independent variable is scaled.
BvpProblem scaled_system(const SimilarityParams& params, double y0) {
  BvpProblem base = vss_ode_system(params);
  BvpProblem pr;
  pr.dim = 4;
  pr.a = 0.0;
  pr.b = 1.0;
  pr.rhs = [base, y0](double xi, const double* s, double* ds) {
    base.rhs(y0 * xi, s, ds);
    for (int c = 0; c < 4; ++c) ds[c] *= y0;
  };
  pr.rhs_jac = [base, y0](double xi, const double* s, double* J) {
    base.rhs_jac(y0 * xi, s, J);
    for (int c = 0; c < 16; ++c) J[c] *= y0;
  };
  return pr;
}

// Plateau capped onto the two-term interface expansion: near the edge the
// seed is C0 (y0-y)^2 (plus the subordinate term for n < 3/2), blended
// smoothly into the constant equilibrium height towards the origin.
BvpGuess fbp_seed(const SimilarityParams& params, double y0, double amplitude,
                  int intervals) {
  const double n = params.n;
  const double beta = derive_exponents(params).beta;
  const double C0 = amplitude / (0.3 * y0 * 0.3 * y0);
  const double denom = (3.0 - 2.0 * n) * (4.0 - 2.0 * n) * (5.0 - 2.0 * n);
  const double c1 = n < 1.4 ? std::pow(C0, 1.0 - n) * beta * y0 / denom : 0.0;
  auto shape = [=](double y) {
    const double dy = y0 - y;
    if (dy <= 0.0) return 0.0;
    const double e = C0 * dy * dy + c1 * std::pow(dy, 5.0 - 2.0 * n);
    return amplitude * e / (amplitude + e);
  };
  BvpGuess g;
  g.nodes = uniform_mesh(0.0, 1.0, intervals);
  g.eval = [shape, y0](double xi, double* s) {
    const double y = y0 * xi;
    const double d = 1e-4 * y0;
    const double fm = shape(y - d), f0 = shape(y), fp = shape(y + d);
    s[0] = f0;
    s[1] = (fp - fm) / (2 * d);
    s[2] = (fp - 2 * f0 + fm) / (d * d);
    s[3] = 0.0;  // flux seed at zero keeps the first iterate tame
  };
  return g;
}

struct FbpAttempt {
  bool valid = false;
  double height = 0.0;
  BvpSolution sol;
};

class FbpHeightSolver {
 public:
  FbpHeightSolver(const SimilarityParams& params, double tol)
      : params_(params), A_(plateau_amplitude(params.p)) {
    bopts_.tol = tol;
  }

  FbpAttempt attempt(double y0, const BvpSolution* warm) const {
    FbpAttempt at;
    BvpProblem pr = scaled_system(params_, y0);
    pr.bc = [](const double* xa, const double* xb, double* r) {
      r[0] = xa[1];
      r[1] = xa[3];
      r[2] = xb[1];
      r[3] = xb[3];
    };
    pr.bc_jac = [](const double*, const double*, double* Ja, double* Jb) {
      std::memset(Ja, 0, sizeof(double) * 16);
      std::memset(Jb, 0, sizeof(double) * 16);
      Ja[0 * 4 + 1] = 1.0;
      Ja[1 * 4 + 3] = 1.0;
      Jb[2 * 4 + 1] = 1.0;
      Jb[3 * 4 + 3] = 1.0;
    };
    BvpGuess guess;
    if (warm && warm->converged())
      guess = guess_from_solution(*warm);
    else
      guess = fbp_seed(params_, y0, A_, 96);
    at.sol = solve_bvp(pr, guess, bopts_);
    if (!at.sol.converged()) return at;
    const double norm = at.sol.max_abs(0);
    if (norm < 0.05 * A_) return at;  // collapsed to the zero solution
    const int last = static_cast<int>(at.sol.nodes().size()) - 1;
    double fmin = at.sol.state(0, 0);
    for (int i = 0; i <= last; ++i) fmin = std::min(fmin, at.sol.state(i, 0));
    const double h = at.sol.state(last, 0);
    if (fmin > 0.5 * A_ && std::abs(h - A_) < 1e-3 * A_)
      return at;  // landed on the constant equilibrium branch
    at.valid = true;
    at.height = h;
    return at;
  }

 private:
  SimilarityParams params_;
  double A_;
  BvpOptions bopts_;
};

struct FbpRoot {
  double y0 = 0.0;
  double height = 0.0;
  double fmin = 0.0;
  BvpSolution sol;
};

// Shrink a sign-change bracket by bisection, then polish with secant steps.
FbpRoot polish_root(const FbpHeightSolver& solver, double y_lo, double h_lo,
                    FbpAttempt lo_at, double y_hi, double h_hi,
                    FbpAttempt hi_at, double height_rel) {
  for (int k = 0; k < 8; ++k) {
    const double ym = 0.5 * (y_lo + y_hi);
    FbpAttempt at = solver.attempt(ym, &lo_at.sol);
    if (!at.valid) fail_solver("interface bisection lost convergence");
    if (h_lo * at.height <= 0.0) {
      y_hi = ym;
      h_hi = at.height;
      hi_at = at;
    } else {
      y_lo = ym;
      h_lo = at.height;
      lo_at = at;
    }
  }

  double ya = y_lo, ha = h_lo, yb = y_hi, hb = h_hi;
  FbpRoot best;
  const bool lo_better = std::abs(ha) < std::abs(hb);
  best.y0 = lo_better ? ya : yb;
  best.height = lo_better ? ha : hb;
  best.sol = lo_better ? lo_at.sol : hi_at.sol;
  for (int k = 0; k < 16; ++k) {
    if (std::abs(best.height) <=
        height_rel * std::max(best.sol.max_abs(0), 1e-12))
      break;
    double yn = yb - hb * (yb - ya) / (hb - ha);
    if (!(yn > std::min(ya, yb) && yn < std::max(ya, yb)))
      yn = 0.5 * (ya + yb);
    FbpAttempt at = solver.attempt(yn, &best.sol);
    if (!at.valid) fail_solver("interface secant lost convergence");
    ya = yb;
    ha = hb;
    yb = yn;
    hb = at.height;
    if (std::abs(hb) < std::abs(best.height)) {
      best.y0 = yn;
      best.height = hb;
      best.sol = at.sol;
    }
  }
  if (std::abs(best.height) >
      height_rel * std::max(best.sol.max_abs(0), 1e-12))
    fail_solver("interface height did not reach tolerance");
  best.fmin = best.sol.state(0, 0);
  for (int i = 0; i < static_cast<int>(best.sol.nodes().size()); ++i)
    best.fmin = std::min(best.fmin, best.sol.state(i, 0));
  return best;
}

}  // namespace

std::vector<double> fbp_interface_heights(const SimilarityParams& params,
                                          const std::vector<double>& y0s,
                                          double tol) {
  params.validate();
  reject_super_linear_absorption(params);
  FbpHeightSolver solver(params, tol);
  std::vector<double> out(y0s.size());
  BvpSolution prev;
  bool have_prev = false;
  for (size_t i = 0; i < y0s.size(); ++i) {
    if (!(y0s[i] > 0.0)) fail_invalid("interface candidates must be positive");
    FbpAttempt at = solver.attempt(y0s[i], have_prev ? &prev : nullptr);
    if (at.valid) {
      out[i] = at.height;
      prev = at.sol;
      have_prev = true;
    } else {
      out[i] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

Profile solve_fbp_profile(const SimilarityParams& params,
                          const FbpOptions& opts) {
  params.validate();
  reject_super_linear_absorption(params);
  if (!(opts.y0_min > 0.0) || !(opts.y0_max > opts.y0_min))
    fail_invalid("interface bracket must satisfy 0 < y0_min < y0_max");

  FbpHeightSolver solver(params, opts.tol);

  // Ascending scan, polishing every sign change of the leftover height
  // between consecutive convergent candidates.
  auto grid = linspace(opts.y0_min, opts.y0_max, std::max(4, opts.scan_points));
  const double step0 = grid[1] - grid[0];
  struct ScanPoint {
    double y0 = 0.0;
    double h = 0.0;
    FbpAttempt at;
  };
  std::vector<FbpRoot> roots;
  std::vector<ScanPoint> pts;
  for (double y0 : grid) {
    FbpAttempt at =
        solver.attempt(y0, pts.empty() ? nullptr : &pts.back().at.sol);
    if (!at.valid) continue;
    if (!pts.empty() && pts.back().h * at.height < 0.0)
      roots.push_back(polish_root(solver, pts.back().y0, pts.back().h,
                                  pts.back().at, y0, at.height, at,
                                  opts.height_rel));
    pts.push_back({y0, at.height, at});
  }
  if (pts.empty())
    fail_solver("no interface candidate converged on the scan bracket");

  // The convergent window can end before the height crosses zero (cold
  // starts fail where the profile wants to dip); walk out of the window
  // with warm starts, halving the step whenever a candidate diverges.
  auto walk_for_bracket =
      [&](ScanPoint from, double dir,
          double limit) -> std::optional<std::pair<ScanPoint, ScanPoint>> {
    double step = dir * step0 / 4.0;
    ScanPoint cur = from;
    for (int i = 0; i < 48; ++i) {
      const double y = cur.y0 + step;
      if ((dir < 0.0 && y < limit) || (dir > 0.0 && y > limit)) break;
      FbpAttempt at = solver.attempt(y, &cur.at.sol);
      if (!at.valid) {
        step *= 0.5;
        if (std::abs(step) < step0 / 128.0) break;
        continue;
      }
      ScanPoint next{y, at.height, at};
      if (cur.h * at.height < 0.0) {
        if (dir < 0.0) return std::make_pair(next, cur);
        return std::make_pair(cur, next);
      }
      cur = next;
    }
    return std::nullopt;
  };
  if (roots.empty()) {
    auto br = walk_for_bracket(pts.front(), -1.0, opts.y0_min);
    if (!br) br = walk_for_bracket(pts.back(), 1.0, opts.y0_max);
    if (br)
      roots.push_back(polish_root(solver, br->first.y0, br->first.h,
                                  br->first.at, br->second.y0, br->second.h,
                                  br->second.at, opts.height_rel));
  }
  if (roots.empty())
    fail_solver("interface height has no sign change on the scan bracket");

  // Smallest interface position whose profile stays out of the negative
  // band wins; remaining roots are reported alongside.
  std::sort(roots.begin(), roots.end(),
            [](const FbpRoot& a, const FbpRoot& b) { return a.y0 < b.y0; });
  int pick = -1;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].fmin >= -10.0 * params.eps) {
      pick = static_cast<int>(i);
      break;
    }
  }
  if (pick < 0)
    fail_solver("every interface root dips below the -10 eps band");

  const FbpRoot& root = roots[pick];
  Profile prof = detail::package_profile(params, ProfileKind::Fbp, root.sol,
                                         root.y0, root.y0);
  prof.index = 0;
  prof.support = root.y0;
  for (size_t i = 0; i < roots.size(); ++i)
    if (static_cast<int>(i) != pick) prof.other_roots.push_back(roots[i].y0);
  return prof;
}

namespace {

// Oscillatory seed with the requested sign-change count, differentiated by
// finite differences; precision is irrelevant for an initial iterate.
BvpGuess cp_seed_guess(const SimilarityParams& params, int index,
                       double amplitude, double width, double L,
                       int intervals) {
  const bool odd = index % 2 != 0;
  const double n = params.n, eps = params.eps;
  auto shape = [odd, index, amplitude, width](double y) {
    const double r = y / width;
    const double envelope = std::exp(-r * r * r * r);
    if (odd)
      return amplitude * std::sin(0.5 * (index + 1) * M_PI * r) * envelope;
    return amplitude * std::cos(0.5 * index * M_PI * r) * envelope;
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
    s[3] = mobility(f0, n, eps) * f3;
  };
  return g;
}

// Length scale of the oscillatory region: the semilinear profile spreads
// over a few units and gains roughly one unit per extra sign change; for
// n > 0 the fourth-order balance stretches lengths like (1/(4 beta))^{1/4}.
double predicted_support(const SimilarityParams& params, int index) {
  const auto exps = derive_exponents(params);
  const double stretch = std::pow(0.25 / std::max(exps.beta, 1e-3), 0.25);
  return (4.0 + 1.1 * index) * stretch;
}

// Half-wavelength of the near-interface oscillation, from the linearized
// balance Q(eps) f''' ~ beta y f: wavenumber (beta y / eps^n)^{1/3} with the
// oscillatory pair at 60 degrees off the real axis.
double skirt_half_wave(const SimilarityParams& params, double y_end) {
  const double beta = derive_exponents(params).beta;
  const double q = std::pow(params.eps, params.n);
  const double k = std::cbrt(std::max(beta, 1e-4) * y_end / q);
  const double half = M_PI / (0.866 * k);
  return std::clamp(half, 1.2, 3.6);
}

// Plateau-with-oscillating-skirt seed: profiles close to the degenerate
// exponent keep a nearly flat core and stack their sign changes into a
// train of small lobes pressed against the far interface.
BvpGuess cp_dip_train_guess(const SimilarityParams& params, int index,
                            double amplitude, double spc, double depth,
                            double L, int intervals) {
  const bool odd = index % 2 != 0;
  const int features = odd ? (index - 1) / 2 : index / 2;
  const double n = params.n, eps = params.eps;
  const double off = std::max(1.3, 0.68 * spc);
  const double fw = std::max(1.1, 0.55 * spc);
  const double y1 = L - off - spc * (features - 1);
  const double edge = y1 - std::max(2.4, 0.8 * spc);
  auto shape = [=](double y) {
    double v = amplitude * 0.5 * (1.0 + std::tanh((edge - y) / 1.8));
    if (odd) v *= std::tanh(y / 2.0);
    double d = depth;
    for (int j = 1; j <= features; ++j) {
      const double dz = (y - (y1 + spc * (j - 1))) / fw;
      v += amplitude * (j % 2 ? -1.0 : 1.0) * d * std::exp(-dz * dz);
      d *= 0.6;
    }
    return v;
  };
  BvpGuess g;
  g.nodes = uniform_mesh(0.0, L, intervals);
  g.eval = [shape, n, eps](double y, double* s) {
    const double d = 1e-4;
    const double fm2 = shape(y - 2 * d), fm1 = shape(y - d), f0 = shape(y),
                 fp1 = shape(y + d), fp2 = shape(y + 2 * d);
    s[0] = f0;
    s[1] = (fp1 - fm1) / (2 * d);
    s[2] = (fp1 - 2 * f0 + fm1) / (d * d);
    const double f3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * d * d * d);
    s[3] = mobility(f0, n, eps) * f3;
  };
  return g;
}

// Wave-packet seed for the excited semilinear profiles: these bifurcate from
// zero at their critical absorption exponents, so the genuine states are
// small oscillatory packets rather than plateau-scale domes.
BvpGuess cp_packet_guess(const SimilarityParams& params, int index,
                         double amplitude, double W, double L,
                         int intervals) {
  const bool odd = index % 2 != 0;
  const double n = params.n, eps = params.eps;
  const double mu = (index + 0.5) * M_PI / W;
  auto shape = [odd, amplitude, W, mu](double y) {
    const double env = std::exp(-std::pow(y / W, 6.0));
    return amplitude * env * (odd ? std::sin(mu * y) : std::cos(mu * y));
  };
  BvpGuess g;
  g.nodes = uniform_mesh(0.0, L, intervals);
  g.eval = [shape, n, eps](double y, double* s) {
    const double d = 1e-4;
    const double fm2 = shape(y - 2 * d), fm1 = shape(y - d), f0 = shape(y),
                 fp1 = shape(y + d), fp2 = shape(y + 2 * d);
    s[0] = f0;
    s[1] = (fp1 - fm1) / (2 * d);
    s[2] = (fp1 - 2 * f0 + fm1) / (d * d);
    const double f3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * d * d * d);
    s[3] = mobility(f0, n, eps) * f3;
  };
  return g;
}

}  // namespace

Profile solve_cp_profile(const SimilarityParams& params, const CpSeed& seed,
                         const CpOptions& opts) {
  params.validate();
  reject_super_linear_absorption(params);
  if (seed.index < 0) fail_invalid("sign-change index must be nonnegative");
  if (params.p >= 1.0 + params.n + 4.0 / params.N)
    fail_invalid(
        "no very singular profile exists at or above the critical "
        "absorption exponent 1 + n + 4/N");

  // In the semilinear case a state with l sign changes exists only below
  // its own critical exponent 1 + 4/(N + l); at or above it that branch has
  // merged into zero, and seeds aimed at it land on lower states. Aim the
  // solve at the nearest same-parity index that still exists rather than
  // letting Newton wander onto truncation artifacts.
  int index = seed.index;
  if (params.n == 0.0) {
    while (index >= 2 && params.p >= 1.0 + 4.0 / (params.N + index))
      index -= 2;
    if (index == 1 && params.p >= 1.0 + 4.0 / (params.N + 1))
      fail_solver("no odd profile exists at this absorption exponent");
  }

  const bool odd = index % 2 != 0;
  const int features = odd ? (index - 1) / 2 : index / 2;
  const double A =
      seed.amplitude > 0.0 ? seed.amplitude : plateau_amplitude(params.p);
  const double beta = derive_exponents(params).beta;
  const bool near_degenerate = beta < 0.05;

  // The free-boundary solve locates the interface of the principal profile
  // cheaply and far more reliably than the dimensional estimate once the
  // plateau widens; fall back to the formula where the shooting fails.
  double support_base = predicted_support(params, 0);
  if (seed.width > 0.0) {
    support_base = seed.width;
  } else {
    try {
      FbpOptions pilot_opts;
      Profile pilot = solve_fbp_profile(params, pilot_opts);
      support_base = std::max(support_base, pilot.y0);
    } catch (const Error&) {
    }
  }
  // Near the critical absorption exponent the hump is small and the dead
  // zone mild, so a generous domain costs nothing and spares the interface.
  const double p_crit = 1.0 + params.n + 4.0 / params.N;
  if ((p_crit - params.p) / (p_crit - params.n - 1.0) < 0.05)
    support_base = std::max(support_base, 12.0);
  const double spc = skirt_half_wave(params, 1.3 * support_base);
  // Stiffness of the dead zone beyond the support: perturbations there grow
  // like exp(k y) with k = (beta y / Q)^{1/3}, so for k of a few the domain
  // cannot extend much past the interface or Newton loses the solution.
  const double k_stiff =
      std::cbrt(beta * std::max(support_base, 1.0) /
                std::pow(params.eps, params.n));
  const bool stiff = !near_degenerate && k_stiff > 2.5;
  // Excited semilinear profiles have no compact support and carry small
  // norms near their critical exponents; they only settle on long domains
  // with a fine mesh, where the truncated tail is far below the tolerance.
  const bool semi_excited = params.n == 0.0 && index >= 2;
  const int mesh_per = semi_excited ? 20 : 10;
  const double L_base = opts.L > 0.0
                            ? opts.L
                            : 1.8 * support_base + 0.9 * spc * features;

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
  bopts.tol = opts.tol;

  // Attempt schedule: shape 0 = oscillatory hump seed, 1 = domain-filling
  // hump seed, 2/3 = plateau-with-lobe-train seeds at two lobe spacings.
  // Domain length multipliers matter as much as the shapes: the converged
  // pattern adapts its skirt to the truncation point.
  struct Attempt {
    int shape;
    double lmult, amult;
    double wmult = 1.0;
  };
  static constexpr Attempt kDegenerateHigh[] = {
      {2, 1.0, 1.0},  {2, 0.9, 1.0},  {3, 1.0, 1.0},  {2, 1.1, 1.0},
      {2, 0.8, 1.0},  {3, 0.85, 1.0}, {2, 1.2, 1.0},  {1, 1.0, 1.0}};
  static constexpr Attempt kDegenerateLow[] = {
      {1, 1.0, 1.0},  {1, 1.15, 1.0}, {0, 1.0, 1.0},  {2, 1.15, 1.0},
      {1, 0.85, 1.0}, {0, 1.3, 0.75}, {1, 0.7, 1.0},  {0, 0.85, 1.0}};
  static constexpr Attempt kModerate[] = {
      {0, 1.0, 1.0},  {2, 1.0, 1.0},  {0, 1.0, 0.75}, {1, 1.3, 1.0},
      {1, 1.55, 1.0}, {0, 0.85, 1.0}, {2, 0.7, 1.0},  {1, 1.8, 1.0}};
  // Stiff multipliers scale the support estimate, not L_base: the usable
  // window is a narrow band just past the interface.
  static constexpr Attempt kStiff[] = {
      {0, 1.30, 1.0}, {0, 1.35, 1.0}, {0, 1.25, 1.0},  {0, 1.40, 1.0},
      {0, 1.20, 0.75}, {2, 1.30, 1.0}, {0, 1.45, 1.0}, {2, 1.40, 1.0}};
  // Excited semilinear states: packets of several widths and amplitudes on
  // the long domain, then short-domain dome shapes as a last resort.
  static constexpr Attempt kSemiExcited[] = {
      {4, 1.0, 0.6, 1.0}, {4, 1.0, 0.35, 1.0}, {4, 1.0, 0.6, 0.7},
      {4, 1.0, 0.6, 1.3}, {4, 1.0, 0.15, 1.0}, {4, 0.94, 0.35, 0.8},
      {0, 0.2, 1.0, 1.0}, {2, 0.3, 1.0, 1.0}};
  const Attempt* schedule = kModerate;
  if (near_degenerate) schedule = index >= 2 ? kDegenerateHigh : kDegenerateLow;
  else if (stiff) schedule = kStiff;
  else if (semi_excited) schedule = kSemiExcited;
  const int tries = std::min<int>(opts.max_reseeds + 1, 8);

  std::vector<Profile> candidates;
  for (int t = 0; t < tries; ++t) {
    const Attempt& att = schedule[t];
    double L = L_base * att.lmult;
    if (stiff)
      L = opts.L > 0.0 ? opts.L * att.lmult / 1.30
                       : att.lmult * support_base + 0.9 * spc * features;
    else if (semi_excited)
      L = opts.L > 0.0 ? opts.L * att.lmult : 36.0 * att.lmult;
    const double amp = A * att.amult;
    const int intervals = std::max(128, static_cast<int>(mesh_per * L));
    pr.b = L;
    BvpGuess guess;
    switch (att.shape) {
      case 1:
        guess = cp_seed_guess(params, index, amp, L / 1.25, L, intervals);
        break;
      case 2:
        guess = cp_dip_train_guess(params, index, amp, spc, 0.25, L,
                                   intervals);
        break;
      case 3:
        guess = cp_dip_train_guess(params, index, amp, 0.85 * spc, 0.4,
                                   L, intervals);
        break;
      case 4:
        guess = cp_packet_guess(params, index, amp,
                                1.8 * support_base * att.wmult, L, intervals);
        break;
      default:
        guess = cp_seed_guess(params, index, amp, support_base, L,
                              intervals);
    }
    BvpSolution sol = solve_bvp(pr, guess, bopts);
    if (!sol.converged()) continue;
    if (sol.max_abs(0) < 1e-3 * A) continue;  // collapsed to zero
    Profile prof =
        detail::package_profile(params, ProfileKind::Cp, sol, 1.0, L);
    prof.index = count_sign_changes(prof, 0.2);
    const double thresh = std::max(
        params.n != 0.0 ? 3.0 * params.eps : 0.0, 1e-3 * prof.norm_inf);
    prof.support = 0.0;
    for (size_t i = 0; i < prof.y.size(); ++i)
      if (std::abs(prof.f[i]) > thresh) prof.support = prof.y[i];
    bool dup = false;
    for (const Profile& c : candidates)
      if (c.index == prof.index &&
          std::abs(c.norm_inf - prof.norm_inf) < 5e-3 * c.norm_inf &&
          std::abs(c.y0 - prof.y0) < 0.3)
        dup = true;
    if (!dup) candidates.push_back(std::move(prof));
  }
  if (candidates.empty())
    fail_solver("truncated-line profile did not converge for index " +
                std::to_string(index));
  // Requested sign-change count first, then the plateau-scale state; the
  // truncation check below walks this order, so a spurious large-norm state
  // gets discarded in favor of a smaller one that does not move with the cut.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [index](const Profile& a, const Profile& b) {
                     const bool ma = a.index == index;
                     const bool mb = b.index == index;
                     if (ma != mb) return ma;
                     return a.norm_inf > b.norm_inf;
                   });
  if (!opts.check_truncation) return candidates.front();

  // A genuine profile must not care where the half-line was cut: re-solve on
  // shifted domains seeded by the found solution and demand sup-norm
  // agreement within one percent. Past the skirt the linearized problem
  // grows like exp(k y) with k = (beta y / Q)^{1/3}, so the domain can only
  // be stretched by a growth budget of a few 1/k before the dead zone swamps
  // the corrector; when no widened solve converges the domain is shrunk
  // toward the support instead, which pins the interface equally well.
  bool saw_drift = false;
  const int limit = std::min<size_t>(candidates.size(), 5);
  for (int c = 0; c < limit; ++c) {
    const Profile& cand = candidates[c];
    const double L = cand.y0;
    const BvpSolution& inner = cand.solution;
    const double k_end = std::cbrt(beta * std::max(L, 1.0) /
                                   std::pow(params.eps, params.n));
    const double pad = std::clamp(4.5 / std::max(k_end, 0.3), 0.8, 0.5 * L);
    const double margin = L - cand.support;
    std::vector<double> offsets = {pad, 0.5 * pad, 1.0, 0.5};
    if (margin > 0.3 * spc) {
      offsets.push_back(-0.65 * margin);
      offsets.push_back(-0.88 * margin);
    }
    double end_state[4];
    inner.eval(L, end_state);
    const double f2_end = end_state[2], g_end = end_state[3];
    // Every re-solve that converges casts a vote. Agreement within one
    // percent supports the candidate; a nearby miss means the state adapted
    // to the cut; a landing more than a few percent away means Newton left
    // the basin entirely and says nothing about this candidate. One agreeing
    // cut is not enough when others drift, so the candidate is kept only if
    // agreements are not outnumbered.
    int agree = 0, drift = 0;
    std::vector<double> tried;
    for (double off : offsets) {
      bool near = false;
      for (double u : tried)
        if (std::abs(u - off) < 0.15) near = true;
      if (near) continue;
      tried.push_back(off);
      const double Lw = L + off;
      BvpProblem wide = pr;
      wide.b = Lw;
      BvpGuess g;
      g.nodes = uniform_mesh(
          0.0, Lw, static_cast<int>(std::max(128.0, mesh_per * Lw)));
      g.eval = [&inner, L, f2_end, g_end](double y, double* s) {
        if (y <= L) {
          inner.eval(y, s);
        } else {
          // f and f' vanish at the old endpoint; let the leftover curvature
          // and flux decay instead of jumping to zero.
          const double decay = std::exp(-(y - L));
          s[0] = 0.0;
          s[1] = 0.0;
          s[2] = f2_end * decay;
          s[3] = g_end * decay;
        }
      };
      BvpSolution wsol = solve_bvp(wide, g, bopts);
      if (!wsol.converged()) continue;
      const double n2 = wsol.max_abs(0);
      if (n2 < 1e-3 * A) continue;  // collapsed, not evidence either way
      const double miss =
          std::abs(cand.norm_inf - n2) / std::max(cand.norm_inf, n2);
      if (miss <= 0.01) {
        ++agree;
      } else if (miss <= 0.05) {
        ++drift;
        saw_drift = true;
      }
    }
    if (agree >= 1 && agree >= drift) return cand;
  }
  if (saw_drift) fail_solver("profile is sensitive to the truncation length");
  fail_solver("truncation check solve did not converge");
}

int count_sign_changes(const Profile& prof, double threshold_rel) {
  const double thresh =
      std::max(prof.params.n != 0.0 ? 3.0 * prof.params.eps : 0.0,
               threshold_rel * prof.norm_inf);
  int count = 0;
  double last = 0.0;
  bool have = false;
  for (size_t i = 0; i < prof.f.size(); ++i) {
    const double v = prof.f[i];
    if (std::abs(v) <= thresh) continue;
    if (have && v * last < 0.0) ++count;
    last = v;
    have = true;
  }
  const bool odd_origin = std::abs(prof.f.front()) <= thresh;
  return odd_origin ? 2 * count + 1 : 2 * count;
}

// ---- absorption-free source profiles ----

namespace {

double pow_positive(double f, double q, double floor_val) {
  if (q == 0.0) return 1.0;
  const double base = std::max(f, floor_val);
  if (base <= 0.0) return 0.0;
  return std::pow(base, q);
}

// Eigen-style solve of the general source family on the unit support: the
// exponent rides along as a constant fifth state, pinned by the extra
// zero-flux interface condition.
// Unit-support nonlinear eigenvalue solve in normalized form. Writing
// F = A G with G pinned to unit size at the origin and kappa = A^n carried
// as an unknown removes the amplitude neutral direction: a raw solve in F
// admits a spurious family of arbitrarily small solutions living inside the
// regularization band (where the mobility is effectively constant and the
// problem linear), and Newton falls into it for l >= 1. The smoothing is
// relative (delta_rel of the origin amplitude) so the eigenvalue does not
// inherit an absolute-scale artifact.
constexpr double kSecondKindDeltaRel = 1e-3;

double mobility_rel(double g, double n, double dr) {
  return std::pow(dr * dr + g * g, 0.5 * n);
}
double mobility_rel_dg(double g, double n, double dr) {
  return n * g * std::pow(dr * dr + g * g, 0.5 * n - 1.0);
}

BvpSolution second_kind_raw(double n, int l, double a_seed, double kappa_seed,
                            double width, double tol) {
  const bool odd = l % 2 != 0;
  const double dr = kSecondKindDeltaRel;
  BvpProblem pr;
  pr.dim = 6;
  pr.a = 0.0;
  pr.b = 1.0;
  pr.rhs = [n, dr](double y, const double* s, double* ds) {
    const double kap = s[4];
    const double al = s[5];
    ds[0] = s[1];
    ds[1] = s[2];
    ds[2] = s[3] / (kap * mobility_rel(s[0], n, dr));
    ds[3] = 0.25 * (1.0 - n * al) * y * s[1] + al * s[0];
    ds[4] = 0.0;
    ds[5] = 0.0;
  };
  pr.rhs_jac = [n, dr](double y, const double* s, double* J) {
    std::memset(J, 0, sizeof(double) * 36);
    const double kap = s[4];
    const double al = s[5];
    const double q = mobility_rel(s[0], n, dr);
    J[0 * 6 + 1] = 1.0;
    J[1 * 6 + 2] = 1.0;
    J[2 * 6 + 0] = -s[3] * mobility_rel_dg(s[0], n, dr) / (kap * q * q);
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
  guess.nodes = uniform_mesh(0.0, 1.0, 200);
  guess.eval = [odd, l, width, a_seed, kappa_seed, n, dr](double y, double* s) {
    auto shape = [odd, l, width](double t) {
      const double env = (1.0 - t * t) * (1.0 - t * t);
      if (odd) {
        const double k = 0.5 * (l + 1) * M_PI * width;
        return std::sin(k * t) * env / k;  // unit slope at the origin
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
    s[3] = kappa_seed * mobility_rel(f0, n, dr) * f3;
    s[4] = kappa_seed;
    s[5] = a_seed;
  };

  BvpOptions bopts;
  bopts.tol = tol;
  return solve_bvp(pr, guess, bopts);
}

struct SecondKindSolve {
  bool ok = false;
  double amplitude = 0.0;  // physical origin scale A = kappa^(1/n)
  double alpha = 0.0;
  BvpSolution sol;
};

Profile package_second_kind(double n, int N, const BvpSolution& sol) {
  const double kap = sol.state(0, 4);
  const double al = sol.state(0, 5);
  const double A = std::pow(kap, 1.0 / n);
  const double dr = kSecondKindDeltaRel;

  SimilarityParams tag;
  tag.n = n;
  tag.N = N;
  tag.p = 1.0 + 1.0 / al;
  tag.eps = dr * A;

  Profile prof;
  prof.kind = ProfileKind::PureTfeCp;
  prof.params = tag;
  prof.solution = sol;
  const int nn = static_cast<int>(sol.nodes().size());
  prof.y.resize(nn);
  prof.f.resize(nn);
  prof.f1.resize(nn);
  prof.f2.resize(nn);
  prof.f3.resize(nn);
  for (int i = 0; i < nn; ++i) {
    const double g = sol.state(i, 0);
    prof.y[i] = sol.nodes()[i];
    prof.f[i] = A * g;
    prof.f1[i] = A * sol.state(i, 1);
    prof.f2[i] = A * sol.state(i, 2);
    prof.f3[i] = A * sol.state(i, 3) / (kap * mobility_rel(g, n, dr));
  }
  prof.norm_inf = A * sol.max_abs(0);
  prof.y0 = 1.0;
  prof.support = 1.0;
  prof.index = count_sign_changes(prof, 0.02);
  return prof;
}

// The origin scale of each family member is pinned by the unit support but
// not known beforehand, so sweep seed scales and widths until the solve
// lands on the requested branch (right parity and essential-zero count;
// small near-interface oscillations below 2% of the peak do not count).
SecondKindSolve second_kind_swept(double n, int N, int l, double a_seed,
                                  double tol) {
  static constexpr double kScales[] = {0.01, 0.003, 0.03, 0.001, 0.1};
  static constexpr double kWidths[] = {1.0, 1.2, 0.85, 1.45};
  SecondKindSolve out;
  for (double width : kWidths) {
    for (double amp : kScales) {
      const double kappa = std::pow(amp, n);
      BvpSolution sol = second_kind_raw(n, l, a_seed, kappa, width, tol);
      if (!sol.converged()) continue;
      const double kap = sol.state(0, 4);
      const double al = sol.state(0, 5);
      if (!(kap > 1e-12) || !(kap < 1e3)) continue;
      if (!(al > 1e-6) || !(al < 1.0 / n - 1e-9)) continue;
      const double gmax = sol.max_abs(0);
      if (!(gmax >= 0.05) || !(gmax <= 20.0)) continue;
      Profile prof = package_second_kind(n, N, sol);
      if (prof.index != l) continue;
      out.ok = true;
      out.amplitude = std::pow(kap, 1.0 / n);
      out.alpha = al;
      out.sol = sol;
      return out;
    }
  }
  return out;
}

}  // namespace

Profile explicit_pure_tfe_profile(int N, double a, int samples) {
  if (N < 1) fail_invalid("N must be a positive integer");
  if (!(a > 0.0)) fail_invalid("support radius must be positive");
  if (samples < 16) samples = 16;
  const double c0 = 1.0 / (8.0 * (N + 2.0) * (N + 4.0));
  Profile prof;
  prof.kind = ProfileKind::Explicit;
  prof.params.n = 1.0;
  prof.params.N = N;
  prof.params.p = 2.0 + 4.0 / N;  // top of the subcritical range for n = 1
  prof.params.eps = 1e-9;
  prof.y = linspace(0.0, a, samples);
  prof.f.resize(samples);
  prof.f1.resize(samples);
  prof.f2.resize(samples);
  prof.f3.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double y = prof.y[i];
    const double w = a * a - y * y;
    prof.f[i] = c0 * w * w;
    prof.f1[i] = -4.0 * c0 * y * w;
    prof.f2[i] = c0 * (12.0 * y * y - 4.0 * a * a);
    prof.f3[i] = 24.0 * c0 * y;
  }
  prof.y0 = a;
  prof.support = a;
  prof.norm_inf = c0 * a * a * a * a;
  prof.index = 0;
  prof.domain_scale = 1.0;
  return prof;
}

Profile pure_tfe_profile(double n, int N, ProblemKind problem,
                         std::optional<double> alpha, double tol) {
  if (N < 1) fail_invalid("N must be a positive integer");
  if (n < 0.0 || n >= 3.0) fail_invalid("source profile needs n in [0, 3)");
  const double beta = 1.0 / (4.0 + n * N);

  SimilarityParams tag;
  tag.n = n;
  tag.N = N;
  tag.p = 1.0 + n + 4.0 / N;
  tag.eps = 1e-9;
  tag.problem = problem;

  if (alpha.has_value()) {
    // The general family exists only along discrete exponents; refine the
    // supplied value as an eigenvalue and reject drift off its branch.
    const double al = *alpha;
    if (!(n > 0.0)) fail_invalid("the general source family needs n > 0");
    if (!(al > 0.0) || !(al < 1.0 / n))
      fail_invalid("alpha must lie in (0, 1/n)");
    // Invert the seed relation alpha ~ (N+l)/(4+n(N+l)) for the index.
    const double raw = (al * (4.0 + n * N) - N) / std::max(1.0 - al * n, 1e-9);
    const int l = std::max(0, static_cast<int>(std::lround(raw)));
    SecondKindSolve sk = second_kind_swept(n, N, l, al, tol);
    if (!sk.ok)
      fail_solver("source family solve did not converge at the supplied alpha");
    if (std::abs(sk.alpha - al) > 0.05 * al)
      fail_solver("solve drifted off the supplied exponent branch");
    return package_second_kind(n, N, sk.sol);
  }

  if (problem == ProblemKind::FBP) {
    if (n == 0.0)
      fail_invalid("free-boundary source profile needs n > 0");
    // Third-order form F''' = beta y F^{1-n} on the unit support, using
    // positivity of the free-boundary profile. For n = 1 the right side is
    // state-independent and the quartic solution is reproduced exactly.
    const double q = 1.0 - n;
    const double floor_val = q < 0.0 ? 1e-9 : 0.0;
    BvpProblem pr;
    pr.dim = 3;
    pr.a = 0.0;
    pr.b = 1.0;
    pr.rhs = [beta, q, floor_val](double y, const double* s, double* ds) {
      ds[0] = s[1];
      ds[1] = s[2];
      ds[2] = beta * y * pow_positive(s[0], q, floor_val);
    };
    pr.rhs_jac = [beta, q, floor_val](double y, const double* s, double* J) {
      std::memset(J, 0, sizeof(double) * 9);
      J[0 * 3 + 1] = 1.0;
      J[1 * 3 + 2] = 1.0;
      if (q != 0.0 && s[0] > std::max(floor_val, 1e-12))
        J[2 * 3 + 0] = beta * y * q * std::pow(s[0], q - 1.0);
    };
    pr.bc = [](const double* xa, const double* xb, double* r) {
      r[0] = xa[1];
      r[1] = xb[0];
      r[2] = xb[1];
    };
    BvpGuess guess;
    guess.nodes = uniform_mesh(0.0, 1.0, 128);
    guess.eval = [](double y, double* s) {
      const double c = 1.0 / 120.0;
      const double w = 1.0 - y * y;
      s[0] = c * w * w;
      s[1] = -4.0 * c * y * w;
      s[2] = c * (12.0 * y * y - 4.0);
    };
    BvpOptions bopts;
    bopts.tol = tol;
    BvpSolution sol = solve_bvp(pr, guess, bopts);
    if (!sol.converged() || sol.max_abs(0) < 1e-6)
      fail_solver("free-boundary source profile did not converge");
    Profile prof;
    prof.kind = ProfileKind::PureTfeFbp;
    prof.params = tag;
    prof.solution = sol;
    const int nn = static_cast<int>(sol.nodes().size());
    prof.y.resize(nn);
    prof.f.resize(nn);
    prof.f1.resize(nn);
    prof.f2.resize(nn);
    prof.f3.resize(nn);
    for (int i = 0; i < nn; ++i) {
      const double y = sol.nodes()[i];
      prof.y[i] = y;
      prof.f[i] = sol.state(i, 0);
      prof.f1[i] = sol.state(i, 1);
      prof.f2[i] = sol.state(i, 2);
      prof.f3[i] = beta * y * pow_positive(prof.f[i], q, floor_val);
    }
    prof.y0 = 1.0;
    prof.support = 1.0;
    prof.norm_inf = sol.max_abs(0);
    prof.index = 0;
    return prof;
  }

  // Cauchy problem. For n > 0 this is the index-0 member of the general
  // family: mass conservation pins the exponent at N/(4+nN), and the
  // normalized eigen-solve recovers it along with the origin scale that
  // puts the interface exactly at y = 1.
  if (n > 0.0) {
    const double a0 = N / (4.0 + n * N);
    SecondKindSolve sk = second_kind_swept(n, N, 0, a0, tol);
    if (!sk.ok) fail_solver("source profile did not converge");
    if (std::abs(sk.alpha - a0) > 0.05 * a0)
      fail_solver("source solve drifted off the mass-conserving exponent");
    return package_second_kind(n, N, sk.sol);
  }

  // n = 0: the equation is linear (the kernel of the semilinear theory) and
  // has unbounded support, so solve the once-integrated form on a window
  // wide enough for the oscillatory tail to decay, with a nominal amplitude.
  BvpOptions bopts;
  bopts.tol = tol;
  const double A0 = 1.0 / 120.0;
  const double L = 12.0;
  const double delta = 1e-3 * A0;
  BvpGuess guess;
  guess.nodes = uniform_mesh(0.0, L, 160);
  guess.eval = [A0, L](double y, double* s) {
    const double r = y / (0.45 * L);
    const double e = std::exp(-r * r);
    s[0] = A0 * e;
    s[1] = -2.0 * A0 * r * e / (0.45 * L);
    s[2] = A0 * (4.0 * r * r - 2.0) * e / (0.45 * L * 0.45 * L);
  };
  BvpProblem pr;
  pr.dim = 3;
  pr.a = 0.0;
  pr.b = L;
  pr.rhs = [beta](double y, const double* s, double* ds) {
    ds[0] = s[1];
    ds[1] = s[2];
    ds[2] = beta * y * s[0];
  };
  pr.rhs_jac = [beta](double y, const double*, double* J) {
    std::memset(J, 0, sizeof(double) * 9);
    J[0 * 3 + 1] = 1.0;
    J[1 * 3 + 2] = 1.0;
    J[2 * 3 + 0] = beta * y;
  };
  pr.bc = [A0](const double* xa, const double* xb, double* r) {
    r[0] = xa[1];
    r[1] = xa[0] - A0;
    r[2] = xb[0];
  };
  BvpSolution sol = solve_bvp(pr, guess, bopts);
  if (!sol.converged()) fail_solver("source profile did not converge");

  Profile prof;
  prof.kind = ProfileKind::PureTfeCp;
  prof.params = tag;
  prof.params.eps = delta;
  prof.solution = sol;
  const int nn = static_cast<int>(sol.nodes().size());
  prof.y.resize(nn);
  prof.f.resize(nn);
  prof.f1.resize(nn);
  prof.f2.resize(nn);
  prof.f3.resize(nn);
  for (int i = 0; i < nn; ++i) {
    const double yy = sol.nodes()[i];
    prof.y[i] = yy;
    prof.f[i] = sol.state(i, 0);
    prof.f1[i] = sol.state(i, 1);
    prof.f2[i] = sol.state(i, 2);
    prof.f3[i] = beta * yy * prof.f[i];
  }
  prof.norm_inf = sol.max_abs(0);
  prof.y0 = L;
  prof.support = L;
  prof.index = count_sign_changes(prof);
  return prof;
}

SecondKindResult tfe_second_kind_alpha(double n, int N, int l,
                                       double alpha_guess, double tol) {
  if (N < 1) fail_invalid("N must be a positive integer");
  if (!(n > 0.0) || n >= 3.0)
    fail_invalid("second-kind exponent needs n in (0, 3)");
  if (l < 0) fail_invalid("profile index must be nonnegative");

  const double a_seed =
      alpha_guess > 0.0 ? alpha_guess : (N + l) / (4.0 + n * (N + l));
  SecondKindSolve sk = second_kind_swept(n, N, l, a_seed, tol);
  if (!sk.ok)
    fail_solver("second-kind eigen-solve did not converge for l=" +
                std::to_string(l));

  SecondKindResult out;
  out.alpha = sk.alpha;
  out.p_l = 1.0 + 1.0 / out.alpha;
  out.profile = package_second_kind(n, N, sk.sol);
  return out;
}

std::vector<double> interface_expansion_eval(const SimilarityParams& params,
                                             double C0, double y0,
                                             const std::vector<double>& y) {
  params.validate();
  const double n = params.n;
  for (double bad : {1.5, 2.0, 2.5})
    if (std::abs(n - bad) < 1e-9)
      fail_invalid("expansion denominator vanishes at n = " +
                   std::to_string(bad));
  if (!(C0 > 0.0)) fail_invalid("leading coefficient must be positive");
  if (!(y0 > 0.0)) fail_invalid("interface position must be positive");
  const double beta = derive_exponents(params).beta;
  const double denom = (3.0 - 2.0 * n) * (4.0 - 2.0 * n) * (5.0 - 2.0 * n);
  const double c1 = std::pow(C0, 1.0 - n) * beta * y0 / denom;
  std::vector<double> out(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    const double dy = y0 - y[i];
    if (dy <= 0.0) {
      out[i] = 0.0;
      continue;
    }
    out[i] = C0 * dy * dy + c1 * std::pow(dy, 5.0 - 2.0 * n);
  }
  return out;
}

ResidualReport profile_equation_residual(const Profile& prof,
                                         double clearance) {
  if (prof.y.size() < 5 || prof.solution.dim() < 4)
    fail_invalid("residual check needs a solver-backed profile");
  const auto& params = prof.params;
  const auto exps = derive_exponents(params);
  const double n = params.n, p = params.p, eps = params.eps;
  const double alpha = exps.alpha, beta = exps.beta;
  // Source-type profiles solve the absorption-free equation; their params
  // carry the matching critical p, so only the sink term differs.
  const bool absorbing =
      prof.kind == ProfileKind::Fbp || prof.kind == ProfileKind::Cp;
  const double span = prof.y.back() - prof.y.front();
  const double dy = 1e-6 * span;

  // Unregularized flux |f|^n f''' recovered from the regularized state:
  // |f|^n g / (eps^2+f^2)^{n/2} = g (f^2/(eps^2+f^2))^{n/2}.
  auto flux = [&](double yphys) {
    double s[8];
    prof.solution.eval(yphys / prof.domain_scale, s);
    const double f = s[0], g = s[3];
    if (n == 0.0) return g;
    const double ratio = f * f / (eps * eps + f * f);
    return g * std::pow(ratio, 0.5 * n);
  };

  ResidualReport rep;
  for (size_t i = 1; i + 1 < prof.y.size(); ++i) {
    const double y = prof.y[i];
    const double f = prof.f[i];
    if (std::abs(f) <= clearance * eps) continue;
    if (y - dy <= prof.y.front() || y + dy >= prof.y.back()) continue;
    const double dflux = (flux(y + dy) - flux(y - dy)) / (2.0 * dy);
    const double sink = absorbing ? absorption(f, p) : 0.0;
    const double r = -dflux + beta * y * prof.f1[i] + alpha * f - sink;
    const double scale = 1.0 + std::abs(beta * y * prof.f1[i]) +
                         std::abs(alpha * f) + std::abs(sink);
    const double rel = std::abs(r) / scale;
    ++rep.samples;
    if (rel > rep.max_scaled) {
      rep.max_scaled = rel;
      rep.at_y = y;
    }
  }
  if (rep.samples == 0)
    fail_invalid("no samples clear the regularization band");
  return rep;
}

}  // namespace vss
