// Collocation solver for two-point boundary value problems. Each mesh
// interval carries the three-point Lobatto closure
//   x_{i+1} - x_i = (h/6) (f_i + 4 f_m + f_{i+1}),
//   x_m = (x_i + x_{i+1})/2 - (h/8) (f_{i+1} - f_i),
// which is fourth order on smooth problems. The nonlinear system in the node
// states is solved by damped Newton on a sparse block-bidiagonal Jacobian,
// and the mesh is refined where the interpolant's residual x' - f(y, x),
// sampled between collocation points, exceeds the tolerance.

#include "vss/bvp.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>

#include "vss/bvp_kernels.hpp"
#include "vss/errors.hpp"
#include "vss/parallel.hpp"

namespace vss {

namespace detail {

void rhs_jacobian(const BvpProblem& pr, double y, const double* x, double* J,
                  double* scratch) {
  const int d = pr.dim;
  if (pr.rhs_jac) {
    pr.rhs_jac(y, x, J);
    return;
  }
  // scratch: 3*d (shifted state, f_plus, f_minus)
  double* xs = scratch;
  double* fp = scratch + d;
  double* fm = scratch + 2 * d;
  for (int j = 0; j < d; ++j) xs[j] = x[j];
  for (int j = 0; j < d; ++j) {
    const double delta = 6e-6 * (1.0 + std::abs(x[j]));
    xs[j] = x[j] + delta;
    pr.rhs(y, xs, fp);
    xs[j] = x[j] - delta;
    pr.rhs(y, xs, fm);
    xs[j] = x[j];
    const double inv = 1.0 / (2.0 * delta);
    for (int i = 0; i < d; ++i) J[i * d + j] = (fp[i] - fm[i]) * inv;
  }
}

namespace {

// f and (optionally) its Jacobian at every node.
template <bool Parallel>
void node_pass(const BvpProblem& pr, const CollocationArrays& w) {
  const int d = w.d;
  auto body = [&](int i) {
    const double y = w.nodes[i];
    const double* x = w.X + static_cast<size_t>(i) * d;
    pr.rhs(y, x, w.node_f + static_cast<size_t>(i) * d);
    if (w.want_jacobians) {
      double scratch[3 * 8];
      rhs_jacobian(pr, y, x, w.node_J + static_cast<size_t>(i) * d * d,
                   scratch);
    }
  };
  if constexpr (Parallel) {
    par::parallel_for(w.M + 1, body);
  } else {
    for (int i = 0; i <= w.M; ++i) body(i);
  }
}

// Midpoint state, closure residual and, when requested, the two Jacobian
// blocks of one interval.
template <bool Parallel>
void interval_pass(const BvpProblem& pr, const CollocationArrays& w) {
  const int d = w.d;
  auto body = [&](int i) {
    const size_t id = static_cast<size_t>(i) * d;
    const double h = w.nodes[i + 1] - w.nodes[i];
    const double ym = 0.5 * (w.nodes[i] + w.nodes[i + 1]);
    const double* x0 = w.X + id;
    const double* x1 = w.X + id + d;
    const double* f0 = w.node_f + id;
    const double* f1 = w.node_f + id + d;
    double* xm = w.mid_x + id;
    double* fm = w.mid_f + id;
    for (int c = 0; c < d; ++c)
      xm[c] = 0.5 * (x0[c] + x1[c]) - (h / 8.0) * (f1[c] - f0[c]);
    pr.rhs(ym, xm, fm);
    double* phi = w.phi + id;
    for (int c = 0; c < d; ++c)
      phi[c] = x1[c] - x0[c] - (h / 6.0) * (f0[c] + 4.0 * fm[c] + f1[c]);
    if (!w.want_jacobians) return;

    double Jm[8 * 8];
    double scratch[3 * 8];
    rhs_jacobian(pr, ym, xm, Jm, scratch);
    const double* J0 = w.node_J + id * d;
    const double* J1 = w.node_J + id * d + static_cast<size_t>(d) * d;
    double* B = w.blockB + id * d;
    double* C = w.blockC + id * d;
    // B = -I - (h/6) J0 - (h/3) Jm - (h^2/12) Jm J0
    // C =  I - (h/6) J1 - (h/3) Jm + (h^2/12) Jm J1
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        double mj0 = 0.0, mj1 = 0.0;
        for (int k = 0; k < d; ++k) {
          mj0 += Jm[r * d + k] * J0[k * d + c];
          mj1 += Jm[r * d + k] * J1[k * d + c];
        }
        const double diag = (r == c) ? 1.0 : 0.0;
        B[r * d + c] = -diag - (h / 6.0) * J0[r * d + c] -
                       (h / 3.0) * Jm[r * d + c] - (h * h / 12.0) * mj0;
        C[r * d + c] = diag - (h / 6.0) * J1[r * d + c] -
                       (h / 3.0) * Jm[r * d + c] + (h * h / 12.0) * mj1;
      }
    }
  };
  if constexpr (Parallel) {
    par::parallel_for(w.M, body);
  } else {
    for (int i = 0; i < w.M; ++i) body(i);
  }
}

// Interpolant basis on [0,1]: derivative weights L*, integrated weights A*.
inline void interp_weights(double t, double* L, double* A) {
  L[0] = 1.0 - 3.0 * t + 2.0 * t * t;
  L[1] = 4.0 * t - 4.0 * t * t;
  L[2] = -t + 2.0 * t * t;
  A[0] = t - 1.5 * t * t + (2.0 / 3.0) * t * t * t;
  A[1] = 2.0 * t * t - (4.0 / 3.0) * t * t * t;
  A[2] = -0.5 * t * t + (2.0 / 3.0) * t * t * t;
}

template <bool Parallel>
void residual_pass(const BvpProblem& pr, const CollocationArrays& w,
                   double* res) {
  const int d = w.d;
  static constexpr double samples[2] = {0.25, 0.75};
  auto body = [&](int i) {
    const size_t id = static_cast<size_t>(i) * d;
    const double h = w.nodes[i + 1] - w.nodes[i];
    const double* x0 = w.X + id;
    const double* f0 = w.node_f + id;
    const double* f1 = w.node_f + id + d;
    const double* fm = w.mid_f + id;
    double worst = 0.0;
    for (double t : samples) {
      double L[3], A[3];
      interp_weights(t, L, A);
      double u[8], du[8], fu[8];
      for (int c = 0; c < d; ++c) {
        du[c] = L[0] * f0[c] + L[1] * fm[c] + L[2] * f1[c];
        u[c] = x0[c] + h * (A[0] * f0[c] + A[1] * fm[c] + A[2] * f1[c]);
      }
      pr.rhs(w.nodes[i] + t * h, u, fu);
      for (int c = 0; c < d; ++c) {
        const double r = std::abs(du[c] - fu[c]) / (1.0 + std::abs(du[c]));
        worst = std::max(worst, r);
      }
    }
    res[i] = h * worst;
  };
  if constexpr (Parallel) {
    par::parallel_for(w.M, body);
  } else {
    for (int i = 0; i < w.M; ++i) body(i);
  }
}

}  // namespace

void assemble_collocation_reference(const BvpProblem& pr,
                                    const CollocationArrays& w) {
  node_pass<false>(pr, w);
  interval_pass<false>(pr, w);
}

void assemble_collocation_parallel(const BvpProblem& pr,
                                   const CollocationArrays& w) {
  node_pass<true>(pr, w);
  interval_pass<true>(pr, w);
}

void estimate_residuals_reference(const BvpProblem& pr,
                                  const CollocationArrays& w, double* res) {
  residual_pass<false>(pr, w, res);
}

void estimate_residuals_parallel(const BvpProblem& pr,
                                 const CollocationArrays& w, double* res) {
  residual_pass<true>(pr, w, res);
}

}  // namespace detail

namespace {

using detail::CollocationArrays;

struct NewtonReport {
  bool ok = false;
  int iterations = 0;
};

// One mesh's worth of collocation state: node vector X plus the assembled
// arrays, with Newton and residual estimation on top.
struct MeshSolve {
  const BvpProblem& pr;
  const BvpOptions& opts;
  std::vector<double> nodes;
  int M = 0, d = 0;
  std::vector<double> X;
  std::vector<double> node_f, node_J, mid_x, mid_f, phi, blockB, blockC;
  std::vector<double> bc_res;
  std::vector<double> res_est;

  MeshSolve(const BvpProblem& p, const BvpOptions& o, std::vector<double> nds)
      : pr(p), opts(o), nodes(std::move(nds)) {
    M = static_cast<int>(nodes.size()) - 1;
    d = pr.dim;
    X.assign(static_cast<size_t>(M + 1) * d, 0.0);
    node_f.assign(static_cast<size_t>(M + 1) * d, 0.0);
    node_J.assign(static_cast<size_t>(M + 1) * d * d, 0.0);
    mid_x.assign(static_cast<size_t>(M) * d, 0.0);
    mid_f.assign(static_cast<size_t>(M) * d, 0.0);
    phi.assign(static_cast<size_t>(M) * d, 0.0);
    blockB.assign(static_cast<size_t>(M) * d * d, 0.0);
    blockC.assign(static_cast<size_t>(M) * d * d, 0.0);
    bc_res.assign(d, 0.0);
    res_est.assign(M, 0.0);
  }

  CollocationArrays arrays(bool want_jac) {
    CollocationArrays w;
    w.M = M;
    w.d = d;
    w.want_jacobians = want_jac;
    w.nodes = nodes.data();
    w.X = X.data();
    w.node_f = node_f.data();
    w.node_J = node_J.data();
    w.mid_x = mid_x.data();
    w.mid_f = mid_f.data();
    w.phi = phi.data();
    w.blockB = blockB.data();
    w.blockC = blockC.data();
    return w;
  }

  void assemble(bool want_jac) {
    auto w = arrays(want_jac);
    detail::assemble_collocation_parallel(pr, w);
    pr.bc(X.data(), X.data() + static_cast<size_t>(M) * d, bc_res.data());
  }

  double residual_inf() const {
    double m = 0.0;
    for (double v : bc_res) m = std::max(m, std::abs(v));
    for (double v : phi) m = std::max(m, std::abs(v));
    return m;
  }

  double residual_two() const {
    double s = 0.0;
    for (double v : bc_res) s += v * v;
    for (double v : phi) s += v * v;
    return std::sqrt(s);
  }

  double state_scale() const {
    double m = 0.0;
    for (double v : X) m = std::max(m, std::abs(v));
    return 1.0 + m;
  }

  // Full residual vector in the row layout used by the Jacobian:
  // bc rows first, then the interval closures.
  void gather_residual(Eigen::VectorXd* R) const {
    R->resize(static_cast<Eigen::Index>(M + 1) * d);
    for (int c = 0; c < d; ++c) (*R)[c] = bc_res[c];
    for (size_t k = 0; k < phi.size(); ++k)
      (*R)[static_cast<Eigen::Index>(d + k)] = phi[k];
  }

  void bc_jacobian(std::vector<double>* Ja, std::vector<double>* Jb) {
    Ja->assign(static_cast<size_t>(d) * d, 0.0);
    Jb->assign(static_cast<size_t>(d) * d, 0.0);
    const double* xa = X.data();
    const double* xb = X.data() + static_cast<size_t>(M) * d;
    if (pr.bc_jac) {
      pr.bc_jac(xa, xb, Ja->data(), Jb->data());
      return;
    }
    std::vector<double> xs(xa, xa + d), rp(d), rm(d);
    for (int j = 0; j < d; ++j) {
      const double delta = 6e-6 * (1.0 + std::abs(xa[j]));
      xs[j] = xa[j] + delta;
      pr.bc(xs.data(), xb, rp.data());
      xs[j] = xa[j] - delta;
      pr.bc(xs.data(), xb, rm.data());
      xs[j] = xa[j];
      for (int i = 0; i < d; ++i)
        (*Ja)[static_cast<size_t>(i) * d + j] = (rp[i] - rm[i]) / (2 * delta);
    }
    std::vector<double> ys(xb, xb + d);
    for (int j = 0; j < d; ++j) {
      const double delta = 6e-6 * (1.0 + std::abs(xb[j]));
      ys[j] = xb[j] + delta;
      pr.bc(xa, ys.data(), rp.data());
      ys[j] = xb[j] - delta;
      pr.bc(xa, ys.data(), rm.data());
      ys[j] = xb[j];
      for (int i = 0; i < d; ++i)
        (*Jb)[static_cast<size_t>(i) * d + j] = (rp[i] - rm[i]) / (2 * delta);
    }
  }

  NewtonReport newton() {
    NewtonReport rep;
    Eigen::SparseMatrix<double> J(static_cast<Eigen::Index>(M + 1) * d,
                                  static_cast<Eigen::Index>(M + 1) * d);
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    std::vector<Eigen::Triplet<double>> trip;
    std::vector<double> Ja, Jb;
    Eigen::VectorXd R;

    assemble(false);
    double r2 = residual_two();
    for (int it = 0; it < opts.max_newton; ++it) {
      const double scale = state_scale();
      if (residual_inf() <= 1e-11 * scale) {
        rep.ok = true;
        rep.iterations = it;
        return rep;
      }
      assemble(true);
      bc_jacobian(&Ja, &Jb);
      gather_residual(&R);
      trip.clear();
      trip.reserve(static_cast<size_t>(M + 1) * d * d * 2);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          if (Ja[static_cast<size_t>(r) * d + c] != 0.0)
            trip.emplace_back(r, c, Ja[static_cast<size_t>(r) * d + c]);
          if (Jb[static_cast<size_t>(r) * d + c] != 0.0)
            trip.emplace_back(r, M * d + c, Jb[static_cast<size_t>(r) * d + c]);
        }
      }
      for (int i = 0; i < M; ++i) {
        const size_t off = static_cast<size_t>(i) * d * d;
        for (int r = 0; r < d; ++r) {
          for (int c = 0; c < d; ++c) {
            trip.emplace_back(d + i * d + r, i * d + c, blockB[off + r * d + c]);
            trip.emplace_back(d + i * d + r, (i + 1) * d + c,
                              blockC[off + r * d + c]);
          }
        }
      }
      J.setFromTriplets(trip.begin(), trip.end());
      lu.compute(J);
      if (lu.info() != Eigen::Success) {
        rep.iterations = it;
        return rep;
      }
      Eigen::VectorXd delta = lu.solve(R);
      if (lu.info() != Eigen::Success || !delta.allFinite()) {
        rep.iterations = it;
        return rep;
      }

      const double dinf = delta.cwiseAbs().maxCoeff();
      std::vector<double> Xold = X;
      double alpha = 1.0;
      bool improved = false;
      for (int bt = 0; bt < 9; ++bt) {
        for (size_t k = 0; k < X.size(); ++k)
          X[k] = Xold[k] - alpha * delta[static_cast<Eigen::Index>(k)];
        assemble(false);
        const double r2_new = residual_two();
        if (r2_new <= (1.0 - 1e-4 * alpha) * r2 || !std::isfinite(r2)) {
          r2 = r2_new;
          improved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!improved) {
        X = Xold;
        assemble(false);
        // Accept a stall only if the residual is already small.
        rep.ok = residual_inf() <= 1e-7 * scale;
        rep.iterations = it + 1;
        return rep;
      }
      if (dinf <= 1e-13 * scale && residual_inf() <= 1e-8 * scale) {
        rep.ok = true;
        rep.iterations = it + 1;
        return rep;
      }
    }
    rep.ok = residual_inf() <= 1e-9 * state_scale();
    rep.iterations = opts.max_newton;
    return rep;
  }

  double estimate() {
    auto w = arrays(false);
    detail::estimate_residuals_parallel(pr, w, res_est.data());
    double m = 0.0;
    for (double v : res_est) m = std::max(m, v);
    return m;
  }
};

}  // namespace

struct BvpSolutionAccess {
  static void fill(const MeshSolve& ms, bool ok, double resnorm, int iters,
                   BvpSolution* out) {
    out->dim_ = ms.d;
    out->converged_ = ok;
    out->residual_norm_ = resnorm;
    out->newton_iterations_ = iters;
    out->nodes_ = ms.nodes;
    out->states_ = ms.X;
    out->derivs_ = ms.node_f;
    out->mid_states_ = ms.mid_x;
    out->mid_derivs_ = ms.mid_f;
  }
  static void set_converged(BvpSolution* out, bool ok) { out->converged_ = ok; }
};

// ---- BvpSolution ----

int BvpSolution::find_interval(double y) const {
  const auto& n = nodes_;
  if (y <= n.front()) return 0;
  if (y >= n.back()) return static_cast<int>(n.size()) - 2;
  auto it = std::upper_bound(n.begin(), n.end(), y);
  return static_cast<int>(it - n.begin()) - 1;
}

void BvpSolution::eval(double y, double* state) const {
  const int i = find_interval(y);
  // Nodes reproduce the stored states exactly.
  if (y == nodes_[i]) {
    for (int c = 0; c < dim_; ++c)
      state[c] = states_[static_cast<size_t>(i) * dim_ + c];
    return;
  }
  if (y == nodes_[i + 1]) {
    for (int c = 0; c < dim_; ++c)
      state[c] = states_[(static_cast<size_t>(i) + 1) * dim_ + c];
    return;
  }
  const double h = nodes_[i + 1] - nodes_[i];
  const double t = (y - nodes_[i]) / h;
  const double A0 = t - 1.5 * t * t + (2.0 / 3.0) * t * t * t;
  const double A1 = 2.0 * t * t - (4.0 / 3.0) * t * t * t;
  const double A2 = -0.5 * t * t + (2.0 / 3.0) * t * t * t;
  const size_t id = static_cast<size_t>(i) * dim_;
  for (int c = 0; c < dim_; ++c) {
    state[c] = states_[id + c] +
               h * (A0 * derivs_[id + c] + A1 * mid_derivs_[id + c] +
                    A2 * derivs_[id + dim_ + c]);
  }
}

void BvpSolution::eval_derivative(double y, double* deriv) const {
  const int i = find_interval(y);
  const double h = nodes_[i + 1] - nodes_[i];
  const double t = (y - nodes_[i]) / h;
  const double L0 = 1.0 - 3.0 * t + 2.0 * t * t;
  const double L1 = 4.0 * t - 4.0 * t * t;
  const double L2 = -t + 2.0 * t * t;
  const size_t id = static_cast<size_t>(i) * dim_;
  for (int c = 0; c < dim_; ++c) {
    deriv[c] = L0 * derivs_[id + c] + L1 * mid_derivs_[id + c] +
               L2 * derivs_[id + dim_ + c];
  }
}

double BvpSolution::max_abs(int comp) const {
  double m = 0.0;
  const size_t nn = nodes_.size();
  for (size_t i = 0; i < nn; ++i)
    m = std::max(m, std::abs(states_[i * dim_ + comp]));
  for (size_t i = 0; i + 1 < nn; ++i)
    m = std::max(m, std::abs(mid_states_[i * dim_ + comp]));
  return m;
}

// ---- guesses ----

std::vector<double> uniform_mesh(double a, double b, int intervals) {
  if (!(b > a)) fail_invalid("mesh requires b > a");
  if (intervals < 8) intervals = 8;
  std::vector<double> nodes(intervals + 1);
  for (int i = 0; i <= intervals; ++i)
    nodes[i] = a + (b - a) * (static_cast<double>(i) / intervals);
  nodes.back() = b;
  return nodes;
}

BvpGuess constant_guess(double a, double b, int intervals,
                        std::vector<double> state) {
  BvpGuess g;
  g.nodes = uniform_mesh(a, b, intervals);
  g.eval = [s = std::move(state)](double, double* out) {
    std::copy(s.begin(), s.end(), out);
  };
  return g;
}

BvpGuess guess_from_solution(BvpSolution sol) {
  BvpGuess g;
  g.nodes = sol.nodes();
  g.eval = [s = std::move(sol)](double y, double* out) { s.eval(y, out); };
  return g;
}

// ---- driver ----

namespace {

std::vector<double> refined_mesh(const std::vector<double>& nodes,
                                 const std::vector<double>& res, double tol) {
  std::vector<double> out;
  out.reserve(nodes.size() * 2);
  const int M = static_cast<int>(nodes.size()) - 1;
  for (int i = 0; i < M; ++i) {
    out.push_back(nodes[i]);
    if (res[i] > tol) {
      const int pieces = res[i] > 100.0 * tol ? 3 : 2;
      for (int k = 1; k < pieces; ++k)
        out.push_back(nodes[i] +
                      (nodes[i + 1] - nodes[i]) * k / static_cast<double>(pieces));
    }
  }
  out.push_back(nodes.back());
  return out;
}

std::vector<double> coarsened_mesh(const std::vector<double>& nodes,
                                   const std::vector<double>& res,
                                   double tol) {
  const int M = static_cast<int>(nodes.size()) - 1;
  std::vector<double> out;
  out.reserve(nodes.size());
  out.push_back(nodes.front());
  int i = 0;
  int remaining = M;
  while (i < M) {
    if (i + 1 < M && remaining > 8 && res[i] < 0.01 * tol &&
        res[i + 1] < 0.01 * tol) {
      out.push_back(nodes[i + 2]);  // drop the shared node
      i += 2;
      --remaining;
    } else {
      out.push_back(nodes[i + 1]);
      ++i;
    }
  }
  return out;
}

}  // namespace

BvpSolution solve_bvp(const BvpProblem& problem, const BvpGuess& guess,
                      const BvpOptions& opts) {
  if (problem.dim < 1 || problem.dim > 8)
    fail_invalid("bvp dimension must be in [1, 8]");
  if (!problem.rhs || !problem.bc) fail_invalid("bvp needs rhs and bc");
  if (!(problem.b > problem.a)) fail_invalid("bvp requires b > a");
  if (!guess.eval) fail_invalid("bvp guess needs an eval callback");
  if (guess.nodes.size() < 9) fail_invalid("bvp mesh needs at least 8 intervals");
  for (size_t i = 0; i + 1 < guess.nodes.size(); ++i)
    if (!(guess.nodes[i] < guess.nodes[i + 1]))
      fail_invalid("bvp mesh nodes must be strictly increasing");
  if (guess.nodes.front() != problem.a || guess.nodes.back() != problem.b)
    fail_invalid("bvp mesh must span [a, b]");
  if (!(opts.tol > 0.0)) fail_invalid("bvp tolerance must be positive");

  BvpSolution out;
  std::vector<double> nodes = guess.nodes;
  bool have_warm = false;
  BvpSolution warm;

  for (int pass = 0; pass < opts.max_mesh_passes; ++pass) {
    MeshSolve ms(problem, opts, nodes);
    for (int i = 0; i <= ms.M; ++i) {
      if (have_warm)
        warm.eval(nodes[i], ms.X.data() + static_cast<size_t>(i) * ms.d);
      else
        guess.eval(nodes[i], ms.X.data() + static_cast<size_t>(i) * ms.d);
    }
    NewtonReport rep = ms.newton();
    ms.assemble(false);
    if (!rep.ok) {
      BvpSolutionAccess::fill(ms, false, std::numeric_limits<double>::infinity(),
                    rep.iterations, &out);
      return out;
    }
    const double resnorm = ms.estimate();
    BvpSolutionAccess::fill(ms, true, resnorm, rep.iterations, &out);
    if (!opts.adapt || resnorm <= opts.tol) {
      if (opts.adapt && opts.coarsen && resnorm <= opts.tol) {
        // One economy pass: merge overresolved pairs, keep the result only
        // if it still meets the tolerance.
        std::vector<double> coarse = coarsened_mesh(nodes, ms.res_est, opts.tol);
        if (coarse.size() < nodes.size() && coarse.size() >= 9) {
          MeshSolve cs(problem, opts, coarse);
          for (int i = 0; i <= cs.M; ++i)
            out.eval(coarse[i], cs.X.data() + static_cast<size_t>(i) * cs.d);
          NewtonReport crep = cs.newton();
          if (crep.ok) {
            cs.assemble(false);
            const double cres = cs.estimate();
            if (cres <= opts.tol)
              BvpSolutionAccess::fill(cs, true, cres, crep.iterations, &out);
          }
        }
      }
      return out;
    }
    std::vector<double> next = refined_mesh(nodes, ms.res_est, opts.tol);
    if (static_cast<int>(next.size()) - 1 > opts.max_nodes) {
      BvpSolutionAccess::set_converged(&out, false);
      return out;
    }
    if (next.size() == nodes.size()) return out;  // nothing refined
    warm = out;
    have_warm = true;
    nodes = std::move(next);
  }
  BvpSolutionAccess::set_converged(&out, out.residual_norm() <= opts.tol);
  return out;
}

}  // namespace vss
