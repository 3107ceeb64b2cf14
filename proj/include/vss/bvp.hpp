#pragma once

#include <functional>
#include <vector>

namespace vss {

// Two-point boundary value problem x'(y) = f(y, x) on [a, b] with dim
// boundary residuals bc(x(a), x(b)) = 0. Jacobian callbacks are optional;
// central finite differences are used when they are absent.
struct BvpProblem {
  int dim = 0;
  double a = 0.0;
  double b = 0.0;
  std::function<void(double y, const double* x, double* dxdy)> rhs;
  std::function<void(const double* xa, const double* xb, double* res)> bc;
  // J is row-major dim x dim, J[i*dim+j] = d rhs_i / d x_j.
  std::function<void(double y, const double* x, double* J)> rhs_jac;
  // Ja, Jb row-major dim x dim: d bc_i / d x(a)_j and d bc_i / d x(b)_j.
  std::function<void(const double* xa, const double* xb, double* Ja, double* Jb)>
      bc_jac;
};

struct BvpOptions {
  double tol = 1e-6;   // bound for the scaled collocation residual per interval
  int max_nodes = 40000;
  int max_newton = 60;
  int max_mesh_passes = 16;
  bool adapt = true;     // refine the mesh where the residual estimate is large
  bool coarsen = false;  // merge intervals the estimator says are overresolved
};

// Piecewise collocation solution. Between nodes the state is evaluated from
// the local polynomial whose derivative interpolates the right-hand side at
// the interval ends and midpoint; at a node the stored state is returned
// unchanged.
class BvpSolution {
 public:
  BvpSolution() = default;

  bool converged() const { return converged_; }
  double residual_norm() const { return residual_norm_; }
  int newton_iterations() const { return newton_iterations_; }
  int dim() const { return dim_; }
  int intervals() const { return static_cast<int>(nodes_.size()) - 1; }
  const std::vector<double>& nodes() const { return nodes_; }

  double state(int node, int comp) const {
    return states_[static_cast<size_t>(node) * dim_ + comp];
  }
  void eval(double y, double* state) const;
  void eval_derivative(double y, double* deriv) const;
  double max_abs(int comp) const;  // over nodes and midpoints

 private:
  friend struct BvpSolutionAccess;
  int dim_ = 0;
  bool converged_ = false;
  double residual_norm_ = 0.0;
  int newton_iterations_ = 0;
  std::vector<double> nodes_;       // M+1 ascending
  std::vector<double> states_;      // (M+1) x dim
  std::vector<double> derivs_;      // rhs at the nodes
  std::vector<double> mid_states_;  // M x dim, collocation midpoint states
  std::vector<double> mid_derivs_;  // rhs at the midpoints

  int find_interval(double y) const;
};

// Initial iterate: a mesh (at least 8 intervals) plus a state sampled on it.
struct BvpGuess {
  std::vector<double> nodes;
  std::function<void(double y, double* state)> eval;
};

BvpGuess constant_guess(double a, double b, int intervals,
                        std::vector<double> state);
BvpGuess guess_from_solution(BvpSolution sol);
std::vector<double> uniform_mesh(double a, double b, int intervals);

// Damped-Newton collocation solve with residual-driven mesh adaptation.
// Newton stalls and mesh-budget exhaustion are reported through
// BvpSolution::converged(), not thrown; malformed input throws
// Error(invalid_params).
BvpSolution solve_bvp(const BvpProblem& problem, const BvpGuess& guess,
                      const BvpOptions& opts = {});

}  // namespace vss
