#pragma once

// Assembly kernels behind solve_bvp, exposed so the tests can pin the
// OpenMP path against the serial reference and the benchmark can time both.
// All writes are disjoint per interval, so the parallel variant is required
// to produce bitwise the same arrays as the reference one.

#include "vss/bvp.hpp"

namespace vss::detail {

struct CollocationArrays {
  int M = 0;  // intervals
  int d = 0;  // system dimension
  bool want_jacobians = true;
  const double* nodes = nullptr;  // M+1
  const double* X = nullptr;      // (M+1) x d node states
  double* node_f = nullptr;       // (M+1) x d
  double* node_J = nullptr;       // (M+1) x d x d, row-major per node
  double* mid_x = nullptr;        // M x d
  double* mid_f = nullptr;        // M x d
  double* phi = nullptr;          // M x d interval closure residuals
  double* blockB = nullptr;       // M x d x d, d phi / d x_i
  double* blockC = nullptr;       // M x d x d, d phi / d x_{i+1}
};

void assemble_collocation_reference(const BvpProblem& pr,
                                    const CollocationArrays& w);
void assemble_collocation_parallel(const BvpProblem& pr,
                                   const CollocationArrays& w);

// Scaled interval residuals of the collocation interpolant, sampled off the
// collocation points. res must hold M values.
void estimate_residuals_reference(const BvpProblem& pr,
                                  const CollocationArrays& w, double* res);
void estimate_residuals_parallel(const BvpProblem& pr,
                                 const CollocationArrays& w, double* res);

// rhs Jacobian at one point: analytic when provided, else central differences.
void rhs_jacobian(const BvpProblem& pr, double y, const double* x, double* J,
                  double* scratch);

}  // namespace vss::detail
