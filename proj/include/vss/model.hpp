#pragma once

#include <optional>
#include <vector>

namespace vss {

// Which boundary behaviour the similarity profile is solved with: a free
// boundary (compact support, zero contact angle and zero flux at the
// interface) or the Cauchy problem on the whole line, truncated to a large
// interval with decay conditions.
enum class ProblemKind { FBP, CP };

// Parameters of the similarity problem for
//   u_t = -(|u|^n u_xxx)_x - |u|^{p-1} u.
// Very singular solutions have the form u = t^{-1/(p-1)} f(x / t^beta).
struct SimilarityParams {
  double n = 1.0;   // mobility exponent of the fourth-order term
  double p = 3.0;   // absorption exponent, p > 1
  int N = 1;        // spatial dimension entering the exponent formulas
  ProblemKind problem = ProblemKind::FBP;
  double eps = 1e-3;  // mobility regularization scale, (eps^2+f^2)^{n/2}

  bool fast_diffusion() const { return n < 0.0; }
  void validate() const;  // throws Error(invalid_params) on bad input
};

struct DerivedExponents {
  double beta = 0.0;   // spatial similarity exponent (p-(n+1))/(4(p-1))
  double alpha = 0.0;  // temporal decay exponent 1/(p-1)
  double p0 = 0.0;     // top of the subcritical range, 1+n+4/N
  std::optional<double> mu;  // interface exponent 3/n; absent for n = 0
  bool subcritical = false;  // n+1 < p < p0
};

DerivedExponents derive_exponents(const SimilarityParams& params);

// Bifurcation exponents of the n = 0 problem, p_l = 1 + 4/(N+l), in
// decreasing order down to p_min (exclusive). Empty when p_min >= 1+4/N.
std::vector<double> bifurcation_points_semilinear(int N, double p_min);

// p = 1 + 1/alpha for similarity decay exponents alpha. Each alpha must be
// positive and, for n > 0, below 1/n (so that beta = (1-n*alpha)/4 > 0).
std::vector<double> critical_exponents_from_alpha(
    const std::vector<double>& alphas, double n);

}  // namespace vss
