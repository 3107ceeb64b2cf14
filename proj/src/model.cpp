#include "vss/model.hpp"

#include <cmath>
#include <string>

#include "vss/errors.hpp"

namespace vss {

void SimilarityParams::validate() const {
  if (!(p > 1.0)) fail_invalid("p must exceed 1, got p=" + std::to_string(p));
  if (!(eps > 0.0))
    fail_invalid("eps must be positive, got eps=" + std::to_string(eps));
  if (N < 1) fail_invalid("N must be a positive integer, got N=" + std::to_string(N));
  if (!std::isfinite(n) || !std::isfinite(p) || !std::isfinite(eps))
    fail_invalid("parameters must be finite");
}

DerivedExponents derive_exponents(const SimilarityParams& params) {
  params.validate();
  DerivedExponents d;
  d.p0 = 1.0 + params.n + 4.0 / params.N;
  d.alpha = 1.0 / (params.p - 1.0);
  // At p = p0 the closed form collapses to 1/(4+nN); return that value
  // directly so the identity holds without rounding residue.
  if (params.p == d.p0)
    d.beta = 1.0 / (4.0 + params.n * params.N);
  else
    d.beta = (params.p - (params.n + 1.0)) / (4.0 * (params.p - 1.0));
  if (params.n != 0.0) d.mu = 3.0 / params.n;
  d.subcritical = params.p > params.n + 1.0 && params.p < d.p0;
  return d;
}

std::vector<double> bifurcation_points_semilinear(int N, double p_min) {
  if (N < 1) fail_invalid("N must be a positive integer");
  if (!(p_min >= 1.0)) fail_invalid("p_min must be at least 1");
  std::vector<double> out;
  for (int l = 0;; ++l) {
    double pl = 1.0 + 4.0 / (N + l);
    if (pl <= p_min) break;
    out.push_back(pl);
  }
  return out;
}

std::vector<double> critical_exponents_from_alpha(
    const std::vector<double>& alphas, double n) {
  std::vector<double> out;
  out.reserve(alphas.size());
  for (double a : alphas) {
    if (!(a > 0.0)) fail_invalid("alpha must be positive");
    if (n > 0.0 && !(a < 1.0 / n))
      fail_invalid("alpha must stay below 1/n for n>0");
    out.push_back(1.0 + 1.0 / a);
  }
  return out;
}

}  // namespace vss
