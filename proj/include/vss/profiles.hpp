#pragma once

#include <optional>
#include <vector>

#include "vss/bvp.hpp"
#include "vss/model.hpp"

namespace vss {

enum class ProfileKind { Fbp, Cp, PureTfeFbp, PureTfeCp, Explicit };

// A similarity profile sampled on its solver mesh. f1..f3 are derivatives
// with respect to the physical variable y; f3 is recovered from the flux
// state g through f''' = g / (eps^2+f^2)^{n/2}.
struct Profile {
  ProfileKind kind = ProfileKind::Fbp;
  SimilarityParams params;
  int index = 0;        // sign changes over the whole line (CP families)
  double y0 = 0.0;      // interface position (FBP) or truncation length (CP)
  double support = 0.0; // largest |y| carrying non-threshold values
  double norm_inf = 0.0;
  std::vector<double> y, f, f1, f2, f3;
  std::vector<double> other_roots;  // further interface roots seen in the scan
  BvpSolution solution;      // backing collocation solution
  double domain_scale = 1.0; // physical y = domain_scale * solver node

  double value_at_origin() const { return f.empty() ? 0.0 : f.front(); }
};

namespace detail {
// Building blocks of the similarity right-hand side, shared with the
// continuation systems.
double mobility(double f, double n, double eps);        // (eps^2+f^2)^{n/2}
double mobility_df(double f, double n, double eps);
double absorption(double f, double p);                  // |f|^{p-1} f
double absorption_df(double f, double p);               // p |f|^{p-1}

Profile package_profile(const SimilarityParams& params, ProfileKind kind,
                        const BvpSolution& sol, double domain_scale,
                        double y0_or_L);
}  // namespace detail

// First-order form of the profile equation,
//   states (f, f', f'', g), g = (eps^2+f^2)^{n/2} f''',
//   g' = beta y f' + f/(p-1) - |f|^{p-1} f,
// with analytic Jacobian. Boundary conditions are attached per use.
BvpProblem vss_ode_system(const SimilarityParams& params);

struct FbpOptions {
  double y0_min = 2.0;
  double y0_max = 24.0;
  int scan_points = 12;
  double tol = 1e-3;        // collocation tolerance
  double height_rel = 1e-6; // interface height acceptance, relative to norm
};

// Free-boundary profile: solve on [0, y0] with f'(0) = g(0) = 0 and
// f'(y0) = g(y0) = 0, locating the interface by a scan plus bisection and
// secant polish on the leftover height f(y0). Every sign change of the
// height inside the bracket is polished; the smallest root with a
// nonnegative profile wins and the rest land in Profile::other_roots.
Profile solve_fbp_profile(const SimilarityParams& params,
                          const FbpOptions& opts = {});

// Leftover heights f(y0) along a list of candidate interface positions,
// NaN where the solve fails or collapses to a constant branch. This is the
// function whose root the interface search brackets.
std::vector<double> fbp_interface_heights(const SimilarityParams& params,
                                          const std::vector<double>& y0s,
                                          double tol = 1e-3);

struct CpSeed {
  int index = 0;           // target sign-change count
  double amplitude = 0.0;  // 0 -> plateau scale (p-1)^{-1/(p-1)}
  double width = 0.0;      // 0 -> index-scaled default
};

struct CpOptions {
  double L = 0.0;    // truncation half-length; 0 -> sized from the support
  double tol = 3e-3;
  bool check_truncation = true; // re-solve on a widened domain, compare norms
  int max_reseeds = 7;
};

// Cauchy-problem profile on the truncated half-line with parity conditions at
// the origin (even: f' = g = 0, odd: f = f'' = 0) and decay f = f' = 0 at L.
Profile solve_cp_profile(const SimilarityParams& params, const CpSeed& seed,
                         const CpOptions& opts = {});

// Source-type profile of the absorption-free equation, normalized to unit
// support via the scaling F -> c F(y c^{-n/4}) (n > 0). Without alpha the
// once-integrated third-order form |F|^n F''' = beta y F is solved,
// beta = 1/(4+nN). A supplied alpha selects a member of the general family
// with g' = (1-n alpha)/4 * y F' + alpha F; since that family only exists
// along discrete exponents, alpha is refined as an eigenvalue from the
// supplied seed and the solve fails if it drifts off the seeded branch.
Profile pure_tfe_profile(double n, int N, ProblemKind problem,
                         std::optional<double> alpha = {}, double tol = 1e-8);

// Closed-form source profile for n = 1: F = (a^2-y^2)^2 / (8(N+2)(N+4)).
Profile explicit_pure_tfe_profile(int N, double a = 1.0, int samples = 512);

// Similarity exponent of the second kind: alpha_l and its unit-support
// profile with l sign changes, solved as a boundary eigenvalue problem with
// alpha carried as a constant extra state.
struct SecondKindResult {
  double alpha = 0.0;
  double p_l = 0.0;  // 1 + 1/alpha
  Profile profile;
};
SecondKindResult tfe_second_kind_alpha(double n, int N, int l,
                                       double alpha_guess = 0.0,
                                       double tol = 1e-6);

// Two-term expansion near the interface,
//   f = C0 (y0-y)^2 + C0^{1-n} beta y0 / ((3-2n)(4-2n)(5-2n)) (y0-y)^{5-2n},
// zero beyond y0. Rejects n in {3/2, 2, 5/2} where a denominator vanishes.
std::vector<double> interface_expansion_eval(const SimilarityParams& params,
                                             double C0, double y0,
                                             const std::vector<double>& y);

// Resubstitution of a profile into the unregularized equation, skipping
// samples with |f| below clearance * eps. Scaled by the local term sizes.
struct ResidualReport {
  double max_scaled = 0.0;
  double at_y = 0.0;
  int samples = 0;
};
ResidualReport profile_equation_residual(const Profile& prof,
                                         double clearance = 10.0);

// Sign changes of f over the whole line implied by parity, counting only
// excursions beyond max(10 eps [n != 0], threshold_rel * norm).
int count_sign_changes(const Profile& prof, double threshold_rel = 1e-3);

}  // namespace vss
