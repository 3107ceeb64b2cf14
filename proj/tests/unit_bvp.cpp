#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "vss/bvp.hpp"
#include "vss/bvp_kernels.hpp"
#include "vss/errors.hpp"

using namespace vss;

namespace {

// x'' = -x as a first-order system.
BvpProblem harmonic() {
  BvpProblem pr;
  pr.dim = 2;
  pr.a = 0.0;
  pr.b = M_PI / 2.0;
  pr.rhs = [](double, const double* x, double* dx) {
    dx[0] = x[1];
    dx[1] = -x[0];
  };
  pr.bc = [](const double* xa, const double* xb, double* r) {
    r[0] = xa[0];
    r[1] = xb[0] - 1.0;
  };
  return pr;
}

// x'' = (3/2) x^2 with the decaying branch 4/(1+t)^2 on [0, 4].
BvpProblem decaying_square() {
  BvpProblem pr;
  pr.dim = 2;
  pr.a = 0.0;
  pr.b = 4.0;
  pr.rhs = [](double, const double* x, double* dx) {
    dx[0] = x[1];
    dx[1] = 1.5 * x[0] * x[0];
  };
  pr.rhs_jac = [](double, const double* x, double* J) {
    J[0] = 0.0;
    J[1] = 1.0;
    J[2] = 3.0 * x[0];
    J[3] = 0.0;
  };
  pr.bc = [](const double* xa, const double* xb, double* r) {
    r[0] = xa[0] - 4.0;
    r[1] = xb[0] - 4.0 / 25.0;
  };
  return pr;
}

BvpGuess decaying_guess(int intervals) {
  BvpGuess g;
  g.nodes = uniform_mesh(0.0, 4.0, intervals);
  g.eval = [](double t, double* x) {
    x[0] = 4.0 - t * (4.0 - 4.0 / 25.0) / 4.0;
    x[1] = -1.0;
  };
  return g;
}

double max_node_error_decaying(const BvpSolution& sol) {
  double worst = 0.0;
  for (size_t i = 0; i < sol.nodes().size(); ++i) {
    const double t = sol.nodes()[i];
    const double exact = 4.0 / ((1.0 + t) * (1.0 + t));
    worst = std::max(worst, std::abs(sol.state(static_cast<int>(i), 0) - exact));
  }
  return worst;
}

}  // namespace

TEST_CASE("harmonic oscillator boundary problem hits the closed form") {
  auto pr = harmonic();
  BvpOptions opts;
  opts.tol = 1e-8;
  auto sol = solve_bvp(pr, constant_guess(pr.a, pr.b, 16, {0.5, 0.5}), opts);
  REQUIRE(sol.converged());
  double x[2];
  sol.eval(M_PI / 4.0, x);
  CHECK(x[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
  CHECK(sol.residual_norm() <= 1e-8);
}

TEST_CASE("fourth-order quartic problem is reproduced to roundoff at nodes") {
  // x'''' = 24 with x(0)=x'(0)=x''(0)=0, x(1)=1 has the solution t^4; the
  // closure rule integrates its cubic derivative components exactly.
  BvpProblem pr;
  pr.dim = 4;
  pr.a = 0.0;
  pr.b = 1.0;
  pr.rhs = [](double, const double* x, double* dx) {
    dx[0] = x[1];
    dx[1] = x[2];
    dx[2] = x[3];
    dx[3] = 24.0;
  };
  pr.rhs_jac = [](double, const double*, double* J) {
    std::memset(J, 0, sizeof(double) * 16);
    J[0 * 4 + 1] = 1.0;
    J[1 * 4 + 2] = 1.0;
    J[2 * 4 + 3] = 1.0;
  };
  pr.bc = [](const double* xa, const double* xb, double* r) {
    r[0] = xa[0];
    r[1] = xa[1];
    r[2] = xa[2];
    r[3] = xb[0] - 1.0;
  };
  BvpOptions opts;
  opts.adapt = false;
  auto sol = solve_bvp(pr, constant_guess(0.0, 1.0, 16, {0, 0, 0, 0}), opts);
  REQUIRE(sol.converged());
  for (size_t i = 0; i < sol.nodes().size(); ++i) {
    const double t = sol.nodes()[i];
    CHECK(std::abs(sol.state(static_cast<int>(i), 0) - t * t * t * t) <= 1e-10);
    CHECK(std::abs(sol.state(static_cast<int>(i), 1) - 4 * t * t * t) <= 1e-10);
    CHECK(std::abs(sol.state(static_cast<int>(i), 2) - 12 * t * t) <= 1e-10);
    CHECK(std::abs(sol.state(static_cast<int>(i), 3) - 24 * t) <= 1e-10);
  }
}

TEST_CASE("interpolant evaluated at a node returns the stored state bitwise") {
  auto pr = decaying_square();
  BvpOptions opts;
  opts.tol = 1e-6;
  auto sol = solve_bvp(pr, decaying_guess(16), opts);
  REQUIRE(sol.converged());
  double x[2];
  for (size_t i = 0; i < sol.nodes().size(); ++i) {
    sol.eval(sol.nodes()[i], x);
    CHECK(x[0] == sol.state(static_cast<int>(i), 0));
    CHECK(x[1] == sol.state(static_cast<int>(i), 1));
  }
}

TEST_CASE("halving the mesh cuts the error by at least a factor 12") {
  auto pr = decaying_square();
  BvpOptions opts;
  opts.adapt = false;
  auto coarse = solve_bvp(pr, decaying_guess(10), opts);
  auto fine = solve_bvp(pr, decaying_guess(20), opts);
  REQUIRE(coarse.converged());
  REQUIRE(fine.converged());
  const double ec = max_node_error_decaying(coarse);
  const double ef = max_node_error_decaying(fine);
  CHECK(ec / ef >= 12.0);
}

TEST_CASE("interpolant is fourth order between nodes") {
  auto pr = decaying_square();
  BvpOptions opts;
  opts.adapt = false;
  auto sol = solve_bvp(pr, decaying_guess(40), opts);
  REQUIRE(sol.converged());
  const double h = 0.1;
  double worst = 0.0;
  for (double t = 0.033; t < 4.0; t += 0.0617) {
    double x[2];
    sol.eval(t, x);
    worst = std::max(worst, std::abs(x[0] - 4.0 / ((1.0 + t) * (1.0 + t))));
  }
  CHECK(worst <= 50.0 * h * h * h * h);
}

TEST_CASE("adaptive refinement resolves a sharp boundary layer") {
  // x'' = x / eps has a layer of width sqrt(eps) at the left end.
  const double eps = 1e-4;
  BvpProblem pr;
  pr.dim = 2;
  pr.a = 0.0;
  pr.b = 1.0;
  pr.rhs = [eps](double, const double* x, double* dx) {
    dx[0] = x[1];
    dx[1] = x[0] / eps;
  };
  pr.bc = [](const double* xa, const double* xb, double* r) {
    r[0] = xa[0] - 1.0;
    r[1] = xb[0];
  };
  BvpOptions opts;
  opts.tol = 1e-7;
  auto sol = solve_bvp(pr, constant_guess(0.0, 1.0, 16, {0.5, 0.0}), opts);
  REQUIRE(sol.converged());
  const double rq = 1.0 / std::sqrt(eps);
  double worst = 0.0;
  for (double t : {0.001, 0.005, 0.01, 0.02, 0.05, 0.1, 0.3}) {
    double x[2];
    sol.eval(t, x);
    const double exact = std::sinh((1.0 - t) * rq) / std::sinh(rq);
    worst = std::max(worst, std::abs(x[0] - exact));
  }
  CHECK(worst <= 1e-5);
  // Refinement must have concentrated nodes inside the layer.
  int inside = 0;
  for (double y : sol.nodes())
    if (y < 0.05) ++inside;
  CHECK(inside >= 12);
}

TEST_CASE("solver reports non-convergence instead of throwing") {
  // x' = 1 + x^2 from x(0)=0 blows up at pi/2 < 3, so no solution exists.
  BvpProblem pr;
  pr.dim = 1;
  pr.a = 0.0;
  pr.b = 3.0;
  pr.rhs = [](double, const double* x, double* dx) { dx[0] = 1.0 + x[0] * x[0]; };
  pr.bc = [](const double* xa, const double*, double* r) { r[0] = xa[0]; };
  BvpOptions opts;
  opts.tol = 1e-6;
  opts.max_mesh_passes = 6;
  auto sol = solve_bvp(pr, constant_guess(0.0, 3.0, 16, {0.0}), opts);
  CHECK_FALSE(sol.converged());
}

TEST_CASE("malformed input is rejected") {
  auto pr = harmonic();
  BvpGuess bad;
  bad.nodes = uniform_mesh(pr.a, pr.b, 8);
  CHECK_THROWS_AS(solve_bvp(pr, bad, {}), Error);  // missing eval

  BvpGuess short_mesh;
  short_mesh.nodes = {0.0, 0.5, 1.0};
  short_mesh.eval = [](double, double* x) { x[0] = x[1] = 0.0; };
  CHECK_THROWS_AS(solve_bvp(pr, short_mesh, {}), Error);

  BvpProblem nodim;
  CHECK_THROWS_AS(solve_bvp(nodim, constant_guess(0, 1, 8, {0.0}), {}), Error);
}

TEST_CASE("two identical solves agree bitwise") {
  auto pr = decaying_square();
  BvpOptions opts;
  opts.tol = 1e-8;
  auto s1 = solve_bvp(pr, decaying_guess(16), opts);
  auto s2 = solve_bvp(pr, decaying_guess(16), opts);
  REQUIRE(s1.converged());
  REQUIRE(s1.nodes().size() == s2.nodes().size());
  for (size_t i = 0; i < s1.nodes().size(); ++i) {
    CHECK(s1.nodes()[i] == s2.nodes()[i]);
    CHECK(s1.state(static_cast<int>(i), 0) == s2.state(static_cast<int>(i), 0));
    CHECK(s1.state(static_cast<int>(i), 1) == s2.state(static_cast<int>(i), 1));
  }
}

TEST_CASE("parallel assembly kernels match the serial reference bitwise") {
  auto pr = decaying_square();
  const int M = 1024;
  const int d = pr.dim;
  auto nodes = uniform_mesh(pr.a, pr.b, M);
  std::vector<double> X(static_cast<size_t>(M + 1) * d);
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uni(-1.0, 3.0);
  for (auto& v : X) v = uni(rng);

  auto run = [&](bool parallel) {
    detail::CollocationArrays w;
    std::vector<double> node_f(X.size()), node_J(X.size() * d);
    std::vector<double> mid_x(static_cast<size_t>(M) * d), mid_f(mid_x.size()),
        phi(mid_x.size());
    std::vector<double> B(static_cast<size_t>(M) * d * d), C(B.size());
    std::vector<double> res(M);
    w.M = M;
    w.d = d;
    w.nodes = nodes.data();
    w.X = X.data();
    w.node_f = node_f.data();
    w.node_J = node_J.data();
    w.mid_x = mid_x.data();
    w.mid_f = mid_f.data();
    w.phi = phi.data();
    w.blockB = B.data();
    w.blockC = C.data();
    if (parallel) {
      detail::assemble_collocation_parallel(pr, w);
      detail::estimate_residuals_parallel(pr, w, res.data());
    } else {
      detail::assemble_collocation_reference(pr, w);
      detail::estimate_residuals_reference(pr, w, res.data());
    }
    std::vector<std::vector<double>> all{node_f, node_J, mid_x,
                                         mid_f,  phi,    B,
                                         C,      res};
    return all;
  };

  auto serial = run(false);
  auto parallel = run(true);
  REQUIRE(serial.size() == parallel.size());
  for (size_t k = 0; k < serial.size(); ++k) {
    REQUIRE(serial[k].size() == parallel[k].size());
    for (size_t i = 0; i < serial[k].size(); ++i)
      CHECK(serial[k][i] == parallel[k][i]);
  }
}
