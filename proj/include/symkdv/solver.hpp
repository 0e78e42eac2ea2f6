#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace symkdv {

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct NewtonConfig {
  int max_iters = 50;
  double abs_tol = 1e-12;    // convergence threshold on the residual max-norm
  double fd_step = 1e-7;     // forward-difference Jacobian step scale
  bool backtracking = true;  // halve the step until the residual norm decreases
  int max_backtracks = 20;
  // Optional iterate guard: a trial step failing the predicate is halved like
  // a failed backtracking step (keeps logarithms fed positive arguments).
  std::function<bool(const Eigen::VectorXd&)> positivity_guard;
};

struct NewtonReport {
  Eigen::VectorXd solution;
  int iterations = 0;                // accepted Newton steps
  double final_residual_norm = 0.0;  // max-norm at the returned solution
  bool converged = false;
  bool singular_jacobian = false;    // LU met a (near-)zero pivot; iteration stopped
  int guard_activations = 0;         // trial steps rejected by the guard
  std::vector<double> step_history;  // residual max-norm: initial point, then each accepted step
};

// Forward-difference Jacobian with per-column step fd_step * max(1, |x_j|).
// Throws std::invalid_argument if f is not square at x.
Eigen::MatrixXd fd_jacobian(const ResidualFn& f, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& fx, double fd_step);

// Damped Newton iteration for the square system f(x) = 0.
//
// Each step solves the FD-Jacobian linear system by dense LU with partial
// pivoting and backtracks by halving until the residual max-norm strictly
// decreases (and the guard, if any, passes). A singular Jacobian or a stalled
// line search ends the iteration with converged = false and diagnostics in
// the report; no exception is thrown for these outcomes.
NewtonReport newton_solve(const ResidualFn& f, Eigen::VectorXd x0, const NewtonConfig& cfg = {});

}  // namespace symkdv
