#include "symkdv/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace symkdv {

Eigen::MatrixXd fd_jacobian(const ResidualFn& f, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& fx, double fd_step) {
  const Eigen::Index m = x.size();
  if (fx.size() != m)
    throw std::invalid_argument("fd_jacobian: system must be square, got residual dimension " +
                                std::to_string(fx.size()) + " for " + std::to_string(m) +
                                " unknowns");
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd_jacobian: fd_step must be positive");

  Eigen::MatrixXd jac(m, m);
  Eigen::VectorXd xp = x;
  for (Eigen::Index j = 0; j < m; ++j) {
    const double h = fd_step * std::max(1.0, std::abs(x(j)));
    xp(j) = x(j) + h;
    Eigen::VectorXd fp = f(xp);
    if (fp.size() != m)
      throw std::invalid_argument("fd_jacobian: residual dimension changed during differencing");
    jac.col(j) = (fp - fx) / h;
    xp(j) = x(j);
  }
  return jac;
}

NewtonReport newton_solve(const ResidualFn& f, Eigen::VectorXd x0, const NewtonConfig& cfg) {
  if (cfg.max_iters < 1) throw std::invalid_argument("newton_solve: max_iters must be >= 1");
  if (!(cfg.abs_tol > 0.0)) throw std::invalid_argument("newton_solve: abs_tol must be positive");
  if (!(cfg.fd_step > 0.0)) throw std::invalid_argument("newton_solve: fd_step must be positive");
  if (cfg.max_backtracks < 0) throw std::invalid_argument("newton_solve: max_backtracks must be >= 0");
  if (!x0.allFinite()) throw std::invalid_argument("newton_solve: x0 must be finite");

  NewtonReport rep;
  Eigen::VectorXd x = std::move(x0);
  Eigen::VectorXd fx = f(x);
  if (fx.size() != x.size())
    throw std::invalid_argument("newton_solve: system must be square, got residual dimension " +
                                std::to_string(fx.size()) + " for " + std::to_string(x.size()) +
                                " unknowns");
  double norm = fx.lpNorm<Eigen::Infinity>();
  rep.step_history.push_back(norm);

  if (norm <= cfg.abs_tol) {
    rep.converged = true;
  } else {
    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
      Eigen::MatrixXd jac = fd_jacobian(f, x, fx, cfg.fd_step);
      if (!jac.allFinite()) {
        rep.singular_jacobian = true;
        break;
      }
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
      const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
      if (pivots.minCoeff() <= 1e-14 * pivots.maxCoeff()) {
        rep.singular_jacobian = true;
        break;
      }
      const Eigen::VectorXd dx = lu.solve(-fx);
      if (!dx.allFinite()) {
        rep.singular_jacobian = true;
        break;
      }

      double lambda = 1.0;
      bool accepted = false;
      Eigen::VectorXd xt, ft;
      double nt = norm;
      for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
        xt = x + lambda * dx;
        if (cfg.positivity_guard && !cfg.positivity_guard(xt)) {
          ++rep.guard_activations;
          lambda *= 0.5;
          continue;
        }
        ft = f(xt);
        nt = ft.lpNorm<Eigen::Infinity>();
        if (!cfg.backtracking || (std::isfinite(nt) && nt < norm)) {
          accepted = std::isfinite(nt);
          break;
        }
        lambda *= 0.5;
      }
      if (!accepted) break;  // line search stalled: no admissible decreasing step

      x = std::move(xt);
      fx = std::move(ft);
      norm = nt;
      rep.iterations = iter;
      rep.step_history.push_back(norm);
      if (norm <= cfg.abs_tol) {
        rep.converged = true;
        break;
      }
    }
  }

  rep.solution = std::move(x);
  rep.final_residual_norm = norm;
  return rep;
}

}  // namespace symkdv
