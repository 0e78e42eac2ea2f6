#include "symkdv/reductions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "symkdv/format.hpp"

namespace symkdv {

namespace {

// Scalar operator forms. The assembled residual vectors and the off-node
// evaluator reduced_residual_at share these, so node values agree bitwise.

double p1_operator(double r, double g, double g1, double g3, Variant v) {
  switch (v) {
    case Variant::PrintedDiscrete:
      return 54.0 * r * r * r * g3 + (84.0 * r * g - 2.0 * r * r) * g1 + 24.0 * g * g -
             (48.0 + r) * g;
    case Variant::PrintedContinuous:
      return 54.0 * r * r * r * g3 + (84.0 * r * g - 2.0 * r * r) * g1 - 24.0 * g * g -
             (48.0 + r) * g;
    case Variant::Derived:
      return 54.0 * r * r * r * g3 + (36.0 * r * g + 48.0 * r - 2.0 * r * r) * g1 -
             24.0 * g * g + (r - 48.0) * g;
  }
  throw std::logic_error("p1_operator: unknown variant");
}

double p2_operator(double t, double f, double f1, double f2, double f3, Variant v) {
  const double w = std::log(f) - std::log(t) / 4.0;
  const double common =
      4.0 * t * f * f * f3 - 12.0 * t * f * f1 * f2 + 8.0 * t * f1 * f1 * f1 +
      24.0 * t * f * f * w * f1;
  const double cubic = f * f * f;
  switch (v) {
    case Variant::PrintedDiscrete:
    case Variant::PrintedContinuous:
      return common - 2.0 * cubic * w - cubic;
    case Variant::Derived:
      return common + 2.0 * cubic * w - cubic;
  }
  throw std::logic_error("p2_operator: unknown variant");
}

// Residuals at every node 0..N. Problem 2 values may be nonpositive here
// (Newton trial steps); the logarithm then yields NaN and the caller's line
// search rejects the step. The public operations validate positivity instead.
Eigen::VectorXd p1_full(const Eigen::VectorXd& z, const Eigen::VectorXd& g,
                        const Eigen::MatrixXd& d1, const Eigen::MatrixXd& d3, Variant v) {
  const Eigen::VectorXd g1 = d1 * g;
  const Eigen::VectorXd g3 = d3 * g;
  Eigen::VectorXd out(g.size());
  for (Eigen::Index i = 0; i < g.size(); ++i)
    out(i) = p1_operator(z(i), g(i), g1(i), g3(i), v);
  return out;
}

Eigen::VectorXd p2_full(const Eigen::VectorXd& f, double t, const Eigen::MatrixXd& d1,
                        const Eigen::MatrixXd& d2, const Eigen::MatrixXd& d3, Variant v) {
  const Eigen::VectorXd f1 = d1 * f;
  const Eigen::VectorXd f2 = d2 * f;
  const Eigen::VectorXd f3 = d3 * f;
  Eigen::VectorXd out(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    out(i) = p2_operator(t, f(i), f1(i), f2(i), f3(i), v);
  return out;
}

void check_same_grid(const NodeValues& vals, const DiffMatrix& d, int order, const char* where) {
  if (d.n != vals.grid.n())
    throw std::invalid_argument(std::string(where) + ": matrix is for degree " +
                                std::to_string(d.n) + ", samples are on degree " +
                                std::to_string(vals.grid.n()));
  if (d.order != order)
    throw std::invalid_argument(std::string(where) + ": expected a derivative matrix of order " +
                                std::to_string(order) + ", got order " + std::to_string(d.order));
}

NewtonConfig default_reduced_config() {
  NewtonConfig cfg;
  cfg.abs_tol = 1e-7;  // see solve_reduced's contract: the N = 25 systems floor near 1e-8
  return cfg;
}

}  // namespace

Variant variant_from_string(const std::string& name) {
  if (name == "printed-discrete") return Variant::PrintedDiscrete;
  if (name == "printed-continuous") return Variant::PrintedContinuous;
  if (name == "derived") return Variant::Derived;
  throw std::invalid_argument(
      "variant_from_string: unknown variant \"" + name +
      "\" (expected printed-discrete, printed-continuous, or derived)");
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::PrintedDiscrete: return "printed-discrete";
    case Variant::PrintedContinuous: return "printed-continuous";
    case Variant::Derived: return "derived";
  }
  throw std::logic_error("to_string: unknown variant");
}

Eigen::VectorXd problem1_residual(const NodeValues& g, const DiffMatrix& d1, const DiffMatrix& d3,
                                  Variant variant) {
  check_same_grid(g, d1, 1, "problem1_residual");
  check_same_grid(g, d3, 3, "problem1_residual");
  const Eigen::VectorXd full = p1_full(g.grid.nodes(), g.values, d1.entries, d3.entries, variant);
  return full.segment(1, g.grid.n() - 1);
}

Eigen::VectorXd problem2_residual(const NodeValues& f, double t, const DiffMatrix& d1,
                                  const DiffMatrix& d2, const DiffMatrix& d3, Variant variant) {
  check_same_grid(f, d1, 1, "problem2_residual");
  check_same_grid(f, d2, 2, "problem2_residual");
  check_same_grid(f, d3, 3, "problem2_residual");
  if (!(t > 0.0))
    throw std::domain_error("problem2_residual: t must be positive, got " + fmt_shortest(t));
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if (!(f.values(i) > 0.0))
      throw std::domain_error("problem2_residual: node value " + fmt_shortest(f.values(i)) +
                              " at index " + std::to_string(i) +
                              " is outside the logarithm's domain (must be > 0)");
  const Eigen::VectorXd full = p2_full(f.values, t, d1.entries, d2.entries, d3.entries, variant);
  return full.segment(1, f.grid.n() - 1);
}

CollocationSolution solve_reduced(const ReducedProblem& problem, std::optional<NewtonConfig> cfg_opt) {
  const int n = problem.n;
  if (n < 4)
    throw std::invalid_argument("solve_reduced: resolution must satisfy n >= 4, got " +
                                std::to_string(n));
  const bool p2 = problem.kind == ProblemKind::Problem2;
  if (p2 && !(problem.t_param > 0.0))
    throw std::domain_error("solve_reduced: Problem 2 needs t > 0, got " +
                            fmt_shortest(problem.t_param));

  ChebyshevGrid grid = cgl_nodes(n);
  const DiffMatrix d1 = diff_matrix(grid);
  const DiffMatrix d2 = diff_matrix_power(d1, 2);
  const DiffMatrix d3 = diff_matrix_power(d1, 3);
  const Eigen::VectorXd& z = grid.nodes();
  const int m = n - 1;  // unknowns: values at the interior nodes

  const auto assemble = [n, m](const Eigen::VectorXd& y) {
    Eigen::VectorXd v(n + 1);
    v(0) = 1.0;
    v.segment(1, m) = y;
    v(n) = 1.0;
    return v;
  };
  const auto full_residual = [&](const Eigen::VectorXd& v) {
    return p2 ? p2_full(v, problem.t_param, d1.entries, d2.entries, d3.entries, problem.variant)
              : p1_full(z, v, d1.entries, d3.entries, problem.variant);
  };

  const ResidualFn fn = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
    const Eigen::VectorXd v = assemble(y);
    const Eigen::VectorXd full = full_residual(v);
    Eigen::VectorXd out(m);
    if (p2) {
      // Collocate i = 1..N-2; close the square system with the derivative row.
      out.head(m - 1) = full.segment(1, m - 1);
      out(m - 1) = d1.entries.row(n).dot(v) - 1.0;
    } else {
      // Collocate every interior row i = 1..N-1.
      out = full.segment(1, m);
    }
    return out;
  };

  NewtonConfig cfg = cfg_opt.value_or(default_reduced_config());
  if (p2 && !cfg.positivity_guard)
    cfg.positivity_guard = [](const Eigen::VectorXd& y) { return y.minCoeff() > 0.0; };

  NewtonReport report = newton_solve(fn, Eigen::VectorXd::Ones(m), cfg);

  CollocationSolution sol{problem, grid, Eigen::VectorXd(), Eigen::VectorXd(), NewtonReport{}, 0.0};
  sol.values = assemble(report.solution);
  const Eigen::VectorXd full = full_residual(sol.values);
  sol.residuals = full.segment(1, m).cwiseAbs();
  sol.boundary_derivative = d1.entries.row(n).dot(sol.values);
  sol.newton = std::move(report);
  return sol;
}

std::string residual_table_csv(const CollocationSolution& sol) {
  std::string out;
  for (Eigen::Index i = 0; i < sol.residuals.size(); ++i) {
    const double r = sol.residuals(i);
    out += std::to_string(i + 1);
    out += ',';
    out += (r == 0.0) ? "0" : fmt_scientific(r, 15);
    out += '\n';
  }
  return out;
}

std::string residual_table_json(const CollocationSolution& sol) {
  nlohmann::json j;
  j["problem"] = static_cast<int>(sol.problem.kind);
  j["n"] = sol.problem.n;
  j["variant"] = to_string(sol.problem.variant);
  if (sol.problem.kind == ProblemKind::Problem2) j["t"] = sol.problem.t_param;
  j["converged"] = sol.newton.converged;
  j["iterations"] = sol.newton.iterations;
  j["final_residual_norm"] = sol.newton.final_residual_norm;
  j["singular_jacobian"] = sol.newton.singular_jacobian;
  j["boundary_derivative"] = sol.boundary_derivative;
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < sol.residuals.size(); ++i)
    rows.push_back({{"i", static_cast<int>(i + 1)}, {"residual", sol.residuals(i)}});
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

double reduced_residual_at(const CollocationSolution& sol, double r) {
  if (std::abs(r) > 1.0)
    throw std::domain_error("reduced_residual_at: r = " + fmt_shortest(r) + " outside [-1, 1]");
  const DiffMatrix d1 = diff_matrix(sol.grid);
  const DiffMatrix d2 = diff_matrix_power(d1, 2);
  const DiffMatrix d3 = diff_matrix_power(d1, 3);

  const NodeValues v(sol.grid, sol.values);
  const NodeValues v1(sol.grid, d1.entries * sol.values);
  const NodeValues v2(sol.grid, d2.entries * sol.values);
  const NodeValues v3(sol.grid, d3.entries * sol.values);
  const double p = interpolate(v, r);
  const double p1 = interpolate(v1, r);
  const double p2 = interpolate(v2, r);
  const double p3 = interpolate(v3, r);

  if (sol.problem.kind == ProblemKind::Problem1)
    return p1_operator(r, p, p1, p3, sol.problem.variant);

  if (!(p > 0.0))
    throw std::domain_error("reduced_residual_at: interpolant value " + fmt_shortest(p) +
                            " at r = " + fmt_shortest(r) + " is outside the logarithm's domain");
  return p2_operator(sol.problem.t_param, p, p1, p2, p3, sol.problem.variant);
}

}  // namespace symkdv
