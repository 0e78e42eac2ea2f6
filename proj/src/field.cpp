#include "symkdv/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "symkdv/format.hpp"

namespace symkdv {

namespace {

void check_x_grid(const Eigen::VectorXd& x_grid, const char* where) {
  if (x_grid.size() == 0) throw std::invalid_argument(std::string(where) + ": empty x grid");
  for (Eigen::Index i = 1; i < x_grid.size(); ++i)
    if (!(x_grid(i) > x_grid(i - 1)))
      throw std::invalid_argument(std::string(where) + ": x grid must be strictly increasing (x[" +
                                  std::to_string(i - 1) + "] = " + fmt_shortest(x_grid(i - 1)) +
                                  ", x[" + std::to_string(i) + "] = " + fmt_shortest(x_grid(i)) + ")");
}

void check_positive_t(double t, const char* where) {
  if (!(t > 0.0))
    throw std::domain_error(std::string(where) + ": t must be positive, got " + fmt_shortest(t));
}

}  // namespace

SpaceTimeField reconstruct_problem1(const CollocationSolution& sol, const Eigen::VectorXd& x_grid,
                                    double t, double x_min) {
  if (sol.problem.kind != ProblemKind::Problem1)
    throw std::invalid_argument("reconstruct_problem1: the solution is not a Problem 1 solve");
  if (!(x_min > 0.0)) throw std::invalid_argument("reconstruct_problem1: x_min must be positive");
  check_positive_t(t, "reconstruct_problem1");
  check_x_grid(x_grid, "reconstruct_problem1");

  const NodeValues g(sol.grid, sol.values);
  SpaceTimeField field;
  field.x_grid = x_grid;
  field.t_values = {t};
  field.values.resize(x_grid.size(), 1);
  for (Eigen::Index i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid(i);
    if (std::abs(x) < x_min)
      throw std::domain_error("reconstruct_problem1: |x| = " + fmt_shortest(std::abs(x)) +
                              " is below the singularity guard x_min = " + fmt_shortest(x_min) +
                              " (u = g/x^2)");
    double r = x * x * x / t;
    if (std::abs(r) > 1.0 + 1e-12)
      throw std::domain_error("reconstruct_problem1: x = " + fmt_shortest(x) +
                              " maps to r = x^3/t = " + fmt_shortest(r) + " outside [-1, 1]");
    r = std::clamp(r, -1.0, 1.0);
    field.values(i, 0) = interpolate(g, r) / (x * x);
  }
  field.provenance = "problem1 n=" + std::to_string(sol.problem.n) +
                     " variant=" + to_string(sol.problem.variant) + " t=" + fmt_shortest(t);
  return field;
}

SpaceTimeField reconstruct_problem2(const CollocationSolution& sol, const Eigen::VectorXd& x_grid,
                                    double t) {
  if (sol.problem.kind != ProblemKind::Problem2)
    throw std::invalid_argument("reconstruct_problem2: the solution is not a Problem 2 solve");
  check_positive_t(t, "reconstruct_problem2");
  check_x_grid(x_grid, "reconstruct_problem2");

  const NodeValues f(sol.grid, sol.values);
  SpaceTimeField field;
  field.x_grid = x_grid;
  field.t_values = {t};
  field.values.resize(x_grid.size(), 1);
  for (Eigen::Index i = 0; i < x_grid.size(); ++i) {
    double x = x_grid(i);
    if (std::abs(x) > 1.0 + 1e-12)
      throw std::domain_error("reconstruct_problem2: x = " + fmt_shortest(x) + " outside [-1, 1]");
    x = std::clamp(x, -1.0, 1.0);
    const double fx = interpolate(f, x);
    if (!(fx > 0.0))
      throw std::domain_error("reconstruct_problem2: interpolant value " + fmt_shortest(fx) +
                              " at x = " + fmt_shortest(x) +
                              " is outside the logarithm's domain (must be > 0)");
    field.values(i, 0) = std::log(fx) - 0.25 * std::log(t);
  }
  field.provenance = "problem2 n=" + std::to_string(sol.problem.n) +
                     " variant=" + to_string(sol.problem.variant) + " t=" + fmt_shortest(t);
  return field;
}

SpaceTimeField merge_time_slices(const std::vector<SpaceTimeField>& slices) {
  if (slices.empty()) throw std::invalid_argument("merge_time_slices: no slices");
  SpaceTimeField out;
  out.x_grid = slices.front().x_grid;
  Eigen::Index cols = 0;
  for (const SpaceTimeField& s : slices) cols += static_cast<Eigen::Index>(s.t_values.size());
  out.values.resize(out.x_grid.size(), cols);
  Eigen::Index col = 0;
  for (const SpaceTimeField& s : slices) {
    if (s.x_grid.size() != out.x_grid.size() || (s.x_grid - out.x_grid).cwiseAbs().maxCoeff() != 0.0)
      throw std::invalid_argument("merge_time_slices: slices must share one x grid");
    for (std::size_t k = 0; k < s.t_values.size(); ++k) {
      out.t_values.push_back(s.t_values[k]);
      out.values.col(col++) = s.values.col(static_cast<Eigen::Index>(k));
    }
    if (!out.provenance.empty()) out.provenance += "; ";
    out.provenance += s.provenance;
  }
  return out;
}

double pde_residual(const Sampler& u, double x, double t, double h_x, double h_t) {
  if (!(h_x > 0.0) || !(h_t > 0.0))
    throw std::invalid_argument("pde_residual: step sizes must be positive");
  if (!(t - h_t > 0.0))
    throw std::domain_error("pde_residual: the time stencil needs t - h_t > 0 (t = " +
                            fmt_shortest(t) + ", h_t = " + fmt_shortest(h_t) + ")");
  const double uc = u(x, t);
  const double ut = (u(x, t + h_t) - u(x, t - h_t)) / (2.0 * h_t);
  const double ux = (u(x + h_x, t) - u(x - h_x, t)) / (2.0 * h_x);
  const double uxxx = (u(x + 2.0 * h_x, t) - 2.0 * u(x + h_x, t) + 2.0 * u(x - h_x, t) -
                       u(x - 2.0 * h_x, t)) /
                      (2.0 * h_x * h_x * h_x);
  return ut + 6.0 * uc * ux + uxxx + uc / (2.0 * t);
}

Sampler transform_solution(Sampler u, const std::vector<std::pair<int, double>>& chain) {
  Sampler current = std::move(u);
  for (const auto& [i, eps] : chain) {
    Sampler inner = std::move(current);
    switch (i) {
      case 1:
        current = [inner, eps](double x, double t) {
          return std::exp(-2.0 * eps / 3.0) * inner(std::exp(-eps / 3.0) * x, std::exp(-eps) * t);
        };
        break;
      case 2:
        current = [inner, eps](double x, double t) { return inner(x - eps, t); };
        break;
      case 3:
        current = [inner, eps](double x, double t) {
          if (t < 0.0)
            throw std::domain_error("transform_solution: generator 3 needs t >= 0, got t = " +
                                    fmt_shortest(t));
          const double rt = std::sqrt(t);
          return inner(x - eps * rt * rt * rt, t) + eps * rt / 4.0;
        };
        break;
      default:
        throw std::invalid_argument("transform_solution: generator index must be 1, 2, or 3, got " +
                                    std::to_string(i));
    }
  }
  return current;
}

Sampler exact_family(double b) {
  return [b](double x, double t) { return x / (12.0 * t) + b / t; };
}

namespace {

// Column visit order sorted by time, then ascending x within each time.
std::vector<std::size_t> time_order(const SpaceTimeField& field) {
  std::vector<std::size_t> order(field.t_values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&field](std::size_t a, std::size_t b) {
    return field.t_values[a] < field.t_values[b];
  });
  return order;
}

void check_field(const SpaceTimeField& field, const char* where) {
  check_x_grid(field.x_grid, where);
  if (field.t_values.empty()) throw std::invalid_argument(std::string(where) + ": no time values");
  if (field.values.rows() != field.x_grid.size() ||
      field.values.cols() != static_cast<Eigen::Index>(field.t_values.size()))
    throw std::invalid_argument(std::string(where) + ": value matrix shape does not match the grids");
}

}  // namespace

std::string emit_plot_csv(const SpaceTimeField& field) {
  check_field(field, "emit_plot_csv");
  std::string out = "x,t,u\n";
  for (std::size_t k : time_order(field))
    for (Eigen::Index i = 0; i < field.x_grid.size(); ++i) {
      out += fmt_general(field.x_grid(i), 15);
      out += ',';
      out += fmt_general(field.t_values[k], 15);
      out += ',';
      out += fmt_general(field.values(i, static_cast<Eigen::Index>(k)), 15);
      out += '\n';
    }
  return out;
}

std::string emit_plot_json(const SpaceTimeField& field) {
  check_field(field, "emit_plot_json");
  nlohmann::json x = nlohmann::json::array();
  nlohmann::json t = nlohmann::json::array();
  nlohmann::json u = nlohmann::json::array();
  for (std::size_t k : time_order(field))
    for (Eigen::Index i = 0; i < field.x_grid.size(); ++i) {
      x.push_back(field.x_grid(i));
      t.push_back(field.t_values[k]);
      u.push_back(field.values(i, static_cast<Eigen::Index>(k)));
    }
  nlohmann::json j;
  j["x"] = std::move(x);
  j["t"] = std::move(t);
  j["u"] = std::move(u);
  return j.dump(2) + "\n";
}

}  // namespace symkdv
