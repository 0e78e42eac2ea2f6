#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symkdv/reductions.hpp"

namespace symkdv {

// Pointwise view of a space-time function u(x, t).
using Sampler = std::function<double(double x, double t)>;

// Sampled u(x, t) on a rectangular grid.
struct SpaceTimeField {
  Eigen::VectorXd x_grid;        // strictly increasing
  std::vector<double> t_values;  // positive
  Eigen::MatrixXd values;        // values(i, k) = u(x_grid[i], t_values[k])
  std::string provenance;
};

// Reconstruct u(x, t) from a Problem 1 solution through the similarity map
// r = x^3/t, u = g(r)/x^2. Every x must satisfy |x| >= x_min (the 1/x^2
// singularity guard) and x^3/t in [-1, 1] (the interpolant's domain); t > 0.
// Violations throw std::domain_error naming the offending x.
SpaceTimeField reconstruct_problem1(const CollocationSolution& sol, const Eigen::VectorXd& x_grid,
                                    double t, double x_min = 0.2);

// Reconstruct u(x, t) from a Problem 2 solution through u = ln f(x) - (ln t)/4.
// Every x must lie in [-1, 1] and the interpolant must be positive there; t > 0.
SpaceTimeField reconstruct_problem2(const CollocationSolution& sol, const Eigen::VectorXd& x_grid,
                                    double t);

// Concatenate single-time fields sampled on the same x grid into one field.
SpaceTimeField merge_time_slices(const std::vector<SpaceTimeField>& slices);

// Finite-difference residual of u_t + 6 u u_x + u_xxx + u/(2t) at (x, t):
// second-order central differences for u_t and u_x, the 5-point second-order
// formula (u(x+2h) - 2u(x+h) + 2u(x-h) - u(x-2h)) / (2h^3) for u_xxx.
// Requires t - h_t > 0.
double pde_residual(const Sampler& u, double x, double t, double h_x = 1e-3, double h_t = 1e-3);

// Push a solution sampler through a chain of symmetry-flow steps. Each
// (i, eps) step maps the graph of u through the point flow of generator i:
//   i = 1: u~(x, t) = e^{-2 eps/3} u(e^{-eps/3} x, e^{-eps} t)
//   i = 2: u~(x, t) = u(x - eps, t)
//   i = 3: u~(x, t) = u(x - eps t^{3/2}, t) + eps sqrt(t)/4
Sampler transform_solution(Sampler u, const std::vector<std::pair<int, double>>& chain);

// The closed-form solution family u(x, t) = x/(12 t) + b/t.
Sampler exact_family(double b);

// CSV document with header "x,t,u", one row per sample at 15 significant
// digits, rows sorted by (t, x).
std::string emit_plot_csv(const SpaceTimeField& field);

// JSON mirror: {"x": [...], "t": [...], "u": [...]} in the same row order.
std::string emit_plot_json(const SpaceTimeField& field);

}  // namespace symkdv
