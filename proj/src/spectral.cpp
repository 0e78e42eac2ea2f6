#include "symkdv/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symkdv {

ChebyshevGrid::ChebyshevGrid(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("ChebyshevGrid: resolution must satisfy n >= 1, got " +
                                std::to_string(n));
  nodes_.resize(n + 1);
  // Fill cos(j*pi/n) for the upper half and mirror it, so z_j = -z_{n-j} exactly.
  for (int j = 0; j <= n / 2; ++j) {
    const double z = std::cos(std::numbers::pi * j / n);
    nodes_(j) = z;
    nodes_(n - j) = -z;
  }
  nodes_(0) = 1.0;
  nodes_(n) = -1.0;
  if (n % 2 == 0) nodes_(n / 2) = 0.0;
}

ChebyshevGrid cgl_nodes(int n) { return ChebyshevGrid(n); }

NodeValues::NodeValues(ChebyshevGrid g, Eigen::VectorXd v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.size())
    throw std::invalid_argument("NodeValues: expected " + std::to_string(grid.size()) +
                                " samples for a degree-" + std::to_string(grid.n()) +
                                " grid, got " + std::to_string(values.size()));
}

DiffMatrix diff_matrix(const ChebyshevGrid& grid, bool negative_sum_diagonal) {
  const int n = grid.n();
  const Eigen::VectorXd& z = grid.nodes();
  const auto c = [n](int i) { return (i == 0 || i == n) ? 2.0 : 1.0; };

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      d(i, j) = (c(i) / c(j)) * sign / (z(i) - z(j));
    }

  if (negative_sum_diagonal) {
    for (int i = 0; i <= n; ++i) d(i, i) = -d.row(i).sum();
  } else {
    d(0, 0) = (2.0 * n * n + 1.0) / 6.0;
    d(n, n) = -(2.0 * n * n + 1.0) / 6.0;
    for (int i = 1; i < n; ++i) d(i, i) = -z(i) / (2.0 * (1.0 - z(i) * z(i)));
  }
  return DiffMatrix{1, n, std::move(d)};
}

DiffMatrix diff_matrix_power(const DiffMatrix& d, int k) {
  if (k < 1)
    throw std::invalid_argument("diff_matrix_power: order must satisfy k >= 1, got " +
                                std::to_string(k));
  Eigen::MatrixXd acc = d.entries;
  for (int i = 1; i < k; ++i) acc = (acc * d.entries).eval();
  return DiffMatrix{d.order * k, d.n, std::move(acc)};
}

double interpolate(const NodeValues& vals, double x) {
  const int n = vals.grid.n();
  const Eigen::VectorXd& z = vals.grid.nodes();
  const Eigen::VectorXd& v = vals.values;

  if (std::abs(x) > 1.0)
    throw std::domain_error("interpolate: x = " + std::to_string(x) + " outside [-1, 1]");
  for (int j = 0; j <= n; ++j)
    if (std::abs(x - z(j)) <= 1e-14) return v(j);  // removable singularity of the cardinal form

  // T_N'(x) = N * U_{N-1}(x) with U_k the second-kind Chebyshev recurrence.
  double un1 = 1.0;  // U_0
  if (n >= 2) {
    double a = 1.0;        // U_0
    double b = 2.0 * x;    // U_1
    for (int k = 2; k <= n - 1; ++k) {
      const double next = 2.0 * x * b - a;
      a = b;
      b = next;
    }
    un1 = b;
  }
  const double tn_prime = n * un1;
  const double prefactor = (1.0 - x * x) * tn_prime / (static_cast<double>(n) * n);

  double acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double cj = (j == 0 || j == n) ? 2.0 : 1.0;
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}
    acc += sign * prefactor * v(j) / (cj * (x - z(j)));
  }
  return acc;
}

}  // namespace symkdv
