#pragma once

#include <Eigen/Dense>

namespace symkdv {

// Chebyshev–Gauss–Lobatto collocation grid on [-1, 1].
//
// Nodes are ordered 1 = z_0 > z_1 > ... > z_N = -1 with z_j = cos(j*pi/N).
// The lower half of the node set mirrors the upper half, so z_j = -z_{N-j}
// holds exactly and the endpoints (and the midpoint for even N) carry no
// rounding drift.
class ChebyshevGrid {
 public:
  explicit ChebyshevGrid(int n);

  int n() const { return n_; }           // polynomial degree N
  int size() const { return n_ + 1; }    // node count N + 1
  const Eigen::VectorXd& nodes() const { return nodes_; }
  double node(int j) const { return nodes_(j); }

 private:
  int n_;
  Eigen::VectorXd nodes_;
};

// Construct the CGL grid of degree n >= 1. Throws std::invalid_argument for n < 1.
ChebyshevGrid cgl_nodes(int n);

// Nodal samples z(z_0)..z(z_N) of a function on a ChebyshevGrid.
struct NodeValues {
  ChebyshevGrid grid;
  Eigen::VectorXd values;

  NodeValues(ChebyshevGrid g, Eigen::VectorXd v);  // throws on length mismatch
};

// Dense spectral differentiation matrix d^(k) on a degree-n grid.
struct DiffMatrix {
  int order = 1;            // derivative order k
  int n = 0;                // grid degree
  Eigen::MatrixXd entries;  // (n+1) x (n+1)
};

// First-order differentiation matrix of the grid.
//
// Off-diagonal entries are d_ij = (c_i/c_j)(-1)^{i+j} / (z_i - z_j) with
// c_0 = c_N = 2 and c_j = 1 otherwise. With negative_sum_diagonal (default)
// each diagonal entry is the negative sum of its row's off-diagonal entries,
// which makes D annihilate constants to rounding; with the flag off the
// textbook diagonal is used verbatim: d_00 = (2N^2+1)/6 = -d_NN and
// d_ii = -z_i / (2(1 - z_i^2)) in the interior.
DiffMatrix diff_matrix(const ChebyshevGrid& grid, bool negative_sum_diagonal = true);

// k-th derivative matrix as the k-th matrix power of a first-order matrix.
// Throws std::invalid_argument for k < 1.
DiffMatrix diff_matrix_power(const DiffMatrix& d, int k);

// Evaluate the degree-N interpolant of the samples at x in [-1, 1] via the
// cardinal-function form
//   L_j(x) = (-1)^{j+1} (1 - x^2) T_N'(x) / (c_j N^2 (x - z_j)),
// with T_N' evaluated by the Chebyshev recurrence. Queries within 1e-14 of a
// node return that node's sample exactly (the formula's singularity there is
// removable). Throws std::domain_error for |x| > 1.
double interpolate(const NodeValues& vals, double x);

}  // namespace symkdv
