#pragma once

#include <optional>
#include <string>

#include "symkdv/solver.hpp"
#include "symkdv/spectral.hpp"

namespace symkdv {

// Sign variant of the reduced ODE operators. The two Problem 1 source forms
// disagree in the sign of the quadratic term and Problem 2's logarithmic
// term flips sign under a fresh chain-rule derivation; docs/derivations.md
// works through both. The default is the convention the residual tables use.
enum class Variant {
  PrintedDiscrete,    // the collocated systems' sign convention (default)
  PrintedContinuous,  // the continuous ODEs' convention (-24 g^2 in Problem 1)
  Derived,            // re-derived from the PDE via the similarity invariants
};

// Parse "printed-discrete" | "printed-continuous" | "derived".
Variant variant_from_string(const std::string& name);
std::string to_string(Variant v);

enum class ProblemKind { Problem1 = 1, Problem2 = 2 };

struct ReducedProblem {
  ProblemKind kind = ProblemKind::Problem1;
  int n = 25;                                  // grid degree (>= 4)
  double t_param = 1.0;                        // Problem 2 only; must be > 0
  Variant variant = Variant::PrintedDiscrete;
};

struct CollocationSolution {
  ReducedProblem problem;
  ChebyshevGrid grid;
  Eigen::VectorXd values;     // N+1 node values; boundaries pinned to 1
  Eigen::VectorXd residuals;  // |operator| at interior nodes: residuals(i-1) <-> node i, i = 1..N-1
  NewtonReport newton;
  double boundary_derivative = 0.0;  // solved left-endpoint slope sum_j d_{Nj} v_j
};

// Problem 1 reduced-ODE residual at the interior nodes i = 1..N-1, with the
// similarity variable r as the grid coordinate:
//   printed-discrete:    54 r^3 g''' + (84 r g - 2 r^2) g' + 24 g^2 - (48 + r) g
//   printed-continuous:  the same with -24 g^2
//   derived:             54 r^3 g''' + (36 r g + 48 r - 2 r^2) g' - 24 g^2 + (r - 48) g
Eigen::VectorXd problem1_residual(const NodeValues& g, const DiffMatrix& d1, const DiffMatrix& d3,
                                  Variant variant = Variant::PrintedDiscrete);

// Problem 2 reduced-ODE residual at the interior nodes, with w = ln f - (ln t)/4:
//   printed (both printed variants coincide):
//     4t f^2 f''' - 12t f f' f'' + 8t f'^3 + 24t f^2 w f' - 2 f^3 w - f^3
//   derived: the same with +2 f^3 w
// Throws std::domain_error if any node value is <= 0 (logarithm domain).
Eigen::VectorXd problem2_residual(const NodeValues& f, double t, const DiffMatrix& d1,
                                  const DiffMatrix& d2, const DiffMatrix& d3,
                                  Variant variant = Variant::PrintedDiscrete);

// Solve the reduced boundary-value problem on the CGL grid by damped Newton,
// from the all-ones initial guess, with both endpoint values pinned to 1.
//
// Problem 1 collocates the ODE at every interior node i = 1..N-1 (the solved
// left-endpoint slope is reported as the boundary_derivative diagnostic);
// Problem 2 collocates i = 1..N-2 and closes the system with the derivative
// boundary row sum_j d_{Nj} v_j = 1. docs/derivations.md explains why the two
// problems need different row selections. Residuals are reported at all
// interior nodes either way.
//
// When cfg is not supplied, the Newton defaults are used except abs_tol,
// which is set to 1e-7: the double-precision evaluation floor of these
// collocation systems sits near 1e-8 because the boundary-adjacent rows of
// D^3 carry entries of order 1e6.
CollocationSolution solve_reduced(const ReducedProblem& problem,
                                  std::optional<NewtonConfig> cfg = std::nullopt);

// Residual table as CSV rows "i,<|residual|>" for i = 1..N-1 (no header).
// Values use scientific notation with 15 significant digits; exact zeros
// print as "0".
std::string residual_table_csv(const CollocationSolution& sol);

// JSON mirror of the residual table, with solver metadata.
std::string residual_table_json(const CollocationSolution& sol);

// Evaluate the solved variant's operator at r in [-1, 1] by interpolating the
// nodal value and derivative samples. At a collocation node this reproduces
// the reported residual magnitude's signed value exactly (same arithmetic);
// between nodes it reports the interpolant's ODE defect.
double reduced_residual_at(const CollocationSolution& sol, double r);

}  // namespace symkdv
