#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symkdv/field.hpp"
#include "symkdv/lie.hpp"
#include "symkdv/reductions.hpp"
#include "symkdv/solver.hpp"
#include "symkdv/spectral.hpp"

namespace py = pybind11;
using namespace symkdv;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lie symmetries and Chebyshev collocation for a cylindrical KdV equation";

  // ---------------------------------------------------------------- spectral
  py::class_<ChebyshevGrid>(m, "ChebyshevGrid")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &ChebyshevGrid::n)
      .def_property_readonly("size", &ChebyshevGrid::size)
      .def_property_readonly("nodes", &ChebyshevGrid::nodes)
      .def("node", &ChebyshevGrid::node, py::arg("j"));

  m.def("cgl_nodes", &cgl_nodes, py::arg("n"));

  py::class_<NodeValues>(m, "NodeValues")
      .def(py::init<ChebyshevGrid, Eigen::VectorXd>(), py::arg("grid"), py::arg("values"))
      .def_readonly("grid", &NodeValues::grid)
      .def_readonly("values", &NodeValues::values);

  py::class_<DiffMatrix>(m, "DiffMatrix")
      .def_readonly("order", &DiffMatrix::order)
      .def_readonly("n", &DiffMatrix::n)
      .def_readonly("entries", &DiffMatrix::entries);

  m.def("diff_matrix", &diff_matrix, py::arg("grid"), py::arg("negative_sum_diagonal") = true);
  m.def("diff_matrix_power", &diff_matrix_power, py::arg("d"), py::arg("k"));
  m.def("interpolate", &interpolate, py::arg("vals"), py::arg("x"));

  // --------------------------------------------------------------------- lie
  py::class_<Rational>(m, "Rational")
      .def(py::init<long long, long long>(), py::arg("num"), py::arg("den"))
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("value", &Rational::value)
      .def("is_zero", &Rational::is_zero);

  py::class_<StructureConstants>(m, "StructureConstants")
      .def("c", &StructureConstants::c, py::arg("i"), py::arg("j"), py::arg("k"))
      .def("antisymmetric", &StructureConstants::antisymmetric)
      .def("jacobi_identity_exact", &StructureConstants::jacobi_identity_exact);

  m.def("structure_constants", &structure_constants, py::return_value_policy::reference);
  m.def("commutator", &commutator, py::arg("x"), py::arg("y"));

  py::class_<AdjointMatrix>(m, "AdjointMatrix")
      .def_readonly("generator", &AdjointMatrix::generator)
      .def_readonly("eps", &AdjointMatrix::eps)
      .def_readonly("entries", &AdjointMatrix::entries);

  m.def("adjoint_closed_form", &adjoint_closed_form, py::arg("i"), py::arg("eps"));
  m.def("adjoint_lie_series", &adjoint_lie_series, py::arg("i"), py::arg("j"), py::arg("s"),
        py::arg("terms"));

  py::class_<OptimalReduction>(m, "OptimalReduction")
      .def_readonly("input", &OptimalReduction::input)
      .def_readonly("representative", &OptimalReduction::representative)
      .def_readonly("chain", &OptimalReduction::chain)
      .def_readonly("scale", &OptimalReduction::scale)
      .def_readonly("case_index", &OptimalReduction::case_index);

  m.def("reduce_to_optimal", &reduce_to_optimal, py::arg("x"), py::arg("tol") = 1e-12);

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init([](double x, double t, double u) { return Point{x, t, u}; }), py::arg("x"),
           py::arg("t"), py::arg("u"))
      .def_readwrite("x", &Point::x)
      .def_readwrite("t", &Point::t)
      .def_readwrite("u", &Point::u);

  m.def("flow", &flow, py::arg("i"), py::arg("eps"), py::arg("p"));

  // ------------------------------------------------------------------ solver
  py::class_<NewtonConfig>(m, "NewtonConfig")
      .def(py::init<>())
      .def_readwrite("max_iters", &NewtonConfig::max_iters)
      .def_readwrite("abs_tol", &NewtonConfig::abs_tol)
      .def_readwrite("fd_step", &NewtonConfig::fd_step)
      .def_readwrite("backtracking", &NewtonConfig::backtracking)
      .def_readwrite("max_backtracks", &NewtonConfig::max_backtracks)
      .def_readwrite("positivity_guard", &NewtonConfig::positivity_guard);

  py::class_<NewtonReport>(m, "NewtonReport")
      .def_readonly("solution", &NewtonReport::solution)
      .def_readonly("iterations", &NewtonReport::iterations)
      .def_readonly("final_residual_norm", &NewtonReport::final_residual_norm)
      .def_readonly("converged", &NewtonReport::converged)
      .def_readonly("singular_jacobian", &NewtonReport::singular_jacobian)
      .def_readonly("guard_activations", &NewtonReport::guard_activations)
      .def_readonly("step_history", &NewtonReport::step_history);

  m.def("fd_jacobian", &fd_jacobian, py::arg("f"), py::arg("x"), py::arg("fx"), py::arg("fd_step"));
  m.def("newton_solve", &newton_solve, py::arg("f"), py::arg("x0"),
        py::arg("cfg") = NewtonConfig{});

  // -------------------------------------------------------------- reductions
  py::enum_<Variant>(m, "Variant")
      .value("PrintedDiscrete", Variant::PrintedDiscrete)
      .value("PrintedContinuous", Variant::PrintedContinuous)
      .value("Derived", Variant::Derived);

  m.def("variant_from_string", &variant_from_string, py::arg("name"));
  m.def("variant_to_string", [](Variant v) { return to_string(v); }, py::arg("v"));

  py::enum_<ProblemKind>(m, "ProblemKind")
      .value("Problem1", ProblemKind::Problem1)
      .value("Problem2", ProblemKind::Problem2);

  py::class_<ReducedProblem>(m, "ReducedProblem")
      .def(py::init<>())
      .def(py::init([](ProblemKind kind, int n, double t_param, Variant variant) {
             return ReducedProblem{kind, n, t_param, variant};
           }),
           py::arg("kind"), py::arg("n") = 25, py::arg("t_param") = 1.0,
           py::arg("variant") = Variant::PrintedDiscrete)
      .def_readwrite("kind", &ReducedProblem::kind)
      .def_readwrite("n", &ReducedProblem::n)
      .def_readwrite("t_param", &ReducedProblem::t_param)
      .def_readwrite("variant", &ReducedProblem::variant);

  py::class_<CollocationSolution>(m, "CollocationSolution")
      .def_readonly("problem", &CollocationSolution::problem)
      .def_readonly("grid", &CollocationSolution::grid)
      .def_readonly("values", &CollocationSolution::values)
      .def_readonly("residuals", &CollocationSolution::residuals)
      .def_readonly("newton", &CollocationSolution::newton)
      .def_readonly("boundary_derivative", &CollocationSolution::boundary_derivative);

  m.def("problem1_residual", &problem1_residual, py::arg("g"), py::arg("d1"), py::arg("d3"),
        py::arg("variant") = Variant::PrintedDiscrete);
  m.def("problem2_residual", &problem2_residual, py::arg("f"), py::arg("t"), py::arg("d1"),
        py::arg("d2"), py::arg("d3"), py::arg("variant") = Variant::PrintedDiscrete);
  m.def("solve_reduced", &solve_reduced, py::arg("problem"),
        py::arg("cfg") = std::optional<NewtonConfig>{});
  m.def("residual_table_csv", &residual_table_csv, py::arg("sol"));
  m.def("residual_table_json", &residual_table_json, py::arg("sol"));
  m.def("reduced_residual_at", &reduced_residual_at, py::arg("sol"), py::arg("r"));

  // ------------------------------------------------------------------- field
  py::class_<SpaceTimeField>(m, "SpaceTimeField")
      .def_readonly("x_grid", &SpaceTimeField::x_grid)
      .def_readonly("t_values", &SpaceTimeField::t_values)
      .def_readonly("values", &SpaceTimeField::values)
      .def_readonly("provenance", &SpaceTimeField::provenance);

  m.def("reconstruct_problem1", &reconstruct_problem1, py::arg("sol"), py::arg("x_grid"),
        py::arg("t"), py::arg("x_min") = 0.2);
  m.def("reconstruct_problem2", &reconstruct_problem2, py::arg("sol"), py::arg("x_grid"),
        py::arg("t"));
  m.def("merge_time_slices", &merge_time_slices, py::arg("slices"));
  m.def("pde_residual", &pde_residual, py::arg("u"), py::arg("x"), py::arg("t"),
        py::arg("h_x") = 1e-3, py::arg("h_t") = 1e-3);
  m.def("transform_solution", &transform_solution, py::arg("u"), py::arg("chain"));
  m.def("exact_family", &exact_family, py::arg("b"));
  m.def("emit_plot_csv", &emit_plot_csv, py::arg("field"));
  m.def("emit_plot_json", &emit_plot_json, py::arg("field"));
}
