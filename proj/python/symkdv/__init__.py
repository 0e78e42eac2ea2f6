"""Lie symmetries and Chebyshev collocation for a cylindrical KdV equation."""

from symkdv._core import (
    AdjointMatrix,
    ChebyshevGrid,
    CollocationSolution,
    DiffMatrix,
    NewtonConfig,
    NewtonReport,
    NodeValues,
    OptimalReduction,
    Point,
    ProblemKind,
    Rational,
    ReducedProblem,
    SpaceTimeField,
    StructureConstants,
    Variant,
    adjoint_closed_form,
    adjoint_lie_series,
    cgl_nodes,
    commutator,
    diff_matrix,
    diff_matrix_power,
    emit_plot_csv,
    emit_plot_json,
    exact_family,
    fd_jacobian,
    flow,
    interpolate,
    merge_time_slices,
    newton_solve,
    pde_residual,
    problem1_residual,
    problem2_residual,
    reconstruct_problem1,
    reconstruct_problem2,
    reduce_to_optimal,
    reduced_residual_at,
    residual_table_csv,
    residual_table_json,
    solve_reduced,
    structure_constants,
    transform_solution,
    variant_from_string,
    variant_to_string,
)

__all__ = [
    "AdjointMatrix",
    "ChebyshevGrid",
    "CollocationSolution",
    "DiffMatrix",
    "NewtonConfig",
    "NewtonReport",
    "NodeValues",
    "OptimalReduction",
    "Point",
    "ProblemKind",
    "Rational",
    "ReducedProblem",
    "SpaceTimeField",
    "StructureConstants",
    "Variant",
    "adjoint_closed_form",
    "adjoint_lie_series",
    "cgl_nodes",
    "commutator",
    "diff_matrix",
    "diff_matrix_power",
    "emit_plot_csv",
    "emit_plot_json",
    "exact_family",
    "fd_jacobian",
    "flow",
    "interpolate",
    "merge_time_slices",
    "newton_solve",
    "pde_residual",
    "problem1_residual",
    "problem2_residual",
    "reconstruct_problem1",
    "reconstruct_problem2",
    "reduce_to_optimal",
    "reduced_residual_at",
    "residual_table_csv",
    "residual_table_json",
    "solve_reduced",
    "structure_constants",
    "transform_solution",
    "variant_from_string",
    "variant_to_string",
]
