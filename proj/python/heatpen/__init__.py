"""Explicit heat-equation solvers with penalty-relaxed boundary data."""

from heatpen._core import (  # noqa: F401
    BoundaryMode,
    BoundaryNode,
    CflReport,
    ErrorCurve,
    Interval1D,
    PenaltyParams,
    PolarGrid,
    ProblemSpec,
    RateFit,
    RemainderReport,
    ScalarField,
    SquareGrid,
    SweepRow,
    TimeGrid,
    Trajectory,
    __version__,
    asymptotic_approx,
    boundary_nodes,
    cfl_check,
    comparative_error,
    epsilon_sweep,
    evaluate_initial,
    fit_rate,
    inner_term,
    make_problem,
    penalty_exact,
    penalty_step,
    penalty_step_warns,
    remainder_norms,
    s0,
    s1,
    s1_closed,
    solve,
)
