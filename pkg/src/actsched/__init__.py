"""Sparse actuator scheduling for discrete-time linear systems.

Deterministic spectral-sparsification schedulers, a randomized
leverage-score scheduler, greedy baselines, systemic controllability
metrics, and benchmark model builders.
"""

from .dualset import DecompositionPair, dual_set, lower_barrier_phi, upper_barrier_phi
from .errors import (
    ActschedError,
    BarrierViolation,
    DegenerateDenominator,
    DimensionError,
    InvalidBudget,
    InvalidEps,
    MissingDesignPool,
    NoFeasibleIndex,
    ParseError,
    SingularGramian,
    TooLarge,
)
from .fileio import (
    emit_heatmap,
    epsilon_surface,
    load_schedule,
    load_system,
    save_schedule,
    save_system,
)
from .greedy import GreedyResult, greedy_static, greedy_time_varying
from .leverage import (
    LeverageTable,
    group_leverage,
    leverage_scores,
    sample_schedule,
    sampling_distribution,
    theorem8_budget,
)
from .metrics import ALL_METRICS, MetricKind, evaluate, evaluate_clamped
from .models import (
    GeometricGraph,
    SwingParameters,
    consensus_system,
    default_swing_parameters,
    example1_system,
    random_geometric_graph,
    swing_system,
)
from .system import (
    LtiSystem,
    Schedule,
    controllability_matrix,
    gramian,
    gramian_sqrt_inv,
    is_controllable,
    is_eps_d_approximation,
    scheduled_gramian,
)
from .unweighted import (
    brute_force_schedule,
    brute_force_static,
    schedule_unweighted,
    selection_floor,
)
from .weighted import (
    WeightedScheduleResult,
    epsilon_bound,
    epsilon_from_ratio,
    one_sided_factor,
    orthonormal_columns,
    schedule_max_ratio,
    schedule_per_input,
    schedule_per_time,
    schedule_two_sided,
)

__version__ = "0.1.0"

__all__ = [
    "ActschedError", "BarrierViolation", "DegenerateDenominator",
    "DimensionError", "InvalidBudget", "InvalidEps", "MissingDesignPool",
    "NoFeasibleIndex", "ParseError", "SingularGramian", "TooLarge",
    "LtiSystem", "Schedule", "controllability_matrix", "gramian",
    "scheduled_gramian", "gramian_sqrt_inv", "is_controllable",
    "is_eps_d_approximation",
    "MetricKind", "ALL_METRICS", "evaluate", "evaluate_clamped",
    "selection_floor",
    "DecompositionPair", "dual_set", "lower_barrier_phi", "upper_barrier_phi",
    "WeightedScheduleResult", "epsilon_bound", "epsilon_from_ratio",
    "one_sided_factor", "orthonormal_columns", "schedule_two_sided",
    "schedule_max_ratio", "schedule_per_input", "schedule_per_time",
    "schedule_unweighted", "brute_force_schedule", "brute_force_static",
    "LeverageTable", "leverage_scores", "group_leverage",
    "sampling_distribution", "sample_schedule", "theorem8_budget",
    "GreedyResult", "greedy_static", "greedy_time_varying",
    "GeometricGraph", "SwingParameters", "example1_system",
    "random_geometric_graph", "consensus_system", "swing_system",
    "default_swing_parameters",
    "load_system", "save_system", "load_schedule", "save_schedule",
    "emit_heatmap", "epsilon_surface",
]
