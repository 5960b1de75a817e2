"""Contract schedules under untrusted predictions."""

from ._core import (
    AnswerBits,
    ContractSchedule,
    DomainError,
    EvalRecord,
    ExperimentConfig,
    QueryFamily,
    acceleration_ratio,
    bound_aware_schedule,
    buffered_ratio_bound,
    buffered_schedule,
    consistency_lower_bound,
    cr_br,
    decode_robust,
    empirical_robustness,
    encode_answers,
    exponential_robustness,
    h_thresholds,
    ideal_consistency,
    ideal_family,
    ideal_select,
    largest_completed,
    pareto_schedule,
    robust_base,
    robust_family,
    run_experiment,
    run_invariant_suites,
    schedule_prefix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
