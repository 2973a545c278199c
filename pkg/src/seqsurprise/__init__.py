"""Structural complexity, unexpectedness and subjective probability for
finite number sequences, with a lottery-combination experiment lab."""

from .analyzer import analyze, derive_10_to_70, naive_cost
from .costmodel import (
    Bits,
    CostModel,
    DEFAULT_MODEL,
    aggregate_cost,
    digit_complexity,
    model_from_config_text,
    model_to_config_text,
    number_complexity,
)
from .lottery import (
    ChoiceModel,
    DEFAULT_FIXED_COMBINATIONS,
    ExperimentConfig,
    ExperimentResult,
    GenerationError,
    LotteryCombination,
    REFERENCE_COMBINATIONS,
    avoidance_probability,
    avoidance_probability_mc,
    combination_complexity,
    format_bulletin,
    generate_bulletin,
    parse_bulletin,
    rank_combinations,
    reference_rank_report,
    simulate_subjects,
)
from .oracle import (
    BudgetError,
    DEFAULT_OPERATORS,
    FULL_OPERATORS,
    SOFT_LENGTH_LIMIT,
    SearchBudget,
    oracle_min_cost,
    with_operators,
)
from .program import (
    DescriptionProgram,
    Operation,
    OpKind,
    ReplayError,
    StmState,
    replay,
)
from .surprise import (
    ExpectationTemplate,
    FixedBits,
    KDigitNumber,
    MonteCarloPool,
    SurpriseReport,
    algorithmic_probability,
    expected_complexity,
    number_surprise,
    observed_number_complexity,
    sequence_surprise,
    subjective_probability,
    surprise_from_costs,
    unexpectedness,
)

__version__ = "0.1.0"

__all__ = [
    "Bits",
    "BudgetError",
    "ChoiceModel",
    "CostModel",
    "DEFAULT_FIXED_COMBINATIONS",
    "DEFAULT_MODEL",
    "DEFAULT_OPERATORS",
    "DescriptionProgram",
    "ExpectationTemplate",
    "ExperimentConfig",
    "ExperimentResult",
    "FULL_OPERATORS",
    "FixedBits",
    "GenerationError",
    "KDigitNumber",
    "LotteryCombination",
    "MonteCarloPool",
    "OpKind",
    "Operation",
    "REFERENCE_COMBINATIONS",
    "ReplayError",
    "SOFT_LENGTH_LIMIT",
    "SearchBudget",
    "StmState",
    "SurpriseReport",
    "aggregate_cost",
    "algorithmic_probability",
    "analyze",
    "avoidance_probability",
    "avoidance_probability_mc",
    "combination_complexity",
    "derive_10_to_70",
    "digit_complexity",
    "expected_complexity",
    "format_bulletin",
    "generate_bulletin",
    "model_from_config_text",
    "model_to_config_text",
    "naive_cost",
    "number_complexity",
    "number_surprise",
    "observed_number_complexity",
    "oracle_min_cost",
    "parse_bulletin",
    "rank_combinations",
    "reference_rank_report",
    "replay",
    "sequence_surprise",
    "simulate_subjects",
    "subjective_probability",
    "surprise_from_costs",
    "unexpectedness",
    "with_operators",
]
