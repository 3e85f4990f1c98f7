"""Unicost set-cover toolkit.

Solvers (classical greedy, big-step greedy, exact oracle), a seeded random
instance generator, a head-to-head benchmark harness, and text formats, all
over one immutable bitset-based instance model.  Typical flow::

    from scpkit import GeneratorConfig, generate_instance, big_step_greedy

    config = GeneratorConfig(n=100, m=20, q=0.3, seed=7)
    instance = generate_instance(config, 0)
    cover, trace = big_step_greedy(instance, p=2)
"""

from .bench import (
    CampaignSpec,
    ComparisonRow,
    Outcome,
    compare_one,
    emit_table,
    run_campaign,
)
from .core import (
    CoverSolution,
    ElementSet,
    Instance,
    SolveStep,
    SolveTrace,
    UncoverableError,
    is_feasible,
    validate_cover,
)
from .formats import ParseError, parse_instance, parse_orlib_scp, serialize_instance
from .generate import (
    FeasibilityPolicy,
    GeneratorConfig,
    ResampleLimitError,
    feasibility_probability,
    generate_instance,
)
from .solvers import OracleBudgetError, big_step_greedy, classical_greedy, exact_min_cover

__version__ = "0.1.0"

__all__ = [
    "CampaignSpec",
    "ComparisonRow",
    "CoverSolution",
    "ElementSet",
    "FeasibilityPolicy",
    "GeneratorConfig",
    "Instance",
    "OracleBudgetError",
    "Outcome",
    "ParseError",
    "ResampleLimitError",
    "SolveStep",
    "SolveTrace",
    "UncoverableError",
    "big_step_greedy",
    "classical_greedy",
    "compare_one",
    "emit_table",
    "exact_min_cover",
    "feasibility_probability",
    "generate_instance",
    "is_feasible",
    "parse_instance",
    "parse_orlib_scp",
    "run_campaign",
    "serialize_instance",
    "validate_cover",
    "__version__",
]
