"""Weighted assumption-based argumentation: arguments, weighted attacks, budgeted semantics."""
from pathlib import Path

from .assumptions import assumption_extensions, project
from .attacks import AssumptionAttack, WeightedAttackGraph, assumption_level_attacks, build_attack_graph
from .derivations import Argument, ResourceLimitError, SupportProfile, argument_weight, enumerate_arguments, supported_atoms
from .framework import Framework, InvalidFramework, Rule, Violation, build_framework, check, effective_weight, validate
from .semantics import (
    SEMANTICS,
    AbstractFramework,
    BudgetedExtension,
    budget_extensions,
    extension_cost,
    grounded_extension,
    sigma_extensions,
)
from .semiring import ADDITIVE, INF, MINMAX, Semiring, additive_semiring, fold_aggregate, fold_combine, minmax_semiring
from .syntax import ParseError, format_abstract, format_framework, parse_abstract, parse_document, parse_framework

__version__ = "0.1.0"

EXAMPLES_DIR = Path(__file__).parent / "examples"


def examples_path(name: str) -> Path:
    """Path of a bundled corpus file, e.g. ``examples_path("ex1_aba.waba")``."""
    path = EXAMPLES_DIR / name
    if not path.exists():
        raise FileNotFoundError(f"no bundled example {name!r}")
    return path
