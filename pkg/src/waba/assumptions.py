"""Budgeted extensions over assumption sets.

Conflict-free, naive and stable follow the ASP encoding: a candidate set
generates attack instances only from what it supports, and paying for the
instances that hit its own members is the cheapest way to make it
conflict-free.  Every other semantics is answered by projecting
argument-level extensions onto their premises.
"""
from __future__ import annotations

from .attacks import AssumptionAttack, assumption_level_attacks, build_attack_graph
from .derivations import DEFAULT_MAX_ARGUMENTS, ResourceLimitError
from .framework import Framework
from .semantics import BudgetedExtension, budget_extensions, canonical_order, canonical_semantics
from .semiring import Weight, fold_combine

FAST_PATH = ("conflict-free", "naive", "stable")
MAX_ASSUMPTIONS = 20
MAX_NAIVE_ASSUMPTIONS = 14


def assumption_extensions(
    fw: Framework,
    semantics: str,
    budget: Weight,
    max_arguments: int = DEFAULT_MAX_ARGUMENTS,
) -> list[BudgetedExtension]:
    sem = canonical_semantics(semantics)
    if sem not in FAST_PATH:
        graph = build_attack_graph(fw, max_arguments=max_arguments)
        return project(budget_extensions(graph, sem, budget, fw.semiring))

    asms = fw.assumptions
    n = len(asms)
    limit = MAX_NAIVE_ASSUMPTIONS if sem == "naive" else MAX_ASSUMPTIONS
    if n > limit:
        raise ResourceLimitError(f"{n} assumptions exceed the {sem} limit of {limit}")

    cache: dict[int, list[AssumptionAttack]] = {}

    def members(mask: int) -> frozenset[str]:
        return frozenset(asms[i] for i in range(n) if mask >> i & 1)

    def instances(mask: int) -> list[AssumptionAttack]:
        if mask not in cache:
            cache[mask] = assumption_level_attacks(fw, members(mask))
        return cache[mask]

    spec = fw.semiring
    found = []
    for mask in range(1 << n):
        delta = members(mask)
        generated = instances(mask)
        internal = [t for t in generated if t.target in delta]
        cost = fold_combine(spec, (t.weight for t in internal))
        if cost > budget:
            continue
        if sem == "stable":
            defeated = {t.target for t in generated}
            if any(a not in delta and a not in defeated for a in asms):
                continue
        if sem == "naive" and _extendable(mask, n, set(internal), instances, members):
            continue
        found.append(BudgetedExtension(delta, tuple(internal), cost, sem, budget))
    return canonical_order(found)


def _extendable(mask, n, discarded, instances, members) -> bool:
    """True if some strict superset stays conflict-free under ``discarded``."""
    free = ((1 << n) - 1) & ~mask
    sub = free
    while sub:
        bigger = mask | sub
        delta = members(bigger)
        if not any(t.target in delta and t not in discarded for t in instances(bigger)):
            return True
        sub = (sub - 1) & free
    return False


def project(extensions: list[BudgetedExtension]) -> list[BudgetedExtension]:
    """Map argument-level extensions to the union of their members' premises.

    When several member sets share a projection, the cheapest witness wins.
    """
    best: dict[frozenset, BudgetedExtension] = {}
    for ext in extensions:
        delta = frozenset(p for arg in ext.members for p in arg.premises)
        key = (ext.cost, len(ext.discarded))
        if delta not in best or key < (best[delta].cost, len(best[delta].discarded)):
            best[delta] = BudgetedExtension(delta, ext.discarded, ext.cost, ext.semantics, ext.budget)
    return canonical_order(best.values())
