"""Contrary-based attacks between arguments, and their assumption-level projection."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .derivations import (
    DEFAULT_MAX_ARGUMENTS,
    Argument,
    argument_weight,
    enumerate_arguments,
    supported_atoms,
)
from .framework import Framework
from .semantics import AbstractFramework
from .semiring import Weight

# attack weights live on the edges, so standalone weighted AAFs share the type
WeightedAttackGraph = AbstractFramework


def build_attack_graph(fw: Framework, max_arguments: int = DEFAULT_MAX_ARGUMENTS) -> WeightedAttackGraph:
    args = enumerate_arguments(fw, max_arguments=max_arguments)
    by_premise: dict[str, list[Argument]] = defaultdict(list)
    for y in args:
        for p in y.premises:
            by_premise[p].append(y)
    targets_of: dict[str, list[str]] = defaultdict(list)
    for a in fw.assumptions:
        targets_of[fw.contrary[a]].append(a)

    attacks: dict[tuple[Argument, Argument], Weight] = {}
    for x in args:
        psis = targets_of.get(x.conclusion)
        if not psis:
            continue
        w = argument_weight(fw, x)
        for psi in psis:
            for y in by_premise[psi]:
                attacks[(x, y)] = w
    return AbstractFramework(tuple(args), attacks)


@dataclass(frozen=True, order=True)
class AssumptionAttack:
    contrary: str
    target: str
    weight: Weight

    def __str__(self) -> str:
        return f"{self.contrary} -> {self.target} ({self.weight})"


def assumption_level_attacks(fw: Framework, in_set: Iterable[str]) -> list[AssumptionAttack]:
    """Attack instances generated by the contraries an assumption set supports.

    One instance per (contrary atom, attacked assumption, achievable weight);
    weights are those of the support profile.
    """
    profile = supported_atoms(fw, in_set)
    found = set()
    for a in fw.assumptions:
        c = fw.contrary[a]
        if c in profile.supported:
            for w in profile.weights[c]:
                found.add(AssumptionAttack(c, a, w))
    return sorted(found)
