"""Arguments as deductions, forward-chained support, and derivation weights."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .framework import Framework, Rule, effective_weight
from .semiring import Weight, fold_aggregate, fold_combine

DEFAULT_MAX_ARGUMENTS = 100_000


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Argument:
    """A deduction ``premises |- conclusion`` built from ``rules``.

    ``rules`` holds rule ids in framework declaration order.  Each derived
    atom is produced by exactly one rule of the set, and the induced proof
    tree has no atom repeated along a branch.
    """

    premises: tuple[str, ...]
    conclusion: str
    rules: tuple[str, ...] = ()

    @property
    def premise_set(self) -> frozenset[str]:
        return frozenset(self.premises)

    def __str__(self) -> str:
        return "{" + ",".join(self.premises) + "} |- " + self.conclusion


def _rules_by_head(fw: Framework) -> dict[str, list[Rule]]:
    table: dict[str, list[Rule]] = defaultdict(list)
    for r in fw.rules:
        table[r.head].append(r)
    return table


def enumerate_arguments(fw: Framework, max_arguments: int = DEFAULT_MAX_ARGUMENTS) -> list[Argument]:
    asms = fw.assumption_set
    by_head = _rules_by_head(fw)
    order = {r.id: i for i, r in enumerate(fw.rules)}
    memo: dict[tuple[str, frozenset[str]], list[tuple[dict[str, str], frozenset[str]]]] = {}
    budget = [0]

    def tick(n: int = 1) -> None:
        budget[0] += n
        if budget[0] > max_arguments:
            raise ResourceLimitError(f"more than {max_arguments} partial derivations; raise --max-arguments")

    def derive(name: str, ancestors: frozenset[str]):
        key = (name, ancestors)
        if key in memo:
            return memo[key]
        if name in asms:
            found = [({}, frozenset((name,)))]
        else:
            found = []
            below = ancestors | {name}
            for rule in by_head.get(name, ()):
                if any(b in below for b in rule.body):
                    continue
                partial = [({name: rule.id}, frozenset())]
                for b in rule.body:
                    subs = derive(b, below)
                    grown = []
                    for choice, prem in partial:
                        for sub_choice, sub_prem in subs:
                            if any(choice.get(h, rid) != rid for h, rid in sub_choice.items()):
                                continue
                            grown.append(({**choice, **sub_choice}, prem | sub_prem))
                    tick(len(grown))
                    partial = grown
                    if not partial:
                        break
                found.extend(partial)
        memo[key] = found
        return found

    result: set[Argument] = set()
    for a in fw.assumptions:
        result.add(Argument((a,), a, ()))
    heads = list(dict.fromkeys(r.head for r in fw.rules))
    for head in heads:
        if head in asms:
            continue
        for choice, prem in derive(head, frozenset()):
            rules = tuple(sorted(choice.values(), key=order.__getitem__))
            result.add(Argument(tuple(sorted(prem)), head, rules))
            if len(result) > max_arguments:
                raise ResourceLimitError(f"more than {max_arguments} arguments; raise --max-arguments")
    return sorted(result)


def argument_weight(fw: Framework, argument: Argument) -> Weight:
    """Aggregate the weights of every body atom of every supporting rule."""
    values = []
    for rid in argument.rules:
        for b in fw.rule(rid).body:
            values.append(effective_weight(fw, b))
    return fold_aggregate(fw.semiring, values)


@dataclass(frozen=True)
class SupportProfile:
    """What an assumption set supports, with the weights the ASP encoding derives.

    ``weights[x]`` is the set of ``supported_with_weight(x, W)`` values: the
    aggregate identity for selected assumptions, the declared weight, and one
    value per fired rule with head ``x`` (aggregate over the body atoms of
    their lowest value).  ``best[x]`` combines the alternative rules and then
    aggregates the declared weight of ``x``.
    """

    assumptions: frozenset[str]
    supported: frozenset[str]
    weights: Mapping[str, frozenset[Weight]]
    best: Mapping[str, Weight]

    def lowest(self, name: str) -> Weight:
        return min(self.weights[name])


def supported_atoms(fw: Framework, assumption_set: Iterable[str]) -> SupportProfile:
    spec = fw.semiring
    delta = frozenset(assumption_set)
    unknown = delta - fw.assumption_set
    if unknown:
        raise ValueError(f"not assumptions: {sorted(unknown)}")

    supported = set(delta)
    changed = True
    while changed:
        changed = False
        for r in fw.rules:
            if r.head not in supported and all(b in supported for b in r.body):
                supported.add(r.head)
                changed = True
    fired = [r for r in fw.rules if all(b in supported for b in r.body)]

    base: dict[str, list[Weight]] = defaultdict(list)
    for a in delta:
        base[a].append(spec.one)
    for name in supported:
        if name in fw.weights:
            base[name].append(fw.weights[name])

    low: dict[str, Weight] = {name: min(vals) for name, vals in base.items()}
    rule_value: dict[str, Weight] = {}
    changed = True
    while changed:
        changed = False
        for r in fired:
            if not all(b in low for b in r.body):
                continue
            v = fold_aggregate(spec, (low[b] for b in r.body))
            if rule_value.get(r.id) != v:
                rule_value[r.id] = v
                changed = True
            if r.head not in low or v < low[r.head]:
                low[r.head] = v
                changed = True

    weights = {}
    best = {}
    for name in supported:
        vals = set(base.get(name, ()))
        alternatives = [rule_value[r.id] for r in fired if r.head == name]
        vals.update(alternatives)
        weights[name] = frozenset(vals)
        if name in delta:
            alternatives.append(spec.one)
        b = fold_combine(spec, alternatives)
        if name in fw.weights:
            b = spec.aggregate(fw.weights[name], b)
        best[name] = b
    return SupportProfile(delta, frozenset(supported), weights, best)
