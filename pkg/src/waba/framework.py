"""The wABA tuple: language, rules, assumptions, contraries, semiring, weights."""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .semiring import MINMAX, Semiring, Weight, is_weight


class InvalidFramework(ValueError):
    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))


def atom(name: str) -> str:
    return sys.intern(name)


@dataclass(frozen=True)
class Rule:
    id: str
    head: str
    body: tuple[str, ...] = ()

    @property
    def is_fact(self) -> bool:
        return not self.body

    def __str__(self) -> str:
        return f"{self.head} <- {', '.join(self.body)}".rstrip()


@dataclass(frozen=True)
class Framework:
    """A (flat) weighted ABA framework.

    Containers keep declaration order so exports and printed forms are
    reproducible; treat instances as immutable.
    """

    language: frozenset[str]
    rules: tuple[Rule, ...]
    assumptions: tuple[str, ...]
    contrary: Mapping[str, str]
    weights: Mapping[str, Weight] = field(default_factory=dict)
    semiring: Semiring = MINMAX

    @property
    def assumption_set(self) -> frozenset[str]:
        return frozenset(self.assumptions)

    def is_assumption(self, name: str) -> bool:
        return name in self.assumption_set

    def rule(self, rule_id: str) -> Rule:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise KeyError(rule_id)

    def with_semiring(self, semiring: Semiring) -> "Framework":
        return build_framework(
            self.assumptions,
            self.contrary,
            [(r.head, r.body) for r in self.rules],
            self.weights,
            semiring=semiring,
            language=self.language,
        )


def build_framework(
    assumptions: Iterable[str],
    contrary: Mapping[str, str],
    rules: Iterable[tuple[str, Sequence[str]] | Rule],
    weights: Mapping[str, Weight] | None = None,
    semiring: Semiring = MINMAX,
    language: Iterable[str] | None = None,
) -> Framework:
    """Assemble a framework, assigning rule ids and collapsing duplicate rules.

    Rules get ids ``r1, r2, ...`` in declaration order, except weighted facts
    (empty body, head with a declared weight), which get ``ctx1, ctx2, ...``.
    The language is every atom mentioned anywhere plus ``language``.
    """
    weights = {atom(k): v for k, v in (weights or {}).items()}
    asms = tuple(dict.fromkeys(atom(a) for a in assumptions))
    ctr = {atom(k): atom(v) for k, v in contrary.items()}

    seen: set[tuple[str, frozenset[str]]] = set()
    built: list[Rule] = []
    n_rule = n_ctx = 0
    for item in rules:
        head, body = (item.head, item.body) if isinstance(item, Rule) else item
        head = atom(head)
        body = tuple(dict.fromkeys(atom(b) for b in body))
        key = (head, frozenset(body))
        if key in seen:
            continue
        seen.add(key)
        if not body and head in weights:
            n_ctx += 1
            rid = f"ctx{n_ctx}"
        else:
            n_rule += 1
            rid = f"r{n_rule}"
        built.append(Rule(rid, head, body))

    lang = set(language or ())
    lang.update(asms, ctr.keys(), ctr.values(), weights.keys())
    for r in built:
        lang.add(r.head)
        lang.update(r.body)
    return Framework(
        language=frozenset(atom(a) for a in lang),
        rules=tuple(built),
        assumptions=asms,
        contrary=ctr,
        weights=weights,
        semiring=semiring,
    )


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: str
    message: str


def validate(fw: Framework) -> list[Violation]:
    """Check the side conditions of a flat wABA; an empty list means ok."""
    out: list[Violation] = []
    asms = fw.assumption_set
    if not asms:
        out.append(Violation("no-assumptions", "", "the set of assumptions must be nonempty"))
    for a in fw.assumptions:
        if a not in fw.language:
            out.append(Violation("unknown-atom", a, f"assumption {a} is not in the language"))
        if a not in fw.contrary:
            out.append(Violation("missing-contrary", a, f"assumption {a} has no contrary"))
    for a, c in fw.contrary.items():
        if a not in asms:
            out.append(Violation("contrary-of-non-assumption", a, f"contrary declared for non-assumption {a}"))
        if c not in fw.language:
            out.append(Violation("unknown-atom", c, f"contrary {c} of {a} is not in the language"))
    for r in fw.rules:
        if r.head in asms:
            out.append(Violation("not-flat", r.id, f"rule {r.id} ({r}) has assumption {r.head} as its head"))
        for b in (r.head, *r.body):
            if b not in fw.language:
                out.append(Violation("unknown-atom", b, f"atom {b} of rule {r.id} is not in the language"))
    one = fw.semiring.one
    for name, w in fw.weights.items():
        if name not in fw.language:
            out.append(Violation("unknown-atom", name, f"weighted atom {name} is not in the language"))
        if not is_weight(w):
            out.append(Violation("bad-weight", name, f"weight of {name} is not a valid weight: {w!r}"))
        elif name in asms and w != one:
            out.append(
                Violation("assumption-weight", name, f"assumption {name} must carry the aggregate identity, not {w}")
            )
    return out


def check(fw: Framework) -> Framework:
    violations = validate(fw)
    if violations:
        raise InvalidFramework(violations)
    return fw


def effective_weight(fw: Framework, name: str) -> Weight:
    if name not in fw.language:
        raise KeyError(f"unknown atom {name!r}")
    if name in fw.assumption_set:
        return fw.semiring.one
    return fw.weights.get(name, fw.semiring.one)
