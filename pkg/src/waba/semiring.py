"""Weight algebra for weighted ABA.

Weights are exact: finite values are non-negative Python ints (decimal
literals scaled by a fixed integer factor at parse time) and the top
element is ``INF``.  Python compares ``int`` against ``math.inf`` exactly,
so the natural order needs no wrapper type.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from functools import reduce
from typing import Callable, Iterable, Union

INF = math.inf

Weight = Union[int, float]  # float only ever for INF


def is_weight(value) -> bool:
    if value is INF or value == INF:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def parse_weight(text: str, scale: int = 1) -> Weight:
    """Parse a decimal literal (or ``inf`` / ``#sup``) into a scaled weight.

    >>> parse_weight("7")
    7
    >>> parse_weight("0.7", scale=10)
    7
    """
    text = text.strip()
    if text.lower() in ("inf", "#sup", "infinity"):
        return INF
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise ValueError(f"not a decimal weight: {text!r}") from None
    if not value.is_finite() or value < 0:
        raise ValueError(f"weights must be finite and non-negative: {text!r}")
    scaled = value * scale
    if scaled != scaled.to_integral_value():
        raise ValueError(f"weight {text} is not representable at scale {scale}")
    return int(scaled)


def format_weight(value: Weight, top: str = "#sup") -> str:
    return top if value == INF else str(int(value))


def _max(x: Weight, y: Weight) -> Weight:
    return x if x >= y else y


def _min(x: Weight, y: Weight) -> Weight:
    return x if x <= y else y


def _plus(x: Weight, y: Weight) -> Weight:
    if x == INF or y == INF:
        return INF
    return x + y


def _times(x: Weight, y: Weight) -> Weight:
    # 0 annihilates, including against the top element
    if x == 0 or y == 0:
        return 0
    if x == INF or y == INF:
        return INF
    return x * y


@dataclass(frozen=True)
class Semiring:
    """A totally ordered semiring ``(S, combine, aggregate, zero, one)``.

    ``combine`` accumulates the cost of discarded attacks and is compared
    against the budget; ``aggregate`` folds atom weights along a derivation.
    Budgets are compared in the natural order of the carrier.
    """

    name: str
    combine: Callable[[Weight, Weight], Weight]
    aggregate: Callable[[Weight, Weight], Weight]
    zero: Weight  # identity of combine
    one: Weight  # identity of aggregate

    def leq(self, x: Weight, y: Weight) -> bool:
        return x <= y

    def __repr__(self) -> str:
        return f"Semiring({self.name})"


MINMAX = Semiring("minmax", _max, _min, 0, INF)

# (+, min) is not distributive, so the aggregate here is multiplication,
# which makes (N u {inf}, +, *, 0, 1) a genuine semiring.
ADDITIVE = Semiring("additive", _plus, _times, 0, 1)

SEMIRINGS = {s.name: s for s in (MINMAX, ADDITIVE)}


def minmax_semiring() -> Semiring:
    return MINMAX


def additive_semiring() -> Semiring:
    return ADDITIVE


def get_semiring(name: str) -> Semiring:
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise ValueError(f"unknown semiring {name!r}; choose from {sorted(SEMIRINGS)}") from None


def fold_aggregate(spec: Semiring, values: Iterable[Weight]) -> Weight:
    return reduce(spec.aggregate, values, spec.one)


def fold_combine(spec: Semiring, values: Iterable[Weight]) -> Weight:
    return reduce(spec.combine, values, spec.zero)
