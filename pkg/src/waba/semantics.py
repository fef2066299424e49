"""Extension semantics on (weighted) abstract argumentation frameworks.

Member sets are enumerated over bitmasks.  Under an inconsistency budget a
set qualifies when it is a sigma-extension after discarding some attacks
whose combined weight stays within the budget; every reported extension
carries a cheapest such discard set (ties: fewest attacks, then canonical
attack order).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .derivations import ResourceLimitError
from .semiring import INF, MINMAX, Semiring, Weight, fold_combine

SEMANTICS = (
    "conflict-free",
    "naive",
    "admissible",
    "complete",
    "grounded",
    "preferred",
    "stable",
    "semi-stable",
    "stage",
)

_ALIASES = {
    "cf": "conflict-free",
    "conflict_free": "conflict-free",
    "conflictfree": "conflict-free",
    "nai": "naive",
    "adm": "admissible",
    "co": "complete",
    "com": "complete",
    "gr": "grounded",
    "grd": "grounded",
    "pr": "preferred",
    "prf": "preferred",
    "st": "stable",
    "stb": "stable",
    "sst": "semi-stable",
    "semistable": "semi-stable",
    "semi_stable": "semi-stable",
    "stg": "stage",
}

MAX_EXHAUSTIVE_NODES = 22
MAX_DISCARD_ATTACKS = 24


def canonical_semantics(name: str) -> str:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in SEMANTICS:
        raise ValueError(f"unknown semantics {name!r}; choose from {', '.join(SEMANTICS)}")
    return key


@dataclass(frozen=True)
class AbstractFramework:
    """Nodes plus weighted attacks, ``attacks[(attacker, target)] = weight``."""

    nodes: tuple[Hashable, ...]
    attacks: Mapping[tuple[Hashable, Hashable], Weight] = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.nodes)
        if len(known) != len(self.nodes):
            raise ValueError("duplicate node ids")
        for x, y in self.attacks:
            if x not in known or y not in known:
                raise ValueError(f"attack ({x}, {y}) references an unknown node")

    @classmethod
    def from_triples(cls, nodes: Iterable[Hashable], triples: Iterable[Sequence]) -> "AbstractFramework":
        """Build from ``(x, y)`` or ``(x, y, w)`` items; unweighted attacks get ``INF``."""
        attacks: dict[tuple, Weight] = {}
        for t in triples:
            x, y = t[0], t[1]
            w = t[2] if len(t) > 2 else INF
            if (x, y) in attacks and attacks[(x, y)] != w:
                raise ValueError(f"conflicting weights for attack ({x}, {y})")
            attacks[(x, y)] = w
        return cls(tuple(nodes), attacks)

    def triples(self) -> list[tuple[Hashable, Hashable, Weight]]:
        return [(x, y, w) for (x, y), w in self.attacks.items()]

    def without(self, removed: Iterable[tuple[Hashable, Hashable]]) -> "AbstractFramework":
        gone = set(removed)
        return AbstractFramework(self.nodes, {k: w for k, w in self.attacks.items() if k not in gone})


@dataclass(frozen=True)
class BudgetedExtension:
    members: frozenset
    discarded: tuple = ()  # attack triples, canonical order
    cost: Weight = 0
    semantics: str = ""
    budget: Weight = 0

    def sort_key(self):
        return (_set_key(self.members), self.cost)


def _set_key(members) -> tuple:
    return tuple(sorted(members))


def canonical_order(extensions: Iterable[BudgetedExtension]) -> list[BudgetedExtension]:
    return sorted(extensions, key=BudgetedExtension.sort_key)


class _Graph:
    """Bitmask view of an abstract framework."""

    def __init__(self, af: AbstractFramework):
        self.nodes = list(af.nodes)
        self.n = len(self.nodes)
        index = {v: i for i, v in enumerate(self.nodes)}
        self.edges = sorted(((index[x], index[y], w) for (x, y), w in af.attacks.items()), key=lambda e: e[:2])
        self.full = (1 << self.n) - 1
        self.out = [0] * self.n
        self.inn = [0] * self.n
        for i, j, _ in self.edges:
            self.out[i] |= 1 << j
            self.inn[j] |= 1 << i

    def members(self, mask: int) -> frozenset:
        return frozenset(self.nodes[i] for i in range(self.n) if mask >> i & 1)

    def triple(self, k: int):
        i, j, w = self.edges[k]
        return (self.nodes[i], self.nodes[j], w)

    def reduced(self, removed: set[int]) -> tuple[list[int], list[int]]:
        out = [0] * self.n
        inn = [0] * self.n
        for k, (i, j, _) in enumerate(self.edges):
            if k not in removed:
                out[i] |= 1 << j
                inn[j] |= 1 << i
        return out, inn


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _union(table: list[int], mask: int) -> int:
    acc = 0
    for i in _bits(mask):
        acc |= table[i]
    return acc


def _conflict_free(n: int, out: list[int], inn: list[int]) -> list[tuple[int, int, int]]:
    """Conflict-free masks as ``(mask, attacked by mask, attackers of mask)``."""
    if n > MAX_EXHAUSTIVE_NODES:
        raise ResourceLimitError(f"{n} nodes exceed the exhaustive limit of {MAX_EXHAUSTIVE_NODES}")
    found: list[tuple[int, int, int]] = []
    clash = [out[i] | inn[i] for i in range(n)]

    def rec(i: int, mask: int, blocked: int, hit: int, hitters: int) -> None:
        if i == n:
            found.append((mask, hit, hitters))
            return
        rec(i + 1, mask, blocked, hit, hitters)
        if not (blocked >> i & 1) and not (out[i] >> i & 1):
            rec(i + 1, mask | 1 << i, blocked | clash[i], hit | out[i], hitters | inn[i])

    rec(0, 0, 0, 0, 0)
    return found


def _maximal(keyed: list[tuple[int, int]]) -> list[int]:
    """Masks whose key is not strictly contained in another key; input is ``(key, mask)``."""
    keys = sorted({k for k, _ in keyed}, key=lambda k: -bin(k).count("1"))
    kept: list[int] = []
    for k in keys:
        if not any(k & k2 == k for k2 in kept):
            kept.append(k)
    top = set(kept)
    return [m for k, m in keyed if k in top]


def _sigma_masks(n: int, out: list[int], inn: list[int], sem: str) -> list[int]:
    full = (1 << n) - 1

    def defended(hit: int) -> int:
        return sum(1 << z for z in range(n) if inn[z] & ~hit == 0)

    if sem == "grounded":
        mask = 0
        while True:
            nxt = defended(_union(out, mask))
            if nxt == mask:
                return [mask]
            mask = nxt

    cf = _conflict_free(n, out, inn)
    if sem == "conflict-free":
        return [m for m, _, _ in cf]
    if sem == "naive":
        # maximal iff no outsider can join without a conflict
        clash = [out[z] | inn[z] | (1 << z if out[z] >> z & 1 else 0) for z in range(n)]
        return [m for m, _, _ in cf if all(m >> z & 1 or clash[z] & (m | 1 << z) for z in range(n))]
    if sem == "stage":
        return _maximal([(m | hit, m) for m, hit, _ in cf])
    if sem == "stable":
        return [m for m, hit, _ in cf if m | hit == full]

    adm = [(m, hit) for m, hit, hitters in cf if hitters & ~hit == 0]
    if sem == "admissible":
        return [m for m, _ in adm]
    if sem == "complete":
        return [m for m, hit in adm if defended(hit) == m]
    if sem == "preferred":
        return _maximal([(m, m) for m, _ in adm])
    if sem == "semi-stable":
        return _maximal([(m | hit, m) for m, hit in adm])
    raise ValueError(sem)


def sigma_extensions(af: AbstractFramework, semantics: str) -> list[frozenset]:
    """All sigma-extensions of ``af`` with every attack in force."""
    sem = canonical_semantics(semantics)
    g = _Graph(af)
    masks = _sigma_masks(g.n, g.out, g.inn, sem)
    return sorted((g.members(m) for m in masks), key=_set_key)


def grounded_extension(af: AbstractFramework) -> frozenset:
    return sigma_extensions(af, "grounded")[0]


def budget_extensions(
    af: AbstractFramework,
    semantics: str,
    budget: Weight,
    spec: Semiring = MINMAX,
) -> list[BudgetedExtension]:
    """All budget-sigma extensions of ``af``, each with a cheapest witness."""
    sem = canonical_semantics(semantics)
    g = _Graph(af)
    if sem in ("conflict-free", "naive", "stable", "admissible"):
        found = _direct(g, sem, budget, spec)
    else:
        found = _by_discard_search(g, sem, budget, spec)
    return canonical_order(
        BudgetedExtension(g.members(mask), tuple(g.triple(k) for k in ks), cost, sem, budget)
        for mask, (cost, _, ks) in found.items()
    )


def _direct(g: _Graph, sem: str, budget: Weight, spec: Semiring) -> dict[int, tuple]:
    """Witnesses for semantics whose cheapest discard set is determined by the members.

    Internal attacks must go; for admissibility so must every attack from an
    outsider the set does not counter-attack.  Keeping any other attack never
    hurts these semantics, so that set is the unique cheapest witness.
    """
    n = g.n
    if n > MAX_EXHAUSTIVE_NODES:
        raise ResourceLimitError(f"{n} nodes exceed the exhaustive limit of {MAX_EXHAUSTIVE_NODES}")
    incident: list[list[tuple[int, int, Weight]]] = [[] for _ in range(n)]
    for k, (i, j, w) in enumerate(g.edges):
        # registered at the later endpoint so each internal edge is met once
        incident[max(i, j)].append((min(i, j), k, w))

    found: dict[int, tuple] = {}

    def finish(mask: int, cost: Weight, internal: list[int]) -> None:
        hit = _union(g.out, mask)
        if sem == "stable" and mask | hit != g.full:
            return
        if sem == "naive":
            for z in range(n):
                if mask >> z & 1:
                    continue
                if not (g.out[z] >> z & 1) and (g.out[z] | g.inn[z]) & mask == 0:
                    return
        ks = list(internal)
        if sem == "admissible":
            undefended = _union(g.inn, mask) & ~mask & ~hit
            for k, (i, j, w) in enumerate(g.edges):
                if undefended >> i & 1 and mask >> j & 1:
                    cost = spec.combine(cost, w)
                    ks.append(k)
            if cost > budget:
                return
        found[mask] = (cost, len(ks), tuple(sorted(ks)))

    def rec(i: int, mask: int, cost: Weight, internal: list[int]) -> None:
        if i == n:
            finish(mask, cost, internal)
            return
        rec(i + 1, mask, cost, internal)
        grown = mask | 1 << i
        c = cost
        added = []
        for other, k, w in incident[i]:
            if grown >> other & 1:
                c = spec.combine(c, w)
                added.append(k)
                if c > budget:
                    return
        rec(i + 1, grown, c, internal + added)

    rec(0, 0, spec.zero, [])
    return found


def _by_discard_search(g: _Graph, sem: str, budget: Weight, spec: Semiring) -> dict[int, tuple]:
    """Enumerate affordable discard sets and solve each reduced framework."""
    affordable = [k for k, (_, _, w) in enumerate(g.edges) if w <= budget]
    if len(affordable) > MAX_DISCARD_ATTACKS:
        raise ResourceLimitError(
            f"{len(affordable)} discardable attacks exceed the search limit of {MAX_DISCARD_ATTACKS}"
        )
    found: dict[int, tuple] = {}

    def visit(chosen: list[int], cost: Weight) -> None:
        out, inn = g.reduced(set(chosen))
        key = (cost, len(chosen), tuple(chosen))
        for mask in _sigma_masks(g.n, out, inn, sem):
            if mask not in found or key < found[mask]:
                found[mask] = key

    def rec(pos: int, chosen: list[int], cost: Weight) -> None:
        if pos == len(affordable):
            visit(chosen, cost)
            return
        rec(pos + 1, chosen, cost)
        k = affordable[pos]
        c = spec.combine(cost, g.edges[k][2])
        if c <= budget:
            rec(pos + 1, chosen + [k], c)

    rec(0, [], spec.zero)
    return found


def extension_cost(spec: Semiring, discarded: Iterable[tuple]) -> Weight:
    return fold_combine(spec, (t[-1] for t in discarded))
