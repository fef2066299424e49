"""Brute-force reference solver.

Enumerates every candidate set and every discard set and checks the
definitions directly on Python sets.  Nothing here is shared with the fast
solver except the semiring; keep it that way so the two can cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations
from typing import NamedTuple

from .semiring import INF, Semiring, Weight, fold_combine

MAX_ASSUMPTIONS = 6
MAX_RULES = 12
MAX_NODES = 12
MAX_ATTACKS = 16

_NAMES = {
    "cf": "conflict-free", "nai": "naive", "adm": "admissible", "com": "complete", "grd": "grounded",
    "prf": "preferred", "stb": "stable", "sst": "semi-stable", "stg": "stage",
}
_ALL = set(_NAMES.values())


class OracleArgument(NamedTuple):
    premises: tuple
    conclusion: str
    rules: tuple

    def __str__(self) -> str:
        return "{" + ",".join(self.premises) + "} |- " + self.conclusion


@dataclass(frozen=True)
class OracleResult:
    semantics: str
    budget: Weight
    extensions: tuple  # ((member frozenset, minimal cost), ...) sorted by members

    def member_sets(self) -> set[frozenset]:
        return {m for m, _ in self.extensions}

    def costs(self) -> dict[frozenset, Weight]:
        return dict(self.extensions)


def _name(semantics: str) -> str:
    s = semantics.strip().lower()
    s = _NAMES.get(s, s)
    if s not in _ALL:
        raise ValueError(f"unknown semantics {semantics!r}")
    return s


def _subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def oracle_solve(framework, semantics: str, budget: Weight, spec: Semiring | None = None, mode: str = "assumption"):
    """Reference extensions of a Framework (assumption or argument mode) or an abstract framework."""
    sem = _name(semantics)
    if hasattr(framework, "nodes"):
        if spec is None:
            raise ValueError("abstract frameworks need an explicit semiring")
        nodes = tuple(framework.nodes)
        att = {(x, y): w for (x, y), w in framework.attacks.items()}
        return OracleResult(sem, budget, _abstract(nodes, att, sem, budget, spec))

    spec = spec or framework.semiring
    if len(framework.assumptions) > MAX_ASSUMPTIONS:
        raise ValueError(f"oracle refuses more than {MAX_ASSUMPTIONS} assumptions")
    if mode == "assumption" and sem in ("conflict-free", "naive", "stable"):
        return OracleResult(sem, budget, _assumption_level(framework, sem, budget, spec))
    if len(framework.rules) > MAX_RULES:
        raise ValueError(f"oracle refuses more than {MAX_RULES} rules")
    nodes, att = oracle_graph(framework, spec)
    result = _abstract(nodes, att, sem, budget, spec)
    if mode == "argument":
        return OracleResult(sem, budget, result)
    if mode != "assumption":
        raise ValueError(f"unknown mode {mode!r}")
    projected: dict[frozenset, Weight] = {}
    for members, cost in result:
        delta = frozenset(p for a in members for p in a.premises)
        if delta not in projected or cost < projected[delta]:
            projected[delta] = cost
    return OracleResult(sem, budget, tuple(sorted(projected.items(), key=lambda t: sorted(t[0]))))


# ---------------------------------------------------------------- abstract


def _abstract(nodes, att, sem, budget, spec):
    if len(nodes) > MAX_NODES or len(att) > MAX_ATTACKS:
        raise ValueError(f"oracle refuses more than {MAX_NODES} nodes or {MAX_ATTACKS} attacks")
    edges = sorted(att, key=lambda e: (nodes.index(e[0]), nodes.index(e[1])))
    best: dict[frozenset, Weight] = {}
    for dropped in _subsets(edges):
        cost = fold_combine(spec, [att[e] for e in dropped])
        if not cost <= budget:
            continue
        kept = frozenset(e for e in edges if e not in dropped)
        for members in _family(nodes, kept, sem):
            if members not in best or cost < best[members]:
                best[members] = cost
    return tuple(sorted(best.items(), key=lambda t: sorted(t[0])))


@lru_cache(maxsize=65536)
def _family(nodes: tuple, att: frozenset, sem: str) -> tuple:
    candidates = [frozenset(s) for s in _subsets(nodes)]

    def attacks(xs, ys):
        return any((x, y) in att for x in xs for y in ys)

    def conflict_free(s):
        return not attacks(s, s)

    def defends(s, a):
        return all(attacks(s, {b}) for b in nodes if (b, a) in att)

    def admissible(s):
        return conflict_free(s) and all(defends(s, a) for a in s)

    def complete(s):
        return admissible(s) and all(a in s for a in nodes if defends(s, a))

    def rng(s):
        return s | {b for b in nodes if attacks(s, {b})}

    def maximal(family, key=lambda s: s):
        return [s for s in family if not any(key(s) < key(t) for t in family)]

    cf = [s for s in candidates if conflict_free(s)]
    if sem == "conflict-free":
        out = cf
    elif sem == "naive":
        out = maximal(cf)
    elif sem == "stable":
        out = [s for s in cf if rng(s) == set(nodes)]
    elif sem == "stage":
        out = maximal(cf, rng)
    else:
        adm = [s for s in cf if admissible(s)]
        if sem == "admissible":
            out = adm
        elif sem == "preferred":
            out = maximal(adm)
        elif sem == "semi-stable":
            out = maximal(adm, rng)
        else:
            comp = [s for s in adm if complete(s)]
            if sem == "complete":
                out = comp
            else:
                out = [s for s in comp if all(s <= t for t in comp)]
    return tuple(out)


# ---------------------------------------------------------------- structured


def _weight(fw, atom, spec):
    if atom in fw.assumptions:
        return spec.one
    return fw.weights.get(atom, spec.one)


def oracle_arguments(fw) -> list[OracleArgument]:
    """Every rule subset that forms exactly one proof tree, plus assumption arguments."""
    rules = list(fw.rules)
    asms = set(fw.assumptions)
    found = {OracleArgument((a,), a, ()) for a in fw.assumptions}
    for chosen in _subsets(rules):
        heads = [r.head for r in chosen]
        if not chosen or len(set(heads)) != len(heads):
            continue
        rule_of = {r.head: r for r in chosen}
        for root in heads:
            used, premises = set(), set()
            ok = True

            def walk(atom, path):
                nonlocal ok
                if atom in asms:
                    premises.add(atom)
                    return
                if atom in path or atom not in rule_of:
                    ok = False
                    return
                r = rule_of[atom]
                used.add(r.id)
                for b in r.body:
                    walk(b, path | {atom})

            walk(root, frozenset())
            if ok and used == {r.id for r in chosen}:
                ids = tuple(r.id for r in rules if r.id in used)
                found.add(OracleArgument(tuple(sorted(premises)), root, ids))
    return sorted(found)


def oracle_graph(fw, spec: Semiring | None = None):
    spec = spec or fw.semiring
    args = oracle_arguments(fw)
    body = {r.id: r.body for r in fw.rules}
    att = {}
    for x in args:
        wx = spec.one
        for rid in x.rules:
            for b in body[rid]:
                wx = spec.aggregate(wx, _weight(fw, b, spec))
        for psi in fw.assumptions:
            if fw.contrary[psi] != x.conclusion:
                continue
            for y in args:
                if psi in y.premises:
                    att[(x, y)] = wx
    return tuple(args), att


def oracle_instances(fw, delta, spec: Semiring | None = None) -> frozenset:
    """(contrary, target, weight) triples the ASP encoding derives for in-set ``delta``."""
    spec = spec or fw.semiring
    supported = set(delta)
    while True:
        new = {r.head for r in fw.rules if set(r.body) <= supported} - supported
        if not new:
            break
        supported |= new
    fired = [r for r in fw.rules if set(r.body) <= supported]

    def base(x):
        vals = set()
        if x in delta:
            vals.add(spec.one)
        if x in fw.weights:
            vals.add(fw.weights[x])
        return vals

    values = {x: base(x) | {INF} for x in supported}
    while True:
        lowest = {x: min(v) for x, v in values.items()}
        nxt = {x: base(x) for x in supported}
        for r in fired:
            v = spec.one
            for b in r.body:
                v = spec.aggregate(v, lowest[b])
            nxt[r.head].add(v)
        if nxt == values:
            break
        values = nxt
    return frozenset(
        (fw.contrary[a], a, w) for a in fw.assumptions if fw.contrary[a] in supported for w in values[fw.contrary[a]]
    )


def _assumption_level(fw, sem, budget, spec):
    asms = list(fw.assumptions)
    cands = [frozenset(s) for s in _subsets(asms)]
    inst = {d: oracle_instances(fw, d, spec) for d in cands}

    # instances that must be dropped for a set to be conflict-free
    clash = {d: frozenset(t for t in inst[d] if t[1] in d) for d in cands}

    best: dict[frozenset, Weight] = {}
    for d in cands:
        for dropped in _subsets(sorted(inst[d], key=repr)):
            dropped = set(dropped)
            if not clash[d] <= dropped:
                continue
            cost = fold_combine(spec, [t[2] for t in dropped])
            if not cost <= budget:
                continue
            live = inst[d] - dropped
            if sem == "stable" and not all(a in d or any(t[1] == a for t in live) for a in asms):
                continue
            if sem == "naive" and any(d < e and clash[e] <= dropped for e in cands):
                continue
            if d not in best or cost < best[d]:
                best[d] = cost
    return tuple(sorted(best.items(), key=lambda t: sorted(t[0])))
