"""Human-readable and JSON renderings of extensions and attack graphs."""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from .derivations import argument_weight, supported_atoms
from .framework import Framework
from .semantics import AbstractFramework, BudgetedExtension, _set_key
from .semiring import INF, Weight, format_weight


def json_weight(w: Weight):
    return "inf" if w == INF else int(w)


def answer_order(extensions: Iterable[BudgetedExtension]) -> list[BudgetedExtension]:
    return sorted(extensions, key=lambda e: (e.cost, _set_key(e.members)))


def _is_argument(member) -> bool:
    return hasattr(member, "premises") and hasattr(member, "conclusion")


def _assumptions_of(ext: BudgetedExtension, fw: Framework | None) -> frozenset[str] | None:
    if fw is None:
        return None
    if all(_is_argument(m) for m in ext.members):
        return frozenset(p for m in ext.members for p in m.premises)
    if all(m in fw.assumption_set for m in ext.members):
        return frozenset(ext.members)
    return None


def _derived_weights(fw: Framework, delta: frozenset[str]) -> list[tuple[str, list[Weight]]]:
    """Supported atoms that are neither assumptions nor facts, with their weights."""
    facts = {r.head for r in fw.rules if not r.body}
    profile = supported_atoms(fw, delta)
    shown = sorted(a for a in profile.supported if a not in fw.assumption_set and a not in facts)
    return [(a, sorted(profile.weights[a])) for a in shown]


def _arg_token(arg) -> str:
    return "arg({" + ",".join(arg.premises) + "}|-" + arg.conclusion + ")"


def emit_results(extensions: Sequence[BudgetedExtension], fmt: str = "human", framework: Framework | None = None) -> str:
    ordered = answer_order(extensions)
    if fmt == "json":
        return json.dumps(_json_results(ordered, framework), indent=2) + "\n"
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    if not ordered:
        return "UNSATISFIABLE\n"
    blocks = []
    for k, ext in enumerate(ordered, start=1):
        tokens = []
        members = sorted(ext.members)
        if members and _is_argument(members[0]):
            tokens.extend(_arg_token(m) for m in members)
        delta = _assumptions_of(ext, framework)
        if delta is not None:
            tokens.extend(f"in({a})" for a in sorted(delta))
            for atom, ws in _derived_weights(framework, delta):
                tokens.extend(f"supported_with_weight({atom},{format_weight(w)})" for w in ws)
        elif not (members and _is_argument(members[0])):
            tokens.extend(f"in({m})" for m in members)
        tokens.append(f"extension_cost({format_weight(ext.cost)})")
        blocks.append(f"Answer: {k}\n" + " ".join(tokens) + "\n")
    return "\n".join(blocks) + "SATISFIABLE\n"


def _member_json(m):
    if _is_argument(m):
        return {"premises": list(m.premises), "conclusion": m.conclusion, "rules": list(m.rules)}
    return m


def _attack_json(t):
    if hasattr(t, "contrary"):
        return {"contrary": t.contrary, "target": t.target, "weight": json_weight(t.weight)}
    x, y, w = t
    return {"attacker": _member_json(x), "target": _member_json(y), "weight": json_weight(w)}


def _json_results(ordered: list[BudgetedExtension], fw: Framework | None) -> dict:
    out = []
    for ext in ordered:
        item = {"members": [_member_json(m) for m in sorted(ext.members)]}
        delta = _assumptions_of(ext, fw)
        if delta is not None:
            item["assumptions"] = sorted(delta)
            item["supported"] = {a: [json_weight(w) for w in ws] for a, ws in _derived_weights(fw, delta)}
        item["discarded"] = None if ext.discarded is None else [_attack_json(t) for t in ext.discarded]
        item["cost"] = json_weight(ext.cost)
        out.append(item)
    head = ordered[0] if ordered else None
    return {
        "semantics": head.semantics if head else None,
        "budget": json_weight(head.budget) if head else None,
        "count": len(out),
        "extensions": out,
    }


def graph_json(graph: AbstractFramework, fw: Framework | None = None) -> dict:
    ids = {node: f"n{i}" for i, node in enumerate(graph.nodes)}
    nodes = []
    for node in graph.nodes:
        item = {"id": ids[node]}
        if _is_argument(node):
            item.update(_member_json(node))
            item["label"] = str(node)
            if fw is not None:
                item["weight"] = json_weight(argument_weight(fw, node))
        else:
            item["label"] = str(node)
        nodes.append(item)
    edges = [
        {"source": ids[x], "target": ids[y], "weight": json_weight(w)} for (x, y), w in graph.attacks.items()
    ]
    return {"nodes": nodes, "edges": edges}
