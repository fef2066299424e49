"""clingo export: framework facts plus the budgeted-semantics encoding."""
from __future__ import annotations

from dataclasses import dataclass

from .framework import Framework
from .semantics import canonical_semantics
from .semiring import Weight, format_weight

CORE = """\
budget(beta).

in(X)  :- assumption(X), not out(X).
out(X) :- assumption(X), not in(X).

supported(X) :- assumption(X), in(X).
supported(X) :- head(R,X), triggered_by_in(R).
triggered_by_in(R) :- head(R,_), supported(X) : body(R,X).

supported_with_weight(X,#sup) :- assumption(X), in(X).
supported_with_weight(X,W) :- supported(X), weight(X,W).
supported_with_weight(X,W) :-
    supported(X), head(R,X),
    W = #min{ V, B : body(R,B), supported_with_weight(B,V) }.

attacks_with_weight(X,Y,W) :-
    supported(X), supported_with_weight(X,W),
    assumption(Y), contrary(Y,X).

{ discarded_attack(X,Y,W) : attacks_with_weight(X,Y,W) }.
extension_cost(C) :- C = #max{ W, X, Y : discarded_attack(X,Y,W) }.
:- extension_cost(C), C > B, budget(B).

attacks_successfully_with_weight(X,Y,W) :-
    attacks_with_weight(X,Y,W), not discarded_attack(X,Y,W).

defeated(X) :- attacks_successfully_with_weight(_,X,_).
not_defended(X) :- attacks_successfully_with_weight(Y,X,_), not defeated(Y).
"""

SEMANTICS_RULES = {
    "conflict-free": ":- in(X), defeated(X).\n",
    "admissible": ":- in(X), defeated(X).\n:- in(X), not_defended(X).\n",
    "stable": ":- in(X), defeated(X).\n:- out(X), not defeated(X).\n",
    "naive": ":- in(X), defeated(X).\n#heuristic in(X) : assumption(X). [1,true]\n",
}


@dataclass(frozen=True)
class AspExport:
    fact_text: str
    encoding_text: str

    @property
    def text(self) -> str:
        return self.fact_text + "\n" + self.encoding_text


def _pack(name: str, groups: list[str]) -> str:
    return f"{name}({'; '.join(groups)})."


def export_facts(fw: Framework) -> str:
    lines = [_pack("assumption", list(fw.assumptions))]
    lines.append(_pack("contrary", [f"{a},{fw.contrary[a]}" for a in fw.assumptions]))
    for r in fw.rules:
        line = f"head({r.id},{r.head})."
        if r.body:
            line += " " + _pack("body", [f"{r.id},{b}" for b in r.body])
        lines.append(line)
    if fw.weights:
        lines.append(_pack("weight", [f"{d},{format_weight(w)}" for d, w in fw.weights.items()]))
    return "\n".join(lines) + "\n"


def export_asp(fw: Framework, semantics: str, budget: Weight) -> AspExport:
    sem = canonical_semantics(semantics)
    if sem not in SEMANTICS_RULES:
        raise ValueError(f"no ASP encoding for {sem}; exportable: {', '.join(SEMANTICS_RULES)}")
    encoding = f"#const beta={format_weight(budget)}.\n" + CORE + "\n" + f"% {sem}\n" + SEMANTICS_RULES[sem]
    return AspExport(export_facts(fw), encoding)
