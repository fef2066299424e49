"""Run the bundled worked examples and print what the solver finds."""
from __future__ import annotations

import argparse

from waba import (
    ADDITIVE,
    INF,
    assumption_extensions,
    budget_extensions,
    build_attack_graph,
    examples_path,
    parse_document,
)
from waba.output import emit_results


def load(name):
    return parse_document(examples_path(name).read_text())


def show(title, exts, fw=None):
    print(f"== {title}")
    print(emit_results(exts, "human", fw))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", default=None, help="extra budget for the weighted dilemma (N or inf)")
    args = ap.parse_args()

    fw = load("ex1_aba.waba")
    show("ex1: argument-level stable", budget_extensions(build_attack_graph(fw), "stable", 0), fw)

    cycle = load("ex2_waaf.waba")
    for b in (0, 3):
        show(f"ex2: stable, additive, budget {b}", budget_extensions(cycle, "stable", b, ADDITIVE))

    fw = load("ex3_waba.waba")
    print("== ex3: attack graph")
    for (x, y), w in build_attack_graph(fw).attacks.items():
        print(f"  {x}  ->  {y}   [{w}]")
    print()

    for name in ("patient_aba.waba", "patient_norefusal.waba"):
        fw = load(name)
        show(f"{name}: stable", assumption_extensions(fw, "stable", 0), fw)

    fw = load("patient_waba.waba")
    budgets = [0, INF]
    if args.budget is not None:
        budgets.append(INF if args.budget == "inf" else int(args.budget))
    for b in budgets:
        show(f"patient_waba: stable, budget {b}", assumption_extensions(fw, "stable", b), fw)


if __name__ == "__main__":
    main()
