import random

import pytest

from generators import random_abstract

from waba.attacks import build_attack_graph
from waba.derivations import ResourceLimitError
from waba.oracle import oracle_solve
from waba.semantics import (
    SEMANTICS,
    AbstractFramework,
    BudgetedExtension,
    budget_extensions,
    canonical_semantics,
    extension_cost,
    grounded_extension,
    sigma_extensions,
)
from waba.semiring import ADDITIVE, INF, MINMAX

CYCLE = AbstractFramework(("a", "b", "c"), {("a", "b"): 2, ("b", "c"): 1, ("c", "a"): 4})


def labels(family):
    return {frozenset(str(m) for m in s) for s in family}


def af(nodes, *edges):
    return AbstractFramework.from_triples(nodes, edges)


def test_example1_stable(corpus):
    graph = build_attack_graph(corpus("ex1_aba.waba"))
    assert labels(sigma_extensions(graph, "stable")) == {frozenset({"{b} |- b", "{b} |- ca"})}


def test_example1_grounded_is_empty(corpus):
    # every argument has an attacker, so nothing is defended by the empty set
    graph = build_attack_graph(corpus("ex1_aba.waba"))
    assert grounded_extension(graph) == frozenset()
    assert all(any(y == x for _, y in graph.attacks) for x in graph.nodes)


def test_empty_framework():
    empty = AbstractFramework(())
    assert grounded_extension(empty) == frozenset()
    for sem in SEMANTICS:
        assert sigma_extensions(empty, sem) == [frozenset()]


def test_cycle_has_no_stable_and_empty_grounded():
    assert sigma_extensions(CYCLE, "stable") == []
    assert grounded_extension(CYCLE) == frozenset()


def test_unattacked_node_is_grounded():
    assert grounded_extension(af(["a"])) == {"a"}
    assert grounded_extension(af(["a", "b", "c"], ("a", "b"), ("b", "c"))) == {"a", "c"}


def test_classic_mutual_attack():
    g = af(["a", "b"], ("a", "b"), ("b", "a"))
    assert sigma_extensions(g, "preferred") == [{"a"}, {"b"}]
    assert sigma_extensions(g, "complete") == [frozenset(), {"a"}, {"b"}]
    assert sigma_extensions(g, "grounded") == [frozenset()]
    assert sigma_extensions(g, "admissible") == [frozenset(), {"a"}, {"b"}]


def test_self_attacker():
    g = af(["a", "b"], ("a", "a"), ("a", "b"))
    assert sigma_extensions(g, "conflict-free") == [frozenset(), {"b"}]
    assert sigma_extensions(g, "naive") == [{"b"}]
    assert sigma_extensions(g, "stable") == []
    assert sigma_extensions(g, "preferred") == [frozenset()]


def test_semi_stable_need_not_be_stage():
    g = af(["a", "b", "c"], ("a", "a"), ("a", "b"))
    assert sigma_extensions(g, "semi-stable") == [{"c"}]
    assert sigma_extensions(g, "stage") == [{"b", "c"}]


def test_grounded_need_not_be_preferred():
    g = af(["a", "b"], ("a", "b"), ("b", "a"))
    assert not set(sigma_extensions(g, "grounded")) & set(sigma_extensions(g, "preferred"))


def test_aliases():
    assert canonical_semantics("STB") == "stable"
    assert canonical_semantics("semi_stable") == "semi-stable"
    with pytest.raises(ValueError):
        canonical_semantics("ideal")


def test_cycle_additive_budgets():
    assert budget_extensions(CYCLE, "stable", 0, ADDITIVE) == []
    got = {e.members: e for e in budget_extensions(CYCLE, "stable", 3, ADDITIVE)}
    assert set(got) == {frozenset("ab"), frozenset("bc")}
    assert got[frozenset("ab")].discarded == (("a", "b", 2),)
    assert got[frozenset("ab")].cost == 2
    assert got[frozenset("bc")].cost == 1


def test_cycle_minmax_budget():
    got = {e.members: e.cost for e in budget_extensions(CYCLE, "stable", 2, MINMAX)}
    assert got == {frozenset("ab"): 2, frozenset("bc"): 1}


def test_zero_budget_matches_plain_semantics():
    rng = random.Random(5)
    for _ in range(150):
        g = random_abstract(rng, min_weight=1)
        for sem in SEMANTICS:
            got = budget_extensions(g, sem, 0, MINMAX)
            assert [e.members for e in got] == sigma_extensions(g, sem)
            assert all(e.discarded == () and e.cost == 0 for e in got)


def test_witnesses_match_oracle_costs():
    rng = random.Random(6)
    for _ in range(120):
        g = random_abstract(rng, max_nodes=5, max_attacks=7)
        spec = rng.choice([MINMAX, ADDITIVE])
        budget = rng.choice([0, 2, 5, INF])
        for sem in SEMANTICS:
            got = budget_extensions(g, sem, budget, spec)
            want = oracle_solve(g, sem, budget, spec=spec).extensions
            assert [(e.members, e.cost) for e in got] == [(m, c) for m, c in want], (sem, budget)
            for e in got:
                assert extension_cost(spec, e.discarded) == e.cost <= budget
                assert set(sigma_extensions(g.without((x, y) for x, y, _ in e.discarded), sem)) >= {e.members}


def test_witness_tie_break_prefers_fewer_attacks():
    g = af(["a", "b", "c"], ("a", "b", 3), ("c", "b", 3), ("a", "c", 3))
    # {a,b,c} needs all three internal attacks gone
    full = next(e for e in budget_extensions(g, "conflict-free", INF, MINMAX) if e.members == {"a", "b", "c"})
    assert len(full.discarded) == 3 and full.cost == 3


def test_output_is_canonical():
    g = af(["b", "a"], ("a", "b", 1))
    got = budget_extensions(g, "conflict-free", INF)
    assert got == sorted(got, key=BudgetedExtension.sort_key)


def test_node_guard():
    big = AbstractFramework(tuple(range(23)))
    with pytest.raises(ResourceLimitError):
        sigma_extensions(big, "stable")


def test_discard_guard():
    nodes = tuple(range(6))
    edges = {(i, j): 1 for i in nodes for j in nodes}
    with pytest.raises(ResourceLimitError):
        budget_extensions(AbstractFramework(nodes, edges), "preferred", 5)
    # the direct path needs no discard enumeration
    assert len(budget_extensions(AbstractFramework(nodes, edges), "stable", 5)) == 63


def test_abstract_validation():
    with pytest.raises(ValueError):
        AbstractFramework(("a", "a"))
    with pytest.raises(ValueError):
        AbstractFramework(("a",), {("a", "z"): 1})
    with pytest.raises(ValueError):
        AbstractFramework.from_triples(["a", "b"], [("a", "b", 1), ("a", "b", 2)])
    assert AbstractFramework.from_triples(["a", "b"], [("a", "b")]).attacks == {("a", "b"): INF}
