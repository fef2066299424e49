import itertools
import random

import pytest

from waba.semiring import (
    ADDITIVE,
    INF,
    MINMAX,
    additive_semiring,
    fold_aggregate,
    fold_combine,
    format_weight,
    get_semiring,
    is_weight,
    minmax_semiring,
    parse_weight,
)


def test_minmax_shape():
    s = minmax_semiring()
    assert (s.zero, s.one) == (0, INF)
    assert s.aggregate(7, INF) == 7
    assert s.aggregate(9, 7) == 7
    assert fold_combine(s, []) == 0


def test_additive_budget_sums():
    s = additive_semiring()
    assert s.combine(2, 1) == 3
    assert s.combine(5, 0) == 5
    assert s.combine(4, INF) == INF
    assert fold_combine(s, [2, 1]) == 3


def test_additive_aggregate_is_product():
    assert ADDITIVE.aggregate(3, 4) == 12
    assert ADDITIVE.aggregate(0, INF) == 0
    assert ADDITIVE.aggregate(2, INF) == INF
    assert fold_aggregate(ADDITIVE, []) == 1


def test_min_plus_would_not_distribute():
    # the reason the additive aggregate is not min
    a = b = c = 1
    assert min(a, b + c) != min(a, b) + min(a, c)


@pytest.mark.parametrize(
    "values,expected", [([INF, 5], 5), ([], INF), ([INF, 5, INF, 3], 3)]
)
def test_fold_aggregate_minmax(values, expected):
    assert fold_aggregate(MINMAX, values) == expected


def test_fold_combine_minmax():
    assert fold_combine(MINMAX, [7, 7]) == 7
    assert fold_combine(MINMAX, []) == 0


def test_inf_above_every_finite():
    assert all(INF > v for v in (0, 1, 10**30))


def test_folds_ignore_order():
    rng = random.Random(3)
    for spec in (MINMAX, ADDITIVE):
        for _ in range(200):
            vals = [rng.choice([0, 1, 2, 5, 9, INF]) for _ in range(rng.randint(0, 6))]
            shuffled = vals[:]
            rng.shuffle(shuffled)
            assert fold_combine(spec, vals) == fold_combine(spec, shuffled)
            assert fold_aggregate(spec, vals) == fold_aggregate(spec, shuffled)


def test_small_carrier_exhaustive_axioms():
    carrier = [0, 1, 2, 3, 7, INF]
    for spec in (MINMAX, ADDITIVE):
        for x, y, z in itertools.product(carrier, repeat=3):
            assert spec.aggregate(x, spec.combine(y, z)) == spec.combine(spec.aggregate(x, y), spec.aggregate(x, z))
            assert spec.aggregate(spec.combine(y, z), x) == spec.combine(spec.aggregate(y, x), spec.aggregate(z, x))


@pytest.mark.parametrize(
    "text,scale,expected",
    [("7", 1, 7), ("0.7", 10, 7), ("inf", 1, INF), ("#sup", 1, INF), ("1.25", 100, 125), ("0", 1, 0)],
)
def test_parse_weight(text, scale, expected):
    assert parse_weight(text, scale) == expected


@pytest.mark.parametrize("text", ["-1", "abc", "0.7", "nan"])
def test_parse_weight_rejects(text):
    with pytest.raises(ValueError):
        parse_weight(text)


def test_format_and_lookup():
    assert format_weight(INF) == "#sup"
    assert format_weight(INF, top="inf") == "inf"
    assert format_weight(9) == "9"
    assert get_semiring("additive") is ADDITIVE
    with pytest.raises(ValueError):
        get_semiring("tropical")
    assert is_weight(0) and is_weight(INF)
    assert not is_weight(-2) and not is_weight(True) and not is_weight(1.5)
