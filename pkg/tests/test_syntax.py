import random

import pytest

from generators import random_abstract, random_framework

from waba.semantics import AbstractFramework
from waba.semiring import INF
from waba.syntax import ParseError, format_abstract, format_framework, parse_abstract, parse_document, parse_framework


def test_example1_statements():
    fw = parse_framework("asm a b\nctr a ca\nctr b cb\nrule ca <- a\nrule ca <- b\nrule cb <- a\n")
    assert fw.assumptions == ("a", "b")
    assert [(r.head, r.body) for r in fw.rules] == [("ca", ("a",)), ("ca", ("b",)), ("cb", ("a",))]


def test_patient_weights(corpus):
    fw = corpus("patient_waba.waba")
    assert dict(fw.weights) == {"risk": 7, "refuses_meds": 9}
    assert [r.id for r in fw.rules[:2]] == ["ctx1", "ctx2"]


def test_decimal_weights_scale():
    fw = parse_framework("asm a\nctr a c\nrule risk <-\nw risk 0.7\n", scale=10)
    assert fw.weights["risk"] == 7
    with pytest.raises(ParseError, match="scale"):
        parse_framework("asm a\nctr a c\nw risk 0.75\n", scale=10)


def test_term_atoms_and_comments():
    fw = parse_framework("asm s  # the only assumption\nctr s n(x, y)\nrule n(x, y) <- s, f(a,b)\n")
    assert fw.contrary["s"] == "n(x, y)"
    assert fw.rules[0].body == ("s", "f(a,b)")


def test_empty_document():
    with pytest.raises(ParseError, match="nonempty"):
        parse_document("")
    with pytest.raises(ParseError, match="nonempty"):
        parse_document("# just a comment\n")


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("asm a\nctr a ca\nctr a cb\n", 3, "duplicate contrary"),
        ("asm a\nfoo a\n", 2, "unknown statement"),
        ("asm a\nrule ca a\n", 2, "expected"),
        ("asm a\nrule ca <- a,\n", 2, "trailing"),
        ("asm a\nrule ca <- a b\n", 2, "expected ','"),
        ("asm a\nw d x\n", 2, "not a decimal"),
        ("asm a\nw d 1\nw d 2\n", 3, "duplicate weight"),
        ("asm a\nctr a f(b\n", 2, "unbalanced"),
        ("asm Abc\n", 1, "invalid atom"),
        ("asm a\narg x\n", 2, "cannot mix"),
        ("arg x y\natt x z\n", 2, "undeclared"),
        ("arg x y\natt x y 1\natt x y 2\n", 3, "duplicate attack"),
    ],
)
def test_errors_carry_line(text, line, fragment):
    with pytest.raises(ParseError, match=fragment) as info:
        parse_document(text)
    assert info.value.line == line
    assert info.value.column >= 1


def test_column_points_at_token():
    with pytest.raises(ParseError) as info:
        parse_document("asm a\nctr a ca\n   ctr a cb\n")
    assert info.value.column == 8


def test_weight_on_undeclared_atom_accepted():
    fw = parse_framework("asm a\nctr a c\nw ghost 3\n")
    assert "ghost" in fw.language


def test_abstract_document(corpus):
    g = corpus("ex2_waaf.waba")
    assert isinstance(g, AbstractFramework)
    assert dict(g.attacks) == {("a", "b"): 2, ("b", "c"): 1, ("c", "a"): 4}
    assert parse_abstract("arg x y\natt x y\n").attacks == {("x", "y"): INF}


def test_kind_mismatch():
    with pytest.raises(ParseError):
        parse_framework("arg x\n")
    with pytest.raises(ParseError):
        parse_abstract("asm a\nctr a c\n")


def test_round_trip_samples(corpus):
    for name in ("ex1_aba.waba", "ex3_waba.waba", "patient_aba.waba", "patient_waba.waba"):
        fw = corpus(name)
        assert parse_framework(format_framework(fw)) == fw
    rng = random.Random(41)
    for _ in range(100):
        fw = random_framework(rng)
        assert parse_framework(format_framework(fw)) == fw
        g = random_abstract(rng)
        if g.nodes:
            assert parse_abstract(format_abstract(g)) == g


def test_inf_weight_round_trips():
    fw = parse_framework("asm a\nctr a c\nw d inf\n")
    assert fw.weights["d"] == INF
    assert "w d inf" in format_framework(fw)
