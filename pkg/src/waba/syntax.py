"""Line-oriented text format for wABA frameworks and weighted abstract frameworks.

Structured statements::

    asm a b            # assumptions
    ctr a ca           # contrary of a is ca
    rule ca <- b, d    # rule; `rule d <-` is a fact
    w d 5              # weight of d

Abstract statements (a document uses one family or the other)::

    arg a b c
    att a b 2          # attack a -> b with weight 2; weight defaults to inf

Atoms are lowercase identifiers optionally followed by a balanced
parenthesised suffix, e.g. ``action(give_meds)``; the suffix is opaque.
"""
from __future__ import annotations

from dataclasses import dataclass

from .framework import Framework, build_framework
from .semantics import AbstractFramework
from .semiring import INF, MINMAX, Semiring, format_weight, parse_weight


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass
class _Token:
    text: str
    column: int  # 1-based


_PUNCT = {",", "<-"}


def _strip_comment(line: str) -> str:
    depth = 0
    for i, ch in enumerate(line):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "#" and depth == 0:
            return line[:i]
    return line


def _tokenize(line: str, lineno: int) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if ch.isspace():
            i += 1
        elif ch == ",":
            tokens.append(_Token(",", i + 1))
            i += 1
        elif line.startswith("<-", i):
            tokens.append(_Token("<-", i + 1))
            i += 2
        else:
            start, depth = i, 0
            while i < n:
                ch = line[i]
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                    if depth < 0:
                        raise ParseError("unbalanced ')'", lineno, i + 1)
                elif depth == 0 and (ch.isspace() or ch == "," or line.startswith("<-", i)):
                    break
                i += 1
            if depth:
                raise ParseError("unbalanced '('", lineno, start + 1)
            tokens.append(_Token(line[start:i], start + 1))
    return tokens


def _atom(tok: _Token, lineno: int) -> str:
    text = tok.text
    head = text.split("(", 1)[0]
    if not head or not (head[0].islower() or head[0] == "_") or not all(c.isalnum() or c == "_" for c in head):
        raise ParseError(f"invalid atom {text!r}", lineno, tok.column)
    if "(" in text and not text.endswith(")"):
        raise ParseError(f"invalid atom {text!r}", lineno, tok.column)
    return text


def _weight(tok: _Token, lineno: int, scale: int):
    try:
        return parse_weight(tok.text, scale)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, tok.column) from None


def parse_document(text: str, scale: int = 1, semiring: Semiring = MINMAX) -> Framework | AbstractFramework:
    """Parse either document family; raises ParseError with line and column."""
    asms: list[str] = []
    contrary: dict[str, str] = {}
    rules: list[tuple[str, tuple[str, ...]]] = []
    weights: dict[str, int] = {}
    nodes: list[str] = []
    attacks: dict[tuple[str, str], object] = {}
    kinds: set[str] = set()
    first_line = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(_strip_comment(raw), lineno)
        if not toks:
            continue
        kw, args = toks[0], toks[1:]
        family = "abstract" if kw.text in ("arg", "att") else "structured"
        kinds.add(family)
        first_line.setdefault(family, lineno)
        if len(kinds) > 1:
            raise ParseError("cannot mix arg/att statements with structured statements", lineno, kw.column)
        for t in args:
            if t.text in _PUNCT and not (kw.text == "rule"):
                raise ParseError(f"unexpected {t.text!r}", lineno, t.column)

        if kw.text == "asm":
            if not args:
                raise ParseError("asm needs at least one atom", lineno, kw.column)
            asms.extend(_atom(t, lineno) for t in args)
        elif kw.text == "ctr":
            if len(args) != 2:
                raise ParseError("ctr takes an assumption and its contrary", lineno, kw.column)
            a, c = _atom(args[0], lineno), _atom(args[1], lineno)
            if a in contrary:
                raise ParseError(f"duplicate contrary declaration for {a}", lineno, args[0].column)
            contrary[a] = c
        elif kw.text == "rule":
            rules.append(_rule(args, lineno, kw))
        elif kw.text == "w":
            if len(args) != 2:
                raise ParseError("w takes an atom and a weight", lineno, kw.column)
            name = _atom(args[0], lineno)
            if name in weights:
                raise ParseError(f"duplicate weight for {name}", lineno, args[0].column)
            weights[name] = _weight(args[1], lineno, scale)
        elif kw.text == "arg":
            if not args:
                raise ParseError("arg needs at least one id", lineno, kw.column)
            for t in args:
                name = _atom(t, lineno)
                if name in nodes:
                    raise ParseError(f"duplicate argument {name}", lineno, t.column)
                nodes.append(name)
        elif kw.text == "att":
            if len(args) not in (2, 3):
                raise ParseError("att takes attacker, target and an optional weight", lineno, kw.column)
            x, y = _atom(args[0], lineno), _atom(args[1], lineno)
            for t, name in ((args[0], x), (args[1], y)):
                if name not in nodes:
                    raise ParseError(f"undeclared argument {name}", lineno, t.column)
            if (x, y) in attacks:
                raise ParseError(f"duplicate attack ({x}, {y})", lineno, kw.column)
            attacks[(x, y)] = _weight(args[2], lineno, scale) if len(args) == 3 else INF
        else:
            raise ParseError(f"unknown statement {kw.text!r}", lineno, kw.column)

    if kinds == {"abstract"}:
        return AbstractFramework(tuple(nodes), attacks)
    if not asms:
        raise ParseError("the set of assumptions must be nonempty", first_line.get("structured", 0))
    return build_framework(asms, contrary, rules, weights, semiring=semiring)


def _rule(args: list[_Token], lineno: int, kw: _Token) -> tuple[str, tuple[str, ...]]:
    if len(args) < 2 or args[1].text != "<-":
        col = args[1].column if len(args) > 1 else kw.column
        raise ParseError("expected `rule <head> <- <body>`", lineno, col)
    head = _atom(args[0], lineno)
    body: list[str] = []
    rest = args[2:]
    expect_atom = True
    for t in rest:
        if expect_atom:
            if t.text in _PUNCT:
                raise ParseError(f"expected an atom, found {t.text!r}", lineno, t.column)
            body.append(_atom(t, lineno))
        elif t.text != ",":
            raise ParseError(f"expected ',', found {t.text!r}", lineno, t.column)
        expect_atom = not expect_atom
    if rest and expect_atom:
        raise ParseError("trailing ','", lineno, rest[-1].column)
    return head, tuple(body)


def parse_framework(text: str, scale: int = 1, semiring: Semiring = MINMAX) -> Framework:
    doc = parse_document(text, scale=scale, semiring=semiring)
    if not isinstance(doc, Framework):
        raise ParseError("expected a structured wABA document, found an abstract one")
    return doc


def parse_abstract(text: str, scale: int = 1) -> AbstractFramework:
    doc = parse_document(text, scale=scale)
    if not isinstance(doc, AbstractFramework):
        raise ParseError("expected an abstract (arg/att) document")
    return doc


def format_framework(fw: Framework) -> str:
    """Canonical text form; ``parse_framework(format_framework(fw)) == fw``."""
    lines = ["asm " + " ".join(fw.assumptions)]
    for a in fw.assumptions:
        if a in fw.contrary:
            lines.append(f"ctr {a} {fw.contrary[a]}")
    for r in fw.rules:
        lines.append(f"rule {r.head} <-" + (" " + ", ".join(r.body) if r.body else ""))
    for name, w in fw.weights.items():
        lines.append(f"w {name} {format_weight(w, top='inf')}")
    return "\n".join(lines) + "\n"


def format_abstract(af: AbstractFramework) -> str:
    lines = ["arg " + " ".join(str(n) for n in af.nodes)]
    for (x, y), w in af.attacks.items():
        lines.append(f"att {x} {y} {format_weight(w, top='inf')}")
    return "\n".join(lines) + "\n"
