"""A tiny language for connection sets, plus a canonical JSON format.

Grammar (whitespace-insensitive)::

    expr  := term (('+' | '-') term)*
    term  := NAME '(' [int (',' int)*] ')'  |  'identity'
    int   := ['-'] DIGITS

Evaluation unions the first term with every ``+`` term, then removes every
``-`` term, regardless of their textual order.  Primitives (``r`` is the
exponent of ``a``, ``j`` of ``b``)::

    elem(r,j)      {a^r b^j}
    cyclic(r,j)    the cyclic subgroup <a^r b^j>  (contains e)
    coset(j)       <a> b^j
    evencoset(j)   {a^r b^j : r even}
    oddcoset(j)    {a^r b^j : r odd}
    class(r,j)     conjugacy class of a^r b^j
    genclass(r,j)  generators of <a^r b^j>
    identity       {e}

JSON: ``{"n": 2, "elements": [[r, j], ...]}`` with elements sorted by ``(j, r)``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import CayleyError, ContractError
from .group import ConnectionSet, Element, generator_class, get_group

ARITY = {
    "elem": 2,
    "cyclic": 2,
    "coset": 1,
    "evencoset": 1,
    "oddcoset": 1,
    "class": 2,
    "genclass": 2,
    "identity": 0,
}


class SetSyntaxError(CayleyError, ValueError):
    def __init__(self, message: str, offset: int, expected: set[str] | frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class UnknownPrimitiveError(SetSyntaxError):
    pass


class EvaluationError(CayleyError, ValueError):
    pass


class SetFormatError(CayleyError, ValueError):
    pass


@dataclass(frozen=True)
class Primitive:
    name: str
    args: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.name == "identity":
            return "identity"
        return f"{self.name}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class SetExpr:
    terms: tuple[tuple[str, Primitive], ...]  # (sign, primitive); first sign is '+'

    def __str__(self) -> str:
        out = str(self.terms[0][1])
        for sign, prim in self.terms[1:]:
            out += f" {sign} {prim}"
        return out


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            off = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise SetSyntaxError(f"unexpected character {text[off]!r}", off)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None, expected: set[str] | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = expected or {value or kind}
            got = tok[1] or "end of input"
            raise SetSyntaxError(f"unexpected {got!r}", tok[2], want)
        self.i += 1
        return tok

    def expr(self) -> SetExpr:
        terms = [("+", self.term())]
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = self.take("op")[1]
            terms.append((sign, self.term()))
        kind, value, off = self.peek()
        if kind != "eof":
            raise SetSyntaxError(f"unexpected {value!r}", off, {"+", "-", "end of input"})
        return SetExpr(tuple(terms))

    def term(self) -> Primitive:
        _, name, off = self.take("name", expected={"primitive name"})
        if name not in ARITY:
            raise UnknownPrimitiveError(f"unknown primitive {name!r}", off, set(ARITY))
        arity = ARITY[name]
        if arity == 0:
            if self.peek()[:2] == ("op", "("):
                self.take("op", "(")
                self.take("op", ")")
            return Primitive(name)
        self.take("op", "(")
        args = [self.integer()]
        for _ in range(arity - 1):
            self.take("op", ",")
            args.append(self.integer())
        self.take("op", ")", expected={")"} if len(args) == arity else {",", ")"})
        return Primitive(name, tuple(args))

    def integer(self) -> int:
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take("op", "-")
            sign = -1
        return sign * int(self.take("int", expected={"integer", "-"})[1])


def parse(text: str) -> SetExpr:
    return _Parser(text).expr()


def format_expr(expr: SetExpr) -> str:
    return str(expr)


def primitive_set(prim: Primitive, n: int) -> frozenset[Element]:
    G = get_group(n)
    name, args = prim.name, prim.args
    if name == "identity":
        return frozenset({G.identity})
    if name in ("coset", "evencoset", "oddcoset"):
        (j,) = args
        if name == "coset":
            return G.coset(j)
        return G.parity_coset(j, 0 if name == "evencoset" else 1)
    x = G.element(*args)
    if name == "elem":
        return frozenset({x})
    if name == "cyclic":
        return G.cyclic_subgroup(x)
    if name == "class":
        return G.class_of[x].members
    if name == "genclass":
        return generator_class(x)
    raise EvaluationError(f"unknown primitive {name!r}")


def evaluate(expr: SetExpr, n: int) -> ConnectionSet:
    if n < 1:
        raise EvaluationError(f"n must be >= 1, got {n}")
    members: set[Element] = set()
    for sign, prim in expr.terms:
        if sign == "+":
            members |= primitive_set(prim, n)
    for sign, prim in expr.terms:
        if sign == "-":
            members -= primitive_set(prim, n)
    G = get_group(n)
    if G.identity in members:
        raise EvaluationError("set contains the identity; subtract 'identity' explicitly")
    if not members:
        raise EvaluationError("set is empty")
    return ConnectionSet(n, members)


def parse_set(text: str, n: int) -> ConnectionSet:
    return evaluate(parse(text), n)


def to_json(S: ConnectionSet) -> str:
    return json.dumps(to_obj(S), separators=(",", ":"))


def to_obj(S: ConnectionSet) -> dict:
    return {"n": S.n, "elements": [[r, j] for r, j in S.pairs()]}


def from_obj(obj) -> ConnectionSet:
    if not isinstance(obj, dict) or set(obj) != {"n", "elements"}:
        raise SetFormatError('expected an object with keys "n" and "elements"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SetFormatError(f"n must be a positive integer, got {n!r}")
    elems = obj["elements"]
    if not isinstance(elems, list):
        raise SetFormatError('"elements" must be a list')
    out = []
    for item in elems:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise SetFormatError(f"element {item!r} is not a pair of integers")
        r, j = item
        if not (0 <= r < 2 * n and 0 <= j < 4):
            raise SetFormatError(f"element {item!r} out of range for n={n} (need 0<=r<{2 * n}, 0<=j<4)")
        out.append(Element(n, r, j))
    if len(set(out)) != len(out):
        raise SetFormatError("duplicate elements")
    try:
        return ConnectionSet(n, out)
    except ContractError as exc:
        raise SetFormatError(str(exc)) from exc


def from_json(text: str) -> ConnectionSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SetFormatError(f"malformed JSON: {exc}") from exc
    return from_obj(obj)
