"""Generator-expression mini-language.

Grammar::

    expr   := term ('+' term)*
    term   := factor (['*'] factor)*          # juxtaposition multiplies
    factor := atom ['^' INT]
    atom   := 'w' | 'u' | 'v' | 'f' ['_'] INT | INT | '(' expr ')'

Braces around exponents or indices (``w^{13}``, ``f_{2}``) are accepted.
Products are evaluated in written order, which matters because R is not
commutative.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2e
from .f16poly import F16Poly, FactorSet
from .rring import RElem, RPoly


class ExprError(ValueError):
    def __init__(self, msg: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        if pos is not None and text is not None:
            msg = f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^"
        elif pos is not None:
            msg = f"{msg} at position {pos}"
        super().__init__(msg)


@dataclass(frozen=True)
class Token:
    kind: str  # SYM, INT, F, OP, LP, RP, END
    value: object
    pos: int

    def __repr__(self) -> str:
        return f"{self.kind}:{self.value}"


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or ch in "{}":
            i += 1
        elif ch in "wuv":
            toks.append(Token("SYM", ch, i))
            i += 1
        elif ch == "f":
            j = i + 1
            while j < n and text[j] in "_{ ":
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise ExprError("factor reference without index", i, text)
            toks.append(Token("F", int(text[j:k]), i))
            i = k
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("INT", int(text[i:j]), i))
            i = j
        elif ch in "^*+":
            toks.append(Token("OP", ch, i))
            i += 1
        elif ch == "(":
            toks.append(Token("LP", ch, i))
            i += 1
        elif ch == ")":
            toks.append(Token("RP", ch, i))
            i += 1
        else:
            raise ExprError(f"unexpected character {ch!r}", i, text)
    toks.append(Token("END", None, n))
    return toks


# AST: ("sum", [terms]) | ("prod", [factors]) | ("pow", base, e) | ("sym", c) | ("f", i) | ("int", v)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str, tok: Token):
        raise ExprError(msg, tok.pos, self.text)

    def parse(self):
        if self.peek().kind == "END":
            self.fail("empty expression", self.peek())
        node = self.expr()
        if self.peek().kind != "END":
            self.fail("unexpected token", self.peek())
        return node

    def expr(self):
        terms = [self.term()]
        while self.peek().kind == "OP" and self.peek().value == "+":
            self.take()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else ("sum", terms)

    def term(self):
        factors = [self.factor()]
        while True:
            t = self.peek()
            if t.kind == "OP" and t.value == "*":
                self.take()
                factors.append(self.factor())
            elif t.kind in ("SYM", "F", "INT", "LP"):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else ("prod", factors)

    def factor(self):
        base = self.atom()
        if self.peek().kind == "OP" and self.peek().value == "^":
            self.take()
            t = self.take()
            if t.kind != "INT":
                self.fail("exponent must be a nonnegative integer", t)
            return ("pow", base, t.value)
        return base

    def atom(self):
        t = self.take()
        if t.kind == "SYM":
            return ("sym", t.value)
        if t.kind == "F":
            return ("f", t.value, t.pos)
        if t.kind == "INT":
            return ("int", t.value)
        if t.kind == "LP":
            node = self.expr()
            if self.take().kind != "RP":
                self.fail("missing ')'", self.toks[self.i - 1])
            return node
        self.fail("expected an operand", t)


def parse_ast(text: str):
    return _Parser(text).parse()


def _eval(node, factors: FactorSet, n: int, k: int) -> RPoly:
    kind = node[0]
    if kind == "sum":
        out = _eval(node[1][0], factors, n, k)
        for t in node[1][1:]:
            out = out + _eval(t, factors, n, k)
        return out
    if kind == "prod":
        out = _eval(node[1][0], factors, n, k)
        for f in node[1][1:]:
            out = out * _eval(f, factors, n, k)
        return out
    if kind == "pow":
        base, e = node[1], node[2]
        if base[0] == "sym":
            return RPoly.constant(n, _symbol_power(base[1], e, k))
        b = _eval(base, factors, n, k)
        out = RPoly.one(n, k)
        for _ in range(e):
            out = out * b
        return out
    if kind == "sym":
        return RPoly.constant(n, _symbol_power(node[1], 1, k))
    if kind == "f":
        idx = node[1]
        if not 1 <= idx <= len(factors):
            raise ExprError(f"factor f{idx} not in table (have f1..f{len(factors)})", node[2])
        return RPoly.from_f16poly(factors[idx - 1], n, k)
    if kind == "int":
        return RPoly.one(n, k) if node[1] % 2 else RPoly.zero(n, k)
    raise AssertionError(kind)


def _symbol_power(sym: str, e: int, k: int) -> RElem:
    if sym == "w":
        return RElem.scalar(k, gf2e.wpow(e))
    if sym == "u":
        return RElem.monomial(k, e, 0)
    return RElem.monomial(k, 0, e)


def parse(text: str, factors: FactorSet, k: int) -> RPoly:
    """Evaluate a generator expression to an element of R_n, n = factors.n."""
    return _eval(parse_ast(text), factors, factors.n, k)


def format(p: RPoly) -> str:  # noqa: A001 - mirrors parse
    """Inverse of parse: coefficients in scalar-left notation, x^t written as (f_1 + 1)^t."""
    terms = []
    for t in range(p.n - 1, -1, -1):
        c = p.coeffs[t]
        if c.is_zero():
            continue
        body = str(c)
        if t == 0:
            terms.append(body)
            continue
        xs = "(f_1 + 1)" if t == 1 else f"(f_1 + 1)^{t}"
        if body == "1":
            terms.append(xs)
        elif " + " in body:
            terms.append(f"({body}){xs}")
        else:
            terms.append(f"{body}*{xs}")
    return " + ".join(terms) if terms else "0"
