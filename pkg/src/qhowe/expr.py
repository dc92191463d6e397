"""Expression grammar for scalars, operators and spinors.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/'|<juxtaposition>) factor)*
    factor := ('+'|'-') factor | atom ['^' ['+'|'-'] INT]
    atom   := INT | IDENT | '(' expr ')' | IDENT '(' expr (',' expr)* ')'

Unicode generator names are accepted (``γ₁`` for ``g1``, ``∂₂`` for ``d2``,
``∇`` for ``nab``, ``·`` for ``*``). Spinor text is read as a polynomial in
``x1``, ``x2``, ``y``, i.e. as the multipliers ``mu1``, ``mu2``, ``nu`` applied
to ``1 ⊗ 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from qhowe.errors import NotInvertibleError, QHoweError
from qhowe.qarith import RatQ, quantum_binomial, quantum_factorial, quantum_int
from qhowe.qweyl import (
    AlgebraElement,
    brace,
    commutator,
    generator,
    shifted_derivative,
    twisted_commutator,
)
from qhowe.qweyl.monomial import FIELD_NAMES


class ParseError(QHoweError, ValueError):
    def __init__(self, message: str, position: int | None = None, expected: str | None = None):
        self.position = position
        self.expected = expected
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


_UNICODE = [
    ("·", "*"), ("−", "-"), ("⋅", "*"),
    ("μ", "mu"), ("γ", "g"), ("∂", "d"), ("∇", "nab"), ("ω", "w"), ("ν", "nu"),
]
_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),]))")


@dataclass(frozen=True)
class Token:
    kind: str  # int, ident, op, end
    text: str
    pos: int


def _normalise(text: str) -> str:
    for a, b in _UNICODE:
        text = text.replace(a, b)
    return text.translate(_SUBSCRIPTS)


def tokenize(text: str) -> list[Token]:
    text = _normalise(text)
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    pos: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int


Node = Union[Num, Name, BinOp, Neg, Pow, Call]


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op",):
            raise ParseError(f"unexpected {self._describe(self.tok)}", self.tok.pos, repr(text))
        return self.advance()

    @staticmethod
    def _describe(t: Token) -> str:
        return "end of input" if t.kind == "end" else f"token {t.text!r}"

    def parse(self) -> Node:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0, "an expression")
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe(self.tok)}", self.tok.pos, "operator or end of input")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.pos)
        return node

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("int", "ident") or (t.kind == "op" and t.text == "(")

    def term(self) -> Node:
        node = self.factor()
        while True:
            t = self.tok
            if t.kind == "op" and t.text in "*/":
                self.advance()
                node = BinOp(t.text, node, self.factor(), t.pos)
            elif self._starts_atom():
                node = BinOp("*", node, self.factor(), t.pos)
            else:
                return node

    def factor(self) -> Node:
        t = self.tok
        if t.kind == "op" and t.text in "+-":
            self.advance()
            inner = self.factor()
            return Neg(inner, t.pos) if t.text == "-" else inner
        node = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            caret = self.advance()
            sign = 1
            if self.tok.kind == "op" and self.tok.text in "+-":
                sign = -1 if self.advance().text == "-" else 1
            if self.tok.kind == "op" and self.tok.text == "(":
                self.advance()
                if self.tok.kind == "op" and self.tok.text in "+-":
                    sign *= -1 if self.advance().text == "-" else 1
                if self.tok.kind != "int":
                    raise ParseError(f"unexpected {self._describe(self.tok)}", self.tok.pos, "an integer exponent")
                n = int(self.advance().text)
                self.expect(")")
            elif self.tok.kind == "int":
                n = int(self.advance().text)
            else:
                raise ParseError(f"unexpected {self._describe(self.tok)}", self.tok.pos, "an integer exponent")
            node = Pow(node, sign * n, caret.pos)
        return node

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Num(int(t.text), t.pos)
        if t.kind == "ident":
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "(":
                self.advance()
                args = [self.expr()]
                while self.tok.kind == "op" and self.tok.text == ",":
                    self.advance()
                    args.append(self.expr())
                self.expect(")")
                return Call(t.text, tuple(args), t.pos)
            return Name(t.text, t.pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {self._describe(t)}", t.pos, "a number, name or '('")


def parse(text: str) -> Node:
    """Parse ``text`` into an AST (no evaluation)."""
    return _Parser(text).parse()


# -- evaluation --------------------------------------------------------------

Value = Union[RatQ, AlgebraElement]


def _normal(v: Value) -> Value:
    if isinstance(v, AlgebraElement) and v.is_scalar():
        return v.scalar_value()
    return v


def _as_int(v: Value, pos: int) -> int:
    v = _normal(v)
    if isinstance(v, RatQ) and v.shift == 0 and v.is_laurent() and v.numerator.degree() <= 0:
        coeffs = v.numerator.coefficients
        return coeffs.get(0, 0)
    raise ParseError("expected an integer argument", pos)


def _as_scalar(v: Value, pos: int) -> RatQ:
    v = _normal(v)
    if not isinstance(v, RatQ):
        raise ParseError("expected a scalar", pos)
    return v


class Environment:
    """Names and functions visible to the evaluator."""

    def __init__(self, names: dict[str, Callable[[], Value]], functions: dict[str, Callable]):
        self.names = names
        self.functions = functions

    def evaluate(self, node: Node) -> Value:
        return _normal(self._eval(node))

    def _eval(self, node: Node) -> Value:
        if isinstance(node, Num):
            return RatQ(node.value)
        if isinstance(node, Name):
            factory = self.names.get(node.name)
            if factory is None:
                raise ParseError(f"unknown identifier {node.name!r}", node.pos)
            return factory()
        if isinstance(node, Neg):
            return -self._eval(node.operand)
        if isinstance(node, Pow):
            base = _normal(self._eval(node.base))
            try:
                return base ** node.exponent
            except NotInvertibleError as exc:
                raise ParseError(f"negative power of a non-invertible element ({exc})", node.pos) from None
            except ZeroDivisionError:
                raise ParseError("negative power of zero", node.pos) from None
        if isinstance(node, BinOp):
            left = _normal(self._eval(node.left))
            right = _normal(self._eval(node.right))
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            if isinstance(right, AlgebraElement):
                raise ParseError("division by a non-scalar", node.pos)
            if right.is_zero():
                raise ParseError("division by zero", node.pos)
            return left / right
        if isinstance(node, Call):
            fn = self.functions.get(node.name)
            if fn is None:
                raise ParseError(f"unknown function {node.name!r}", node.pos)
            args = [self._eval(a) for a in node.args]
            try:
                return fn(node.pos, *args)
            except TypeError:
                raise ParseError(f"wrong number of arguments to {node.name}", node.pos) from None


def _scalar_functions() -> dict[str, Callable]:
    return {
        "qint": lambda pos, n, base=None: quantum_int(_as_int(n, pos), 1 if base is None else _as_int(base, pos)),
        "qfact": lambda pos, n: quantum_factorial(_as_int(n, pos)),
        "qbinom": lambda pos, n, m: quantum_binomial(_as_int(n, pos), _as_int(m, pos)),
    }


def _as_element(v: Value) -> AlgebraElement:
    return v if isinstance(v, AlgebraElement) else AlgebraElement.scalar(v)


def _brace(pos, a, base=None):
    try:
        return brace(_as_element(a), 1 if base is None else _as_int(base, pos))
    except NotInvertibleError as exc:
        raise ParseError(str(exc), pos) from None


def _operator_functions() -> dict[str, Callable]:
    fns = _scalar_functions()
    fns.update(
        {
            "comm": lambda pos, a, b: commutator(_as_element(a), _as_element(b)),
            "tcomm": lambda pos, a, b, v: twisted_commutator(_as_element(a), _as_element(b), _as_scalar(v, pos)),
            "brace": _brace,
            "dq": lambda pos, j, m: shifted_derivative(_as_int(j, pos), _as_int(m, pos)),
        }
    )
    return fns


def scalar_environment() -> Environment:
    return Environment({"q": lambda: RatQ.q(1)}, _scalar_functions())


def operator_environment() -> Environment:
    from qhowe.duality.named import named_operator, NAMED_OPERATORS

    names: dict[str, Callable[[], Value]] = {"q": lambda: RatQ.q(1)}
    for g in FIELD_NAMES:
        names[g] = lambda g=g: generator(g)
    for n in NAMED_OPERATORS:
        names[n] = lambda n=n: named_operator(n)
    return Environment(names, _operator_functions())


def spinor_environment() -> Environment:
    names: dict[str, Callable[[], Value]] = {
        "q": lambda: RatQ.q(1),
        "x1": lambda: generator("mu1"),
        "x2": lambda: generator("mu2"),
        "y": lambda: generator("nu"),
    }
    return Environment(names, _scalar_functions())


def parse_scalar(text: str) -> RatQ:
    value = scalar_environment().evaluate(parse(text))
    return value


def parse_operator(text: str) -> AlgebraElement:
    return _as_element(operator_environment().evaluate(parse(text)))


def parse_spinor(text: str):
    from qhowe.spinor import ONE_VECTOR, apply

    element = _as_element(spinor_environment().evaluate(parse(text)))
    return apply(element, ONE_VECTOR)
