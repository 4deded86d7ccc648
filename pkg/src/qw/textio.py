"""Expression language, evaluation and rendering.

Grammar (whitespace insensitive)::

    expr    := tensor (('+' | '-') tensor)*
    tensor  := term ('@' term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' ['-'] INT)?
    atom    := INT | 'q' | gen | '(' expr ')'
             | '[' expr ',' expr [';' ['-'] INT ',' ['-'] INT] ']_q'
             | ('Delta' | 'S' | 'eps') '(' expr ')'
    gen     := 'L(' ['-'] INT ')' | 'W(' ['-'] INT ')' | 'C' | 'T'

``@`` is the tensor product and binds more loosely than ``*``.  Division is
only by scalars.  Bracket weights after ``;`` override the weights inferred
from homogeneous operands.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Union

from .algebra import AlgebraElement, LieGenerator, NormalMonomial, bracket_table
from .errors import DivisionByZero, EvalTypeError, GeneratorIndexError, ParseError, WeightError
from .hopf import TensorCubeElement, TensorElement, antipode, coproduct, counit, tensor, tensor_mul
from .rewrite import CENTRAL, RelationMode, multiply, q_bracket_realized
from .scalars import ONE, Q, QScalar

__all__ = [
    "parse",
    "evaluate",
    "evaluate_text",
    "render",
    "monomial_text",
    "to_json",
    "from_json",
]

# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class QVar:
    pos: int = 0


@dataclass(frozen=True)
class Gen:
    kind: str  # L, W, C, T
    index: int | None = None
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / @
    left: "Node"
    right: "Node"
    pos: int = 0


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int
    pos: int = 0


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"
    weights: tuple[int, int] | None = None
    pos: int = 0


@dataclass(frozen=True)
class Apply:
    func: str  # Delta, S, eps
    arg: "Node"
    pos: int = 0


Node = Union[Num, QVar, Gen, Neg, BinOp, Power, Bracket, Apply]

# ---------------------------------------------------------------------------
# tokenizer / parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<bq>\]_q)|(?P<op>[-+*/^@(),;\[\]])|(?P<bad>\S))"
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # int, name, op, end
    text: str
    pos: int


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    i = 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if m is None:  # only trailing whitespace left
            break
        if m.lastgroup is None:
            break
        kind = m.lastgroup
        start = m.start(kind)
        text = m.group(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {text!r}", src, start)
        if kind == "bq":
            kind = "op"
        toks.append(_Tok(kind, text, start))
        i = m.end()
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, expected=()):
        raise ParseError(msg, self.src, self.tok.pos, expected)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            self.error(f"found {found!r}", {repr(text)})

    def integer(self, allow_sign=True, index=False):
        neg = allow_sign and self.accept("-")
        t = self.tok
        if t.kind != "int":
            found = t.text or "end of input"
            if index:
                raise GeneratorIndexError(f"generator index must be an integer literal, found {found!r}",
                                          self.src, t.pos, {"integer"})
            self.error(f"found {found!r}", {"integer"})
        self.i += 1
        v = int(t.text)
        return -v if neg else v

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}", {"'+'", "'-'", "'*'", "'/'", "'@'", "end of input"})
        return node

    def expr(self):
        node = self.tensor()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op, pos = self.tok.text, self.tok.pos
            self.i += 1
            node = BinOp(op, node, self.tensor(), pos)
        return node

    def tensor(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text == "@":
            pos = self.tok.pos
            self.i += 1
            node = BinOp("@", node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op, pos = self.tok.text, self.tok.pos
            self.i += 1
            node = BinOp(op, node, self.unary(), pos)
        return node

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            pos = self.tok.pos
            self.i += 1
            return Neg(self.unary(), pos)
        return self.power()

    def power(self):
        node = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            pos = self.tok.pos
            self.i += 1
            node = Power(node, self.integer(), pos)
        return node

    _ATOM_START = {"integer", "'q'", "'L('", "'W('", "'C'", "'T'", "'('", "'['", "'Delta('", "'S('", "'eps('"}

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Num(int(t.text), t.pos)
        if t.kind == "name":
            self.i += 1
            if t.text == "q":
                return QVar(t.pos)
            if t.text in ("C", "T"):
                return Gen(t.text, None, t.pos)
            if t.text in ("L", "W"):
                self.expect("(")
                idx = self.integer(index=True)
                self.expect(")")
                return Gen(t.text, idx, t.pos)
            if t.text in ("Delta", "S", "eps"):
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Apply(t.text, arg, t.pos)
            self.i -= 1
            self.error(f"unknown name {t.text!r}", self._ATOM_START)
        if t.kind == "op" and t.text == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "op" and t.text == "[":
            self.i += 1
            left = self.expr()
            self.expect(",")
            right = self.expr()
            weights = None
            if self.accept(";"):
                wl = self.integer()
                self.expect(",")
                weights = (wl, self.integer())
            self.expect("]_q")
            return Bracket(left, right, weights, t.pos)
        found = t.text or "end of input"
        self.error(f"found {found!r}", self._ATOM_START)


def parse(text: str) -> Node:
    """Parse expression text into an AST."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

Value = Union[QScalar, AlgebraElement, TensorElement]


def _element(v, what="operand"):
    if isinstance(v, QScalar):
        return AlgebraElement.scalar(v)
    if isinstance(v, AlgebraElement):
        return v
    raise EvalTypeError(f"{what} must be an algebra element, got a tensor")


def _homogeneous_weight(x: AlgebraElement):
    ws = x.weights()
    if len(ws) > 1:
        return None
    return ws.pop() if ws else 0


def _single_lie(x: AlgebraElement) -> LieGenerator | None:
    if len(x.terms) != 1:
        return None
    (mono, c), = x.terms.items()
    if c != ONE:
        return None
    return mono.as_lie_generator()


def _as_tensor_factors(v):
    if isinstance(v, TensorElement):
        return v
    return _element(v)


def _tensor_product(a, b):
    a, b = _as_tensor_factors(a), _as_tensor_factors(b)
    if isinstance(a, AlgebraElement) and isinstance(b, AlgebraElement):
        return tensor(a, b)
    if isinstance(a, TensorCubeElement) or isinstance(b, TensorCubeElement):
        raise EvalTypeError("tensor products beyond three factors are not supported")
    if isinstance(a, TensorElement) and isinstance(b, AlgebraElement):
        out = {}
        for (x, y), c in a.terms.items():
            for z, d in b.terms.items():
                out[(x, y, z)] = c * d
        return TensorCubeElement(out)
    if isinstance(a, AlgebraElement) and isinstance(b, TensorElement):
        out = {}
        for x, c in a.terms.items():
            for (y, z), d in b.terms.items():
                out[(x, y, z)] = c * d
        return TensorCubeElement(out)
    raise EvalTypeError("tensor products beyond three factors are not supported")


def _add(a, b):
    if isinstance(a, QScalar) and isinstance(b, QScalar):
        return a + b
    if isinstance(a, TensorElement) or isinstance(b, TensorElement):
        if type(a) is type(b):
            return a + b
        raise EvalTypeError("cannot add a tensor to a non-tensor of different shape")
    return _element(a) + _element(b)


def _neg(a):
    return -a


def _mul(a, b, mode):
    if isinstance(a, QScalar) and isinstance(b, QScalar):
        return a * b
    if isinstance(a, QScalar):
        return b.scale(a)
    if isinstance(b, QScalar):
        return a.scale(b)
    if isinstance(a, AlgebraElement) and isinstance(b, AlgebraElement):
        return multiply(a, b, mode)
    if isinstance(a, TensorElement) and isinstance(b, TensorElement) and type(a) is type(b):
        return tensor_mul(a, b, mode)
    raise EvalTypeError("cannot multiply a tensor by an algebra element")


def _power(a, k, mode):
    if isinstance(a, QScalar):
        if not a and k < 0:
            raise DivisionByZero("negative power of zero")
        return a ** k
    if isinstance(a, AlgebraElement):
        if k < 0:
            if len(a.terms) == 1:
                (mono, c), = a.terms.items()
                if not (mono.c_exp or mono.l_indices or mono.w_indices):
                    return AlgebraElement.monomial(NormalMonomial(t_exp=mono.t_exp * k), c ** k)
            raise EvalTypeError("negative powers exist only for scalars and powers of T")
        out = AlgebraElement.scalar(ONE)
        for _ in range(k):
            out = multiply(out, a, mode)
        return out
    if k < 0:
        raise EvalTypeError("negative power of a tensor")
    out = type(a)._trusted({(NormalMonomial(),) * a.arity: ONE})
    for _ in range(k):
        out = tensor_mul(out, a, mode)
    return out


def _bracket(node: Bracket, left, right, mode):
    x, y = _element(left, "bracket operand"), _element(right, "bracket operand")
    gx, gy = _single_lie(x), _single_lie(y)
    if node.weights is None and gx is not None and gy is not None:
        table = bracket_table(gx, gy)
        if gx.kind != "C" and gy.kind != "C":
            realized = q_bracket_realized(x, y, gx.weight, gy.weight, mode)
            if realized != table:
                raise AssertionError(f"realized bracket disagrees with the table for {gx}, {gy}")
        return table
    if node.weights is not None:
        wx, wy = node.weights
    else:
        wx, wy = _homogeneous_weight(x), _homogeneous_weight(y)
        if wx is None or wy is None:
            raise WeightError("bracket operand is not homogeneous; declare weights as [x, y; m, n]_q")
    return q_bracket_realized(x, y, wx, wy, mode)


def evaluate(ast: Node, mode: RelationMode = CENTRAL) -> Value:
    """Evaluate an AST to a QScalar, AlgebraElement or TensorElement."""
    mode = RelationMode(mode)

    def ev(n):
        if isinstance(n, Num):
            return QScalar(n.value)
        if isinstance(n, QVar):
            return Q
        if isinstance(n, Gen):
            if n.kind == "L":
                return AlgebraElement.from_lie(LieGenerator("L", n.index))
            if n.kind == "W":
                return AlgebraElement.from_lie(LieGenerator("W", n.index))
            if n.kind == "C":
                return AlgebraElement.from_lie(LieGenerator("C"))
            return AlgebraElement.t_power(1)
        if isinstance(n, Neg):
            return _neg(ev(n.operand))
        if isinstance(n, BinOp):
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return _add(a, b)
            if n.op == "-":
                return _add(a, _neg(b))
            if n.op == "*":
                return _mul(a, b, mode)
            if n.op == "/":
                if not isinstance(b, QScalar):
                    raise EvalTypeError("division is only by scalars")
                if not b:
                    raise DivisionByZero("division by zero")
                return _mul(a, b.inv(), mode)
            if n.op == "@":
                return _tensor_product(a, b)
        if isinstance(n, Power):
            return _power(ev(n.base), n.exponent, mode)
        if isinstance(n, Bracket):
            return _bracket(n, ev(n.left), ev(n.right), mode)
        if isinstance(n, Apply):
            arg = _element(ev(n.arg), f"argument of {n.func}")
            if n.func == "Delta":
                return coproduct(arg, mode)
            if n.func == "S":
                return antipode(arg, mode)
            return counit(arg)
        raise TypeError(f"unknown node {n!r}")

    return ev(ast)


def evaluate_text(text: str, mode: RelationMode = CENTRAL) -> Value:
    return evaluate(parse(text), mode)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def monomial_text(m: NormalMonomial) -> str:
    parts = []
    if m.t_exp:
        parts.append("T" if m.t_exp == 1 else f"T^{m.t_exp}")
    if m.c_exp:
        parts.append("C" if m.c_exp == 1 else f"C^{m.c_exp}")
    parts.extend(f"L({i})" for i in m.l_indices)
    parts.extend(f"W({i})" for i in m.w_indices)
    return "*".join(parts) if parts else "1"


def monomial_latex(m: NormalMonomial) -> str:
    parts = []
    if m.t_exp:
        parts.append(r"\mathcal{T}" if m.t_exp == 1 else rf"\mathcal{{T}}^{{{m.t_exp}}}")
    if m.c_exp:
        parts.append(r"\mathcal{C}" if m.c_exp == 1 else rf"\mathcal{{C}}^{{{m.c_exp}}}")
    parts.extend(f"L_{{{i}}}" for i in m.l_indices)
    parts.extend(f"W_{{{i}}}" for i in m.w_indices)
    return " ".join(parts) if parts else "1"


def _scalar_latex(s: QScalar) -> str:
    def poly(cs):
        out = ""
        for d in range(len(cs) - 1, -1, -1):
            c = cs[d]
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                mono = "q" if d == 1 else f"q^{{{d}}}"
                body = mono if mag == 1 else f"{mag}{mono}"
            out += sign + body
        return out or "0"

    if s.int_denominator == (1,):
        return poly(s.int_numerator)
    return rf"\frac{{{poly(s.int_numerator)}}}{{{poly(s.int_denominator)}}}"


def _term_text(coeff: QScalar, body: str, body_is_one: bool) -> tuple[str, str]:
    """(sign, text) of one term; the sign is returned separately for joining."""
    sign = "-" if coeff.is_negative() else "+"
    mag = -coeff if coeff.is_negative() else coeff
    if body_is_one:
        s = str(mag)
        if "/" in s or "+" in s or "-" in s:
            s = f"({s})"
        return sign, s
    if mag == ONE:
        return sign, body
    return sign, f"({mag})*{body}"


def _join(terms):
    if not terms:
        return "0"
    out = ""
    for k, (sign, text) in enumerate(terms):
        if k == 0:
            out = ("-" if sign == "-" else "") + text
        else:
            out += f" {sign} {text}"
    return out


def _latex_tensor(parts):
    out = ""
    for k, p in enumerate(parts):
        if k:
            out += r"\otimes" + (" " if p[:1].isalnum() else "")
        out += p
    return out


def _term_latex(coeff: QScalar, body: str, body_is_one: bool):
    sign = "-" if coeff.is_negative() else "+"
    mag = -coeff if coeff.is_negative() else coeff
    if body_is_one:
        return sign, _scalar_latex(mag)
    if mag == ONE:
        return sign, body
    s = _scalar_latex(mag)
    if not mag.is_constant() and "\\frac" not in s and len(mag.int_numerator) > 1:
        s = rf"\left({s}\right)"
    return sign, f"{s}\\,{body}"


def _join_latex(terms):
    if not terms:
        return "0"
    out = ""
    for k, (sign, text) in enumerate(terms):
        if k == 0:
            out = ("-" if sign == "-" else "") + text
        else:
            out += sign + text
    return out


def _mono_json(m: NormalMonomial):
    return {"t": m.t_exp, "c": m.c_exp, "L": list(m.l_indices), "W": list(m.w_indices)}


def to_json(x: Value):
    """JSON-ready dict; scalars are strings, never floats."""
    if isinstance(x, QScalar):
        return {"scalar": str(x)}
    if isinstance(x, AlgebraElement):
        return {"terms": [dict(coeff=str(c), **_mono_json(m)) for m, c in x.items()]}
    if isinstance(x, TensorElement):
        return {
            "arity": x.arity,
            "terms": [{"coeff": str(c), "slots": [_mono_json(m) for m in k]} for k, c in x.items()],
        }
    raise TypeError(f"cannot render {x!r}")


def _mono_from_json(d):
    return NormalMonomial(int(d["t"]), int(d["c"]), tuple(d["L"]), tuple(d["W"]))


def _scalar_from_text(s: str) -> QScalar:
    v = evaluate_text(s)
    if not isinstance(v, QScalar):
        raise ValueError(f"{s!r} is not a scalar")
    return v


def from_json(d) -> Value:
    if "scalar" in d:
        return _scalar_from_text(d["scalar"])
    if "arity" in d:
        arity = d["arity"]
        cls = TensorElement if arity == 2 else TensorCubeElement
        return cls({tuple(_mono_from_json(s) for s in t["slots"]): _scalar_from_text(t["coeff"]) for t in d["terms"]})
    return AlgebraElement({_mono_from_json(t): _scalar_from_text(t["coeff"]) for t in d["terms"]})


def render(x: Value, format: str = "text") -> str:
    """Deterministic text, JSON or LaTeX rendering."""
    if format == "json":
        return json.dumps(to_json(x), sort_keys=True)
    latex = format == "latex"
    if format not in ("text", "latex"):
        raise ValueError(f"unknown format {format!r}")
    if isinstance(x, QScalar):
        return _scalar_latex(x) if latex else str(x)
    if isinstance(x, AlgebraElement):
        if latex:
            return _join_latex([_term_latex(c, monomial_latex(m), m.is_identity) for m, c in x.items()])
        return _join([_term_text(c, monomial_text(m), m.is_identity) for m, c in x.items()])
    if isinstance(x, TensorElement):
        terms = []
        for key, c in x.items():
            if latex:
                body = _latex_tensor(monomial_latex(m) for m in key)
                terms.append(_term_latex(c, body, False))
            else:
                body = " @ ".join(monomial_text(m) for m in key)
                terms.append(_term_text(c, body, False))
        return _join_latex(terms) if latex else _join(terms)
    raise TypeError(f"cannot render {x!r}")
