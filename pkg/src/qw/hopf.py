"""Coproduct, counit and antipode of U_q and checks of the Hopf axioms.

Delta and epsilon are extended multiplicatively and S anti-multiplicatively
from their values on generators, letter by letter over the stored normal
words.  Tensor factors multiply slotwise, each slot normal-ordered by
:func:`qw.rewrite.multiply`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .algebra import (
    IDENTITY,
    ONE_ELEMENT,
    ZERO_ELEMENT,
    AlgebraElement,
    LieGenerator,
    NormalMonomial,
    bracket_table,
)
from .rewrite import CENTRAL, RelationMode, multiply, _mono_product
from .scalars import ONE, ZERO, QScalar, central_coeff, q_integer, q_power

__all__ = [
    "TensorElement",
    "TensorCubeElement",
    "coproduct",
    "counit",
    "antipode",
    "tensor",
    "tensor_mul",
    "check_coassociativity",
    "check_counit_axiom",
    "check_antipode_axiom",
    "check_cocommutativity",
    "check_delta_respects_relations",
    "check_antipode_antihom",
    "PAIR_KINDS",
    "ANTIHOM_KINDS",
]


@dataclass(frozen=True, eq=False)
class TensorElement:
    """Element of U_q (x) U_q: map from monomial pairs to nonzero scalars."""

    terms: Mapping[tuple[NormalMonomial, ...], QScalar] = field(default_factory=dict)
    arity = 2

    def __post_init__(self):
        clean = {}
        for k, c in dict(self.terms).items():
            if len(k) != self.arity:
                raise ValueError(f"expected {self.arity} tensor slots, got {len(k)}")
            if c:
                clean[k] = c
        object.__setattr__(self, "terms", MappingProxyType(clean))

    @classmethod
    def _trusted(cls, terms):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "terms", MappingProxyType(terms))
        return obj

    def _same(self, other):
        return type(other) is type(self)

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return type(self)._trusted(out)

    def __neg__(self):
        return type(self)._trusted({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def scale(self, s):
        s = QScalar(s)
        if not s:
            return type(self)._trusted({})
        return type(self)._trusted({k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if self._same(other):
            return tensor_mul(self, other, CENTRAL)
        if isinstance(other, (QScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (QScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not self._same(other):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kc: tuple(m.sort_key() for m in kc[0]))

    def swap(self):
        """Exchange the two slots (only for the tensor square)."""
        if self.arity != 2:
            raise ValueError("swap is defined on the tensor square only")
        return type(self)._trusted({(b, a): c for (a, b), c in self.terms.items()})

    def __str__(self):
        from .textio import render

        return render(self, "text")

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class TensorCubeElement(TensorElement):
    """Element of the tensor cube, for coassociativity."""

    arity = 3


def _tensor_type(arity):
    if arity == 2:
        return TensorElement
    if arity == 3:
        return TensorCubeElement
    raise ValueError(f"unsupported tensor arity {arity}")


def tensor(*factors: AlgebraElement):
    """Tensor product of 2 or 3 algebra elements."""
    out = {(): ONE}
    for f in factors:
        nxt = {}
        for k, c in out.items():
            for m, d in f.terms.items():
                nxt[k + (m,)] = c * d
        out = nxt
    return _tensor_type(len(factors))._trusted({k: c for k, c in out.items() if c})


def _accumulate(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def tensor_mul(a: TensorElement, b: TensorElement, mode: RelationMode = CENTRAL) -> TensorElement:
    """Slotwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2."""
    if type(a) is not type(b):
        raise TypeError("tensor factors of different arity")
    mode = RelationMode(mode)
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            slots = [_mono_product(x, y, mode) for x, y in zip(ka, kb)]
            base = ca * cb
            partial = {(): base}
            for s in slots:
                nxt = {}
                for k, c in partial.items():
                    for m, d in s.items():
                        nxt[k + (m,)] = c * d
                partial = nxt
            for k, c in partial.items():
                _accumulate(out, k, c)
    return type(a)._trusted(out)


# ---------------------------------------------------------------------------
# structure maps
# ---------------------------------------------------------------------------

def _mono(t=0, c=0, ls=(), ws=()):
    return NormalMonomial(t, c, tuple(ls), tuple(ws))


def _letter_coproduct(letter):
    rank, v = letter
    if rank == 0:
        return {(_mono(t=v), _mono(t=v)): ONE}
    if rank == 1:
        return {(_mono(c=1), IDENTITY): ONE, (IDENTITY, _mono(c=1)): ONE}
    x = _mono(ls=(v,)) if rank == 2 else _mono(ws=(v,))
    tm = _mono(t=v)
    if v == 0:
        return {(x, IDENTITY): ONE, (IDENTITY, x): ONE}
    return {(x, tm): ONE, (tm, x): ONE}


@lru_cache(maxsize=100_000)
def _mono_coproduct(m: NormalMonomial, mode: RelationMode) -> TensorElement:
    from .rewrite import monomial_letters

    out = TensorElement._trusted({(IDENTITY, IDENTITY): ONE})
    for letter in monomial_letters(m):
        out = tensor_mul(out, TensorElement._trusted(_letter_coproduct(letter)), mode)
    return out


def coproduct(x: AlgebraElement, mode: RelationMode = CENTRAL) -> TensorElement:
    """Delta(x), an algebra homomorphism fixed on generators."""
    mode = RelationMode(mode)
    out: dict = {}
    for m, c in x.terms.items():
        for k, d in _mono_coproduct(m, mode).terms.items():
            _accumulate(out, k, c * d)
    return TensorElement._trusted(out)


def counit(x: AlgebraElement) -> QScalar:
    """epsilon(x): kills L, W and C, sends T to 1."""
    total = ZERO
    for m, c in x.terms.items():
        if not (m.c_exp or m.l_indices or m.w_indices):
            total = total + c
    return total


def _letter_antipode(letter, mode):
    rank, v = letter
    if rank == 0:
        return AlgebraElement.t_power(-v)
    if rank == 1:
        return AlgebraElement.monomial(_mono(c=1), -ONE)
    x = AlgebraElement.monomial(_mono(ls=(v,)) if rank == 2 else _mono(ws=(v,)))
    tinv = AlgebraElement.t_power(-v)
    return -multiply(multiply(tinv, x, mode), tinv, mode)


@lru_cache(maxsize=100_000)
def _mono_antipode(m: NormalMonomial, mode: RelationMode) -> AlgebraElement:
    from .rewrite import monomial_letters

    out = ONE_ELEMENT
    for letter in monomial_letters(m):
        out = multiply(_letter_antipode(letter, mode), out, mode)
    return out


def antipode(x: AlgebraElement, mode: RelationMode = CENTRAL) -> AlgebraElement:
    """S(x), an algebra anti-homomorphism fixed on generators."""
    mode = RelationMode(mode)
    out = ZERO_ELEMENT
    for m, c in x.terms.items():
        out = out + _mono_antipode(m, mode).scale(c)
    return out


def antipode_word(factors, mode: RelationMode = CENTRAL) -> AlgebraElement:
    """S applied to the unnormalized product of ``factors``: S(xk)...S(x1)."""
    out = ONE_ELEMENT
    for f in factors:
        out = multiply(antipode(f, mode), out, mode)
    return out


def coproduct_word(factors, mode: RelationMode = CENTRAL) -> TensorElement:
    """Delta(x1) Delta(x2) ... computed slotwise without normalizing the word first."""
    out = TensorElement._trusted({(IDENTITY, IDENTITY): ONE})
    for f in factors:
        out = tensor_mul(out, coproduct(f, mode), mode)
    return out


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

def _apply_in_slot(t: TensorElement, slot: int, mode: RelationMode) -> TensorCubeElement:
    out: dict = {}
    for (a, b), c in t.terms.items():
        target = a if slot == 0 else b
        for (x, y), d in _mono_coproduct(target, mode).terms.items():
            key = (x, y, b) if slot == 0 else (a, x, y)
            _accumulate(out, key, c * d)
    return TensorCubeElement._trusted(out)


def coassociativity_sides(x: AlgebraElement, mode: RelationMode = CENTRAL):
    d = coproduct(x, mode)
    return _apply_in_slot(d, 1, mode), _apply_in_slot(d, 0, mode)


def check_coassociativity(x: AlgebraElement, mode: RelationMode = CENTRAL) -> bool:
    left, right = coassociativity_sides(x, mode)
    return left == right


def counit_contractions(x: AlgebraElement, mode: RelationMode = CENTRAL):
    d = coproduct(x, mode)
    right = ZERO_ELEMENT  # (1 (x) eps)
    left = ZERO_ELEMENT   # (eps (x) 1)
    for (a, b), c in d.terms.items():
        eb = counit(AlgebraElement.monomial(b))
        if eb:
            right = right + AlgebraElement.monomial(a, c * eb)
        ea = counit(AlgebraElement.monomial(a))
        if ea:
            left = left + AlgebraElement.monomial(b, c * ea)
    return right, left


def check_counit_axiom(x: AlgebraElement, mode: RelationMode = CENTRAL) -> bool:
    right, left = counit_contractions(x, mode)
    return right == x and left == x


def antipode_contractions(x: AlgebraElement, mode: RelationMode = CENTRAL):
    """(nabla(1 (x) S) Delta(x), nabla(S (x) 1) Delta(x))."""
    mode = RelationMode(mode)
    d = coproduct(x, mode)
    first = ZERO_ELEMENT
    second = ZERO_ELEMENT
    for (a, b), c in d.terms.items():
        A, B = AlgebraElement.monomial(a), AlgebraElement.monomial(b)
        first = first + multiply(A, antipode(B, mode), mode).scale(c)
        second = second + multiply(antipode(A, mode), B, mode).scale(c)
    return first, second


def check_antipode_axiom(x: AlgebraElement, mode: RelationMode = CENTRAL) -> bool:
    first, second = antipode_contractions(x, mode)
    unit = AlgebraElement.scalar(counit(x))
    return first == unit and second == unit


def check_cocommutativity(x: AlgebraElement, mode: RelationMode = CENTRAL) -> bool:
    d = coproduct(x, mode)
    return d.swap() == d


# ---------------------------------------------------------------------------
# relation checks
# ---------------------------------------------------------------------------

PAIR_KINDS = ("LL", "LW", "WW", "TL", "TW", "TC", "CL", "CW")
ANTIHOM_KINDS = ("LL", "LW", "WW")


def _gen(kind, index):
    if kind == "L":
        return AlgebraElement.from_lie(LieGenerator("L", index))
    if kind == "W":
        return AlgebraElement.from_lie(LieGenerator("W", index))
    if kind == "C":
        return AlgebraElement.from_lie(LieGenerator("C"))
    raise ValueError(kind)


def relation_sides(m: int, n: int, pair_kind: str, mode: RelationMode = CENTRAL):
    """Both sides of Delta applied to one defining relation, as tensors.

    q-bracket kinds (LL, LW, WW) with left weight m and right weight n:
    q^m D(X_m) D(Y_n) - q^n D(Y_n) D(X_m)  vs  D([X_m, Y_n]_q table value).
    TL/TW: D(T)^m D(X_n) vs q^(-(n+1)m) D(X_n) D(T)^m.
    TC:    q^m D(T)^m D(C) vs D(C) D(T)^m   (strict_paper)
           D(T)^m D(C)     vs D(C) D(T)^m   (central).
    CL/CW: D(C) D(X_m) vs D(X_m) D(C); n is unused.
    """
    mode = RelationMode(mode)
    D = lambda e: coproduct(e, mode)
    mul = lambda a, b: tensor_mul(a, b, mode)
    if pair_kind in ("LL", "LW", "WW"):
        xk, yk = pair_kind
        x, y = _gen(xk, m), _gen(yk, n)
        lhs = mul(D(x), D(y)).scale(q_power(m)) - mul(D(y), D(x)).scale(q_power(n))
        rhs = D(bracket_table(LieGenerator(xk, m), LieGenerator(yk, n)))
        return lhs, rhs
    if pair_kind in ("TL", "TW"):
        x = _gen(pair_kind[1], n)
        tm = D(AlgebraElement.t_power(m))
        return mul(tm, D(x)), mul(D(x), tm).scale(q_power(-(n + 1) * m))
    if pair_kind == "TC":
        tm = D(AlgebraElement.t_power(m))
        c = D(_gen("C", 0))
        factor = q_power(m) if mode is RelationMode.STRICT_PAPER else ONE
        return mul(tm, c).scale(factor), mul(c, tm)
    if pair_kind in ("CL", "CW"):
        x = D(_gen(pair_kind[1], m))
        c = D(_gen("C", 0))
        return mul(c, x), mul(x, c)
    raise ValueError(f"unknown pair kind {pair_kind!r}")


def check_delta_respects_relations(m: int, n: int, pair_kind: str,
                                   mode: RelationMode = CENTRAL) -> bool:
    lhs, rhs = relation_sides(m, n, pair_kind, mode)
    return lhs == rhs


def antihom_sides(m: int, n: int, pair_kind: str, mode: RelationMode = CENTRAL):
    """S applied to both sides of q^m X_m Y_n - q^n Y_n X_m = [X_m, Y_n]_q.

    The words X_m Y_n and Y_n X_m are fed to S letter by letter (reversed),
    not normal-ordered first, so the check tests whether S descends to the
    quotient by the relation.
    """
    mode = RelationMode(mode)
    xk, yk = pair_kind
    x, y = _gen(xk, m), _gen(yk, n)
    lhs = antipode_word((x, y), mode).scale(q_power(m)) - antipode_word((y, x), mode).scale(q_power(n))
    rhs = antipode(bracket_table(LieGenerator(xk, m), LieGenerator(yk, n)), mode)
    return lhs, rhs


def check_antipode_antihom(m: int, n: int, pair_kind: str, mode: RelationMode = CENTRAL) -> bool:
    lhs, rhs = antihom_sides(m, n, pair_kind, mode)
    return lhs == rhs


def clear_caches():
    _mono_coproduct.cache_clear()
    _mono_antipode.cache_clear()
