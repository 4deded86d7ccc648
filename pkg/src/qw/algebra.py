"""Generators, normal-ordered monomials and elements of U_q, plus the q-bracket
table of W_q with its central extension.

The basis of U_q is the set of words ``T^t C^c L(m1)...L(mj) W(n1)...W(nk)``
with nondecreasing L and W indices.  Lie-algebra elements of W_q are the
elements supported on single-generator monomials ``L(m)``, ``W(m)``, ``C``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

from .scalars import ONE, ZERO, QScalar, central_coeff, q_integer, q_power

__all__ = [
    "GeneratorSymbol",
    "LieGenerator",
    "NormalMonomial",
    "AlgebraElement",
    "L",
    "W",
    "C",
    "T",
    "bracket_table",
    "lie_bracket",
    "f_q",
    "check_q_jacobi",
    "check_antisymmetry",
    "lie_generators",
]


class GeneratorSymbol(NamedTuple):
    """One letter of a raw word: kind in {L, W, C, T, Tinv}."""

    kind: str
    index: int | None = None

    def __repr__(self):
        if self.kind in ("L", "W"):
            return f"{self.kind}({self.index})"
        return self.kind


class LieGenerator(NamedTuple):
    """Basis vector L(m), W(m) or C of W_q."""

    kind: str
    index: int | None = None

    def __repr__(self):
        return self.kind if self.kind == "C" else f"{self.kind}({self.index})"

    @property
    def weight(self):
        return 0 if self.kind == "C" else self.index


@dataclass(frozen=True, order=True)
class NormalMonomial:
    """The word T^t_exp C^c_exp L(l_indices...) W(w_indices...)."""

    t_exp: int = 0
    c_exp: int = 0
    l_indices: tuple[int, ...] = ()
    w_indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.c_exp < 0:
            raise ValueError("negative power of C")
        for block in (self.l_indices, self.w_indices):
            if any(a > b for a, b in zip(block, block[1:])):
                raise ValueError(f"block {block} is not sorted")

    @property
    def is_identity(self):
        return not (self.t_exp or self.c_exp or self.l_indices or self.w_indices)

    @property
    def weight(self):
        return sum(self.l_indices) + sum(self.w_indices)

    @property
    def degree(self):
        return self.c_exp + len(self.l_indices) + len(self.w_indices)

    def letters(self) -> tuple[GeneratorSymbol, ...]:
        t = GeneratorSymbol("T") if self.t_exp > 0 else GeneratorSymbol("Tinv")
        return (
            (t,) * abs(self.t_exp)
            + (GeneratorSymbol("C"),) * self.c_exp
            + tuple(GeneratorSymbol("L", m) for m in self.l_indices)
            + tuple(GeneratorSymbol("W", n) for n in self.w_indices)
        )

    def as_lie_generator(self) -> LieGenerator | None:
        """The Lie generator this monomial spells, if it is a single letter."""
        if self.t_exp:
            return None
        if self.c_exp == 1 and not self.l_indices and not self.w_indices:
            return LieGenerator("C")
        if self.c_exp == 0 and len(self.l_indices) + len(self.w_indices) == 1:
            if self.l_indices:
                return LieGenerator("L", self.l_indices[0])
            return LieGenerator("W", self.w_indices[0])
        return None

    def sort_key(self):
        return (self.t_exp, self.c_exp, self.l_indices, self.w_indices)

    def __str__(self):
        from .textio import monomial_text

        return monomial_text(self)


IDENTITY = NormalMonomial()


def _clean(terms):
    return {m: c for m, c in terms.items() if c}


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Finite Q(q)-linear combination of normal monomials.

    Zero coefficients are never stored; the empty combination is zero.
    """

    terms: Mapping[NormalMonomial, QScalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", MappingProxyType(_clean(dict(self.terms))))

    @classmethod
    def _trusted(cls, terms):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "terms", MappingProxyType(terms))
        return obj

    @classmethod
    def monomial(cls, mono: NormalMonomial, coeff=ONE):
        coeff = QScalar(coeff)
        return cls._trusted({mono: coeff} if coeff else {})

    @classmethod
    def scalar(cls, s):
        return cls.monomial(IDENTITY, s)

    @classmethod
    def from_lie(cls, g: LieGenerator):
        if g.kind == "C":
            return cls.monomial(NormalMonomial(c_exp=1))
        if g.kind == "L":
            return cls.monomial(NormalMonomial(l_indices=(g.index,)))
        if g.kind == "W":
            return cls.monomial(NormalMonomial(w_indices=(g.index,)))
        raise ValueError(f"{g!r} is not a Lie generator")

    @classmethod
    def t_power(cls, t: int):
        return cls.monomial(NormalMonomial(t_exp=t))

    # -- linear structure ----------------------------------------------------
    def __add__(self, other):
        other = _as_element(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return AlgebraElement._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._trusted({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_element(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_element(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, s) -> "AlgebraElement":
        s = QScalar(s)
        if not s:
            return ZERO_ELEMENT
        if s == ONE:
            return self
        return AlgebraElement._trusted({m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            from .rewrite import CENTRAL, multiply

            return multiply(self, other, CENTRAL)
        if isinstance(other, (QScalar, int)) or _is_rational(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (QScalar, int)) or _is_rational(other):
            return self.scale(other)
        return NotImplemented

    # -- comparison / inspection ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return dict(self.terms) == dict(other.terms)
        if isinstance(other, (QScalar, int)):
            return self == AlgebraElement.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, mono: NormalMonomial) -> QScalar:
        return self.terms.get(mono, ZERO)

    def items(self):
        """Terms in canonical display order."""
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def weights(self) -> set[int]:
        return {m.weight for m in self.terms}

    def __str__(self):
        from .textio import render

        return render(self, "text")

    def __repr__(self):
        return f"AlgebraElement({self})"


ZERO_ELEMENT = AlgebraElement._trusted({})
ONE_ELEMENT = AlgebraElement.scalar(ONE)


def _is_rational(x):
    from numbers import Rational

    return isinstance(x, Rational)


def _as_element(x):
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, (QScalar, int)) or _is_rational(x):
        return AlgebraElement.scalar(x)
    return None


def L(m: int) -> AlgebraElement:
    return AlgebraElement.monomial(NormalMonomial(l_indices=(m,)))


def W(m: int) -> AlgebraElement:
    return AlgebraElement.monomial(NormalMonomial(w_indices=(m,)))


def C() -> AlgebraElement:
    return AlgebraElement.monomial(NormalMonomial(c_exp=1))


def T(t: int = 1) -> AlgebraElement:
    return AlgebraElement.t_power(t)


# ---------------------------------------------------------------------------
# q-bracket table
# ---------------------------------------------------------------------------

def _lw_bracket(m, n, kind):
    """[L_m, X_n]_q for X in {L, W}: ([m]-[n]) X_{m+n} + c(m) delta_{m,-n} C."""
    terms = {}
    s = q_integer(m) - q_integer(n)
    if s:
        key = NormalMonomial(l_indices=(m + n,)) if kind == "L" else NormalMonomial(w_indices=(m + n,))
        terms[key] = s
    if m == -n:
        c = central_coeff(m)
        if c:
            terms[NormalMonomial(c_exp=1)] = c
    return AlgebraElement._trusted(terms)


def bracket_table(x: LieGenerator, y: LieGenerator) -> AlgebraElement:
    """The q-bracket [x, y]_q of two basis vectors of W_q."""
    if x.kind == "C" or y.kind == "C":
        return ZERO_ELEMENT
    if x.kind == "W" and y.kind == "W":
        return ZERO_ELEMENT
    if x.kind == "L":
        return _lw_bracket(x.index, y.index, y.kind)
    # [W_n, L_m] = -[L_m, W_n]
    return -_lw_bracket(y.index, x.index, "W")


def _lie_support(x: AlgebraElement):
    for mono, c in x.terms.items():
        g = mono.as_lie_generator()
        if g is None:
            raise ValueError(f"{mono} is not a generator of W_q")
        yield g, c


def lie_bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of :func:`bracket_table` to elements of W_q."""
    out = ZERO_ELEMENT
    ys = list(_lie_support(y))
    for gx, cx in _lie_support(x):
        for gy, cy in ys:
            b = bracket_table(gx, gy)
            if b:
                out = out + b.scale(cx * cy)
    return out


def f_q(x: LieGenerator) -> AlgebraElement:
    """The twisting endomorphism: X_m -> (q^m + 1) X_m, and C -> 2C."""
    return AlgebraElement.from_lie(x).scale(q_power(x.weight) + 1)


def _f_q_element(x: AlgebraElement) -> AlgebraElement:
    out = ZERO_ELEMENT
    for g, c in _lie_support(x):
        out = out + f_q(g).scale(c)
    return out


def q_jacobi_sum(u: LieGenerator, v: LieGenerator, w: LieGenerator) -> AlgebraElement:
    """[f(u),[v,w]] + [f(w),[u,v]] + [f(v),[w,u]], expanded through central terms."""
    U, V, Wx = (AlgebraElement.from_lie(g) for g in (u, v, w))
    return (
        lie_bracket(f_q(u), lie_bracket(V, Wx))
        + lie_bracket(f_q(w), lie_bracket(U, V))
        + lie_bracket(f_q(v), lie_bracket(Wx, U))
    )


def check_q_jacobi(u: LieGenerator, v: LieGenerator, w: LieGenerator) -> bool:
    return q_jacobi_sum(u, v, w).is_zero()


def check_antisymmetry(u: LieGenerator, v: LieGenerator) -> bool:
    return bracket_table(u, v) == -bracket_table(v, u)


def lie_generators(bound: int, kinds: Iterable[str] = ("L", "W")) -> list[LieGenerator]:
    """All generators of the given kinds with index in [-bound, bound]."""
    out = []
    for k in kinds:
        if k == "C":
            out.append(LieGenerator("C"))
        else:
            out.extend(LieGenerator(k, i) for i in range(-bound, bound + 1))
    return out


def generator_triples(bound: int, kinds: Iterable[str] = ("L", "W")):
    gens = lie_generators(bound, kinds)
    return product(gens, repeat=3)
