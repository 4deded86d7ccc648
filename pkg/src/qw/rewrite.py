"""Multiplication in U_q by rewriting words to normal order.

Normal order is ``T^t C^c L-block W-block`` with nondecreasing indices in
each block.  The rewriting strategy is fixed: always reduce the leftmost
reducible adjacent pair.  Rules, for n > m where an order is required:

* R1  L_n L_m -> q^(m-n) L_m L_n - q^(-n) ([L_m, L_n]_q table value)
* R2  W_n L_m -> q^(m-n) L_m W_n - q^(-n) ([L_m, W_n]_q table value)
* R3  W_n W_m -> q^(m-n) W_m W_n
* R4  X_n T^k -> q^((n+1)k) T^k X_n   (X in {L, W})
* R5  T^a T^b -> T^(a+b), dropped when a + b = 0
* R6  X_n C -> C X_n; C T^k -> T^k C (central) or q^k T^k C (strict_paper)

Internally a letter is a pair ``(rank, value)``: rank 0 is a block T^value,
rank 1 is C, rank 2 is L_value and rank 3 is W_value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .algebra import (
    ZERO_ELEMENT,
    AlgebraElement,
    GeneratorSymbol,
    NormalMonomial,
)
from .scalars import ONE, QScalar, central_coeff, q_integer, q_power

__all__ = [
    "RelationMode",
    "CENTRAL",
    "STRICT_PAPER",
    "normal_form",
    "multiply",
    "q_bracket_realized",
    "confluence_probe",
    "ConfluenceReport",
    "rewrite_step",
    "word_measure",
]


class RelationMode(str, Enum):
    """How C moves past T: commuting, or C T^m = q^m T^m C."""

    CENTRAL = "central"
    STRICT_PAPER = "strict_paper"

    def __str__(self):
        return self.value


CENTRAL = RelationMode.CENTRAL
STRICT_PAPER = RelationMode.STRICT_PAPER

Letter = tuple[int, int]


def encode(word: Sequence[GeneratorSymbol]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g in word:
        kind = g.kind if isinstance(g, GeneratorSymbol) else g[0]
        if kind == "T":
            out.append((0, 1))
        elif kind == "Tinv":
            out.append((0, -1))
        elif kind == "C":
            out.append((1, 0))
        elif kind == "L":
            out.append((2, g[1]))
        elif kind == "W":
            out.append((3, g[1]))
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
    return tuple(out)


def decode(letters: Sequence[Letter]) -> tuple[GeneratorSymbol, ...]:
    out = []
    for rank, v in letters:
        if rank == 0:
            out.extend([GeneratorSymbol("T" if v > 0 else "Tinv")] * abs(v))
        elif rank == 1:
            out.append(GeneratorSymbol("C"))
        else:
            out.append(GeneratorSymbol("L" if rank == 2 else "W", v))
    return tuple(out)


def monomial_letters(m: NormalMonomial) -> tuple[Letter, ...]:
    head = ((0, m.t_exp),) if m.t_exp else ()
    return (
        head
        + ((1, 0),) * m.c_exp
        + tuple((2, i) for i in m.l_indices)
        + tuple((3, i) for i in m.w_indices)
    )


def _reducible(x: Letter, y: Letter) -> bool:
    if y[0] == 0:
        return True  # T-block merges with T, or moves left past anything else
    if x[0] != y[0]:
        return x[0] > y[0]
    return x[0] >= 2 and x[1] > y[1]


def rewrite_step(x: Letter, y: Letter, mode: RelationMode) -> list[tuple[QScalar, tuple[Letter, ...]]]:
    """Replacement (coefficient, letters) list for the reducible pair x y."""
    rx, vx = x
    ry, vy = y
    if ry == 0:
        if rx == 0:
            s = vx + vy
            return [(ONE, ((0, s),) if s else ())]
        if rx == 1:
            c = ONE if mode is CENTRAL else q_power(vy)
        else:
            c = q_power((vx + 1) * vy)
        return [(c, (y, x))]
    if ry == 1:
        return [(ONE, (y, x))]
    n, m = vx, vy
    if rx == 3 and ry == 3:
        return [(q_power(m - n), (y, x))]
    # rx in {2, 3}, ry == 2: X_n L_m with the lower-order correction
    out = [(q_power(m - n), (y, x))]
    s = q_integer(m) - q_integer(n)
    pre = -q_power(-n)
    if s:
        out.append((pre * s, ((rx, m + n),)))
    if m == -n:
        c = central_coeff(m)
        if c:
            out.append((pre * c, ((1, 0),)))
    return out


def word_measure(letters: Sequence[Letter]) -> tuple[int, int, int]:
    """(length counting T-blocks by exponent, inversion count, number of T-blocks).

    Strictly decreases lexicographically under every rewrite step.
    """
    length = sum(abs(v) if r == 0 else 1 for r, v in letters)
    inv = 0
    flat = []
    for r, v in letters:
        flat.extend([(r, v)] * (abs(v) if r == 0 else 1))
    for i in range(len(flat)):
        for j in range(i + 1, len(flat)):
            a, b = flat[i], flat[j]
            if b[0] == 0 and a[0] == 0:
                if a[1] != b[1]:
                    inv += 1  # T followed by T^-1 (or vice versa) still cancels
            elif _reducible(a, b):
                inv += 1
    return length, inv, sum(1 for r, _ in letters if r == 0)


def _to_monomial(letters: tuple[Letter, ...]) -> NormalMonomial:
    t = 0
    c = 0
    ls, ws = [], []
    for r, v in letters:
        if r == 0:
            t += v
        elif r == 1:
            c += 1
        elif r == 2:
            ls.append(v)
        else:
            ws.append(v)
    return NormalMonomial(t, c, tuple(ls), tuple(ws))


@lru_cache(maxsize=200_000)
def _nf(letters: tuple[Letter, ...], mode: RelationMode) -> dict:
    for p in range(len(letters) - 1):
        if _reducible(letters[p], letters[p + 1]):
            break
    else:
        return {_to_monomial(letters): ONE}
    head, tail = letters[:p], letters[p + 2:]
    out: dict = {}
    for coeff, mid in rewrite_step(letters[p], letters[p + 1], mode):
        for mono, c in _nf(head + mid + tail, mode).items():
            v = out.get(mono)
            v = c * coeff if v is None else v + c * coeff
            if v:
                out[mono] = v
            else:
                del out[mono]
    return out


def normal_form(word: Sequence[GeneratorSymbol], mode: RelationMode = CENTRAL) -> AlgebraElement:
    """The normal-ordered element equal to the raw word."""
    letters = tuple(l for l in encode(word) if l[0] != 0 or l[1] != 0)
    return AlgebraElement._trusted(dict(_nf(letters, RelationMode(mode))))


def normalize_letters(letters: tuple[Letter, ...], mode: RelationMode = CENTRAL) -> AlgebraElement:
    return AlgebraElement._trusted(dict(_nf(letters, RelationMode(mode))))


@lru_cache(maxsize=200_000)
def _mono_product(a: NormalMonomial, b: NormalMonomial, mode: RelationMode) -> dict:
    if a.is_identity:
        return {b: ONE}
    if b.is_identity:
        return {a: ONE}
    return _nf(monomial_letters(a) + monomial_letters(b), mode)


def multiply(a: AlgebraElement, b: AlgebraElement, mode: RelationMode = CENTRAL) -> AlgebraElement:
    """Normal-ordered product a*b."""
    mode = RelationMode(mode)
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            cab = ca * cb
            for mono, c in _mono_product(ma, mb, mode).items():
                v = out.get(mono)
                v = c * cab if v is None else v + c * cab
                if v:
                    out[mono] = v
                else:
                    del out[mono]
    return AlgebraElement._trusted(out)


def multiply_all(factors: Sequence[AlgebraElement], mode: RelationMode = CENTRAL) -> AlgebraElement:
    out = AlgebraElement.scalar(ONE)
    for f in factors:
        out = multiply(out, f, mode)
    return out


def q_bracket_realized(x: AlgebraElement, y: AlgebraElement, wx: int, wy: int,
                       mode: RelationMode = CENTRAL) -> AlgebraElement:
    """q^wx x y - q^wy y x."""
    return multiply(x, y, mode).scale(q_power(wx)) - multiply(y, x, mode).scale(q_power(wy))


# ---------------------------------------------------------------------------
# empirical associativity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConfluenceReport:
    samples: int
    failures: int
    mode: RelationMode
    seed: int
    counterexample: tuple | None = None
    difference: AlgebraElement | None = None

    @property
    def passed(self):
        return self.failures == 0


def random_word(rng: random.Random, index_bound: int, max_len: int, with_t: bool = True):
    kinds = ["L", "W", "C", "T", "Tinv"] if with_t else ["L", "W", "C"]
    weights = [4, 4, 1, 1, 1] if with_t else [4, 4, 1]
    n = rng.randint(1, max_len)
    word = []
    for _ in range(n):
        k = rng.choices(kinds, weights)[0]
        if k in ("L", "W"):
            word.append(GeneratorSymbol(k, rng.randint(-index_bound, index_bound)))
        else:
            word.append(GeneratorSymbol(k))
    return tuple(word)


def confluence_probe(sample_count: int, index_bound: int, max_len: int, seed: int,
                     mode: RelationMode = CENTRAL, collect: list | None = None) -> ConfluenceReport:
    """Compare (uv)w with u(vw) on seeded random words.

    Every normal form computed is appended to ``collect`` when it is given.
    """
    mode = RelationMode(mode)
    rng = random.Random(seed)
    failures = 0
    first = None
    diff = None
    for _ in range(sample_count):
        u, v, w = (random_word(rng, index_bound, max_len) for _ in range(3))
        U, V, Wd = (normal_form(x, mode) for x in (u, v, w))
        left = multiply(multiply(U, V, mode), Wd, mode)
        right = multiply(U, multiply(V, Wd, mode), mode)
        if collect is not None:
            collect.extend((U, V, Wd, left, right))
        if left != right:
            failures += 1
            if first is None:
                first, diff = (u, v, w), left - right
    return ConfluenceReport(sample_count, failures, mode, seed, first, diff)


def clear_caches():
    _nf.cache_clear()
    _mono_product.cache_clear()
