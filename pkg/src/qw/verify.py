"""Window sweeps used by ``qw verify`` and the acceptance tests.

Every sweep enumerates its window exhaustively (the confluence and random
product samples are seeded) and returns a :class:`Report` listing every
instance checked.  ``collect``, when given, receives every algebra or tensor
element the sweep produced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import (
    AlgebraElement,
    LieGenerator,
    NormalMonomial,
    bracket_table,
    check_antisymmetry,
    lie_generators,
    q_jacobi_sum,
)
from .cocycle import check_cocycle_identity, closed_form_psi
from .hopf import (
    ANTIHOM_KINDS,
    PAIR_KINDS,
    antihom_sides,
    antipode,
    antipode_contractions,
    coassociativity_sides,
    coproduct,
    counit,
    counit_contractions,
    relation_sides,
)
from .rewrite import CENTRAL, RelationMode, confluence_probe, multiply, normal_form, random_word
from .scalars import eval_at

SUITES = ("jacobi", "cocycle", "hopf", "relations", "confluence", "limit")


@dataclass
class Report:
    check: str
    window: int
    mode: str
    instances: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def add(self, name, args, ok, detail=None):
        inst = {"check": name, "args": args, "pass": bool(ok)}
        if detail:
            inst["detail"] = detail
        self.instances.append(inst)

    @property
    def passed(self):
        return all(i["pass"] for i in self.instances)

    @property
    def failures(self):
        return [i for i in self.instances if not i["pass"]]

    @property
    def counterexample(self):
        f = self.failures
        return f[0] if f else None

    def as_dict(self):
        d = {
            "check": self.check,
            "window": self.window,
            "mode": self.mode,
            "pass": self.passed,
            "checked": len(self.instances),
            "failed": len(self.failures),
            "instances": self.instances,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.extra:
            d["extra"] = self.extra
        return d


def _gen_args(g: LieGenerator):
    return repr(g)


def _sink(collect, *xs):
    if collect is not None:
        collect.extend(x for x in xs if x is not None)


def verify_jacobi(window: int = 4, antisymmetry_window: int | None = None, collect=None) -> Report:
    aw = window if antisymmetry_window is None else antisymmetry_window
    rep = Report("jacobi", window, "n/a")
    rep.extra["antisymmetry_window"] = aw
    gens = lie_generators(aw, ("L", "W", "C"))
    for u, v in product(gens, repeat=2):
        ok = check_antisymmetry(u, v)
        _sink(collect, bracket_table(u, v))
        rep.add("antisymmetry", [_gen_args(u), _gen_args(v)], ok)
    for u, v, w in product(lie_generators(window), repeat=3):
        s = q_jacobi_sum(u, v, w)
        _sink(collect, s)
        rep.add("q_jacobi", [_gen_args(u), _gen_args(v), _gen_args(w)], s.is_zero())
    return rep


def verify_cocycle(window: int = 4, collect=None) -> Report:
    """Closed-form cocycle identity on all (i, j, k) in the window; collects psi values."""
    rep = Report("cocycle", window, "n/a")
    if collect is not None:
        collect.extend(closed_form_psi(LieGenerator("L", m), LieGenerator(k, -m))
                       for m in range(-window, window + 1) for k in ("L", "W"))
    rng = range(-window, window + 1)
    for i, j, k in product(rng, rng, rng):
        rep.add("cocycle_identity", [i, j, k], check_cocycle_identity(i, j, k))
    return rep


def verify_limit(window: int = 10, collect=None) -> Report:
    """q -> 1 limit of every structure constant against the classical W(2,2) table."""
    rep = Report("limit", window, "n/a")
    table = {}
    for m in range(-window, window + 1):
        for n in range(-window, window + 1):
            for kind in ("L", "W"):
                b = bracket_table(LieGenerator("L", m), LieGenerator(kind, n))
                _sink(collect, b)
                target = NormalMonomial(l_indices=(m + n,)) if kind == "L" else NormalMonomial(w_indices=(m + n,))
                got_x = eval_at(b.coefficient(target), 1)
                got_c = eval_at(b.coefficient(NormalMonomial(c_exp=1)), 1)
                want_c = Fraction(m ** 3 - m, 12) if m + n == 0 else Fraction(0)
                extra_terms = set(b.terms) - {target, NormalMonomial(c_exp=1)}
                ok = got_x == m - n and got_c == want_c and not extra_terms
                rep.add(f"limit_L{kind}", [m, n], ok,
                        None if ok else {"coefficient": str(got_x), "central": str(got_c)})
                if kind == "L" and m + n == 0:
                    table[m] = str(got_c)
    rep.extra["central_at_q1"] = table
    return rep


def _hopf_generators(window: int):
    gens = [AlgebraElement.from_lie(g) for g in lie_generators(window, ("L", "W", "C"))]
    gens += [AlgebraElement.t_power(1), AlgebraElement.t_power(-1)]
    return gens


def random_products(count: int, seed: int, index_bound: int = 3, max_len: int = 3, mode=CENTRAL):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        word = random_word(rng, index_bound, max_len)
        out.append((word, normal_form(word, mode)))
    return out


def _hopf_instance(rep, x: AlgebraElement, label, mode, collect):
    mode = RelationMode(mode)
    d = coproduct(x, mode)
    _sink(collect, x, d)
    left, right = coassociativity_sides(x, mode)
    _sink(collect, left, right)
    rep.add("coassociativity", [label], left == right)
    r, l = counit_contractions(x, mode)
    _sink(collect, r, l)
    rep.add("counit", [label], r == x and l == x)
    first, second = antipode_contractions(x, mode)
    _sink(collect, first, second, antipode(x, mode))
    unit = AlgebraElement.scalar(counit(x))
    rep.add("antipode", [label], first == unit and second == unit,
            None if first == unit and second == unit else {"left": str(first), "right": str(second)})
    rep.add("cocommutativity", [label], d.swap() == d)


def verify_hopf(window: int = 4, samples: int = 200, seed: int = 0, mode=CENTRAL,
                product_bound: int = 3, collect=None) -> Report:
    mode = RelationMode(mode)
    rep = Report("hopf", window, mode.value)
    rep.extra.update(samples=samples, seed=seed, product_index_bound=product_bound)
    for x in _hopf_generators(window):
        _hopf_instance(rep, x, str(x), mode, collect)
    for word, x in random_products(samples, seed, product_bound, 3, mode):
        _hopf_instance(rep, x, "*".join(map(repr, word)), mode, collect)
    t = AlgebraElement.t_power(1)
    rep.add("antipode_involutive_on_T", ["T"], antipode(antipode(t, mode), mode) == t)
    l1, l2 = AlgebraElement.from_lie(LieGenerator("L", 1)), AlgebraElement.from_lie(LieGenerator("L", 2))
    p, r = multiply(l1, l2, mode), multiply(l2, l1, mode)
    _sink(collect, p, r)
    rep.add("noncommutativity_witness", ["L(1)", "L(2)"], p != r)
    return rep


def verify_relations(window: int = 4, mode=CENTRAL, collect=None) -> Report:
    mode = RelationMode(mode)
    rep = Report("relations", window, mode.value)
    rng = range(-window, window + 1)
    for kind in PAIR_KINDS:
        for m, n in product(rng, rng):
            if kind in ("CL", "CW") and n != 0:
                continue
            lhs, rhs = relation_sides(m, n, kind, mode)
            _sink(collect, lhs, rhs)
            ok = lhs == rhs
            detail = None
            if not ok:
                detail = {"difference": str(lhs - rhs)}
                if kind in ("CL", "CW", "TC"):
                    detail["relation"] = "C-T commutation"
            args = {"m": m, "pair_kind": kind} if kind in ("CL", "CW") else {"m": m, "n": n, "pair_kind": kind}
            rep.add("delta_respects_relations", args, ok, detail)
    for kind in ANTIHOM_KINDS:
        for m, n in product(rng, rng):
            lhs, rhs = antihom_sides(m, n, kind, mode)
            _sink(collect, lhs, rhs)
            ok = lhs == rhs
            rep.add("antipode_antihom", {"m": m, "n": n, "pair_kind": kind}, ok,
                    None if ok else {"difference": str(lhs - rhs)})
    return rep


def verify_confluence(samples: int = 500, seed: int = 0, mode=CENTRAL, index_bound: int = 3,
                      max_len: int = 3, collect=None) -> Report:
    mode = RelationMode(mode)
    rep = Report("confluence", index_bound, mode.value)
    res = confluence_probe(samples, index_bound, max_len, seed, mode, collect)
    rep.extra.update(samples=samples, seed=seed, max_len=max_len, failures=res.failures)
    rep.add("associativity", {"samples": samples, "seed": seed}, res.passed,
            None if res.passed else {
                "u": list(map(repr, res.counterexample[0])),
                "v": list(map(repr, res.counterexample[1])),
                "w": list(map(repr, res.counterexample[2])),
                "difference": str(res.difference),
                "failures": res.failures,
            })
    return rep


def run_suite(name: str, window: int = 4, mode=CENTRAL, seed: int = 0, samples: int = 500,
              collect=None) -> Report:
    if name == "jacobi":
        return verify_jacobi(window, collect=collect)
    if name == "cocycle":
        return verify_cocycle(window, collect=collect)
    if name == "hopf":
        return verify_hopf(window, samples, seed, mode, collect=collect)
    if name == "relations":
        return verify_relations(window, mode, collect=collect)
    if name == "confluence":
        return verify_confluence(samples, seed, mode, index_bound=window, collect=collect)
    if name == "limit":
        return verify_limit(window, collect=collect)
    raise ValueError(f"unknown suite {name!r}")
