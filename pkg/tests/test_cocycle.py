import itertools

import pytest
import sympy as sp

from qw.algebra import LieGenerator
from qw.cocycle import (
    CocycleTable,
    LinearSystem,
    build_cocycle_system,
    check_cocycle_identity,
    closed_form_vector,
    coboundary_vector,
    compare_closed_form,
    cocycle_sum,
    gauge_fix,
    quotient_by_coboundaries,
    solve_cocycle,
    solve_homogeneous,
    window_pairs,
)
from qw.scalars import ONE, Q, ZERO, QScalar, central_coeff, q_integer

from conftest import cc, q, qnum, to_sympy


def test_window_pairs_count():
    sys = build_cocycle_system(2)
    assert sys.unknown_index == window_pairs(2)
    assert len(sys.unknown_index) == 19
    assert all(abs(i) <= 2 and abs(j) <= 2 and abs(i + j) <= 2 for i, j in sys.unknown_index)


def test_window_too_small():
    with pytest.raises(ValueError):
        build_cocycle_system(1)


def test_nullspace_tiny():
    assert solve_homogeneous(LinearSystem(((0, 0), (0, 1)), ((ONE, -ONE),))) == [(ONE, ONE)]
    assert len(solve_homogeneous(LinearSystem(((0, 0), (0, 1), (1, 0)), ()))) == 3


@pytest.mark.parametrize("N", [2, 3, 4])
def test_closed_form_is_a_solution(N):
    sys = build_cocycle_system(N)
    assert all(not r for r in sys.residuals(closed_form_vector(N)))


def test_nullspace_dimension_against_sympy():
    sys = build_cocycle_system(2)
    M = sp.Matrix([[to_sympy(c) for c in row] for row in sys.rows])
    ours = solve_homogeneous(sys)
    assert len(ours) == len(M.nullspace(simplify=True)) == 6
    for v in ours:
        vec = sp.Matrix([to_sympy(c) for c in v])
        assert (M * vec).applyfunc(sp.simplify) == sp.zeros(M.rows, 1)


@pytest.mark.parametrize("N", [2, 3])
def test_coboundary_is_gauged_away(N):
    chi = {m: Q**m + m for m in range(-N, N + 1)}
    cob = coboundary_vector(chi, N)
    sys = build_cocycle_system(N)
    assert all(not r for r in sys.residuals(cob))
    assert all(not x for x in gauge_fix(cob, N))
    assert all(not x for x in gauge_fix(cob, N, pin=(-1, 1)))


def test_closed_form_is_already_gauge_fixed():
    v = closed_form_vector(3)
    assert gauge_fix(v, 3) == v
    assert all(not x for x in gauge_fix([ZERO] * len(v), 3))


@pytest.mark.parametrize("N", [2, 3, 4])
@pytest.mark.parametrize("pin", [(1, -1), (-1, 1)])
def test_solver(N, pin):
    rep = solve_cocycle(N, pin)
    assert rep.nullspace_dim == 2 * N + 2
    assert rep.gauge_fixed_dim == 1
    assert rep.ok and rep.residuals_ok
    assert rep.comparison.multiple


def test_solver_with_injected_coboundary():
    N = 3
    chi = {m: QScalar(m * m + 1) for m in range(-N, N + 1)}
    v = tuple(a + b for a, b in zip(closed_form_vector(N), coboundary_vector(chi, N)))
    assert gauge_fix(v, N) == closed_form_vector(N)
    cmp = compare_closed_form(quotient_by_coboundaries([v], N), N)
    assert cmp.ok and cmp.dimension == 1


def test_comparison_mismatches():
    assert compare_closed_form([], 3).dimension == 0 and not compare_closed_form([], 3).ok
    pairs = window_pairs(3)
    v = list(closed_form_vector(3))
    v[pairs.index((2, 1))] = ONE
    cmp = compare_closed_form([tuple(v)], 3)
    assert not cmp.ok and cmp.mismatch == (2, 1)


@pytest.mark.parametrize("ijk", [(2, -1, -1), (0, 0, 0), (3, -2, -1)])
def test_cocycle_identity_examples(ijk):
    assert check_cocycle_identity(*ijk)


def test_cocycle_identity_sweep():
    for ijk in itertools.product(range(-3, 4), repeat=3):
        assert check_cocycle_identity(*ijk), ijk


def test_a_wrong_cocycle_fails():
    wrong = CocycleTable(5, {(m, -m): q_integer(m) for m in range(-5, 6)})
    L, W = (lambda m: LieGenerator("L", m)), (lambda m: LieGenerator("W", m))
    assert any(cocycle_sum(wrong, L(i), L(j), W(-i - j)) for i in range(-2, 3) for j in range(-2, 3))
