import sympy as sp
import pytest

from qw.scalars import QScalar

q = sp.Symbol("q")


def to_sympy(s: QScalar):
    num = sum(sp.Integer(c) * q**i for i, c in enumerate(s.int_numerator))
    den = sum(sp.Integer(c) * q**i for i, c in enumerate(s.int_denominator))
    return num / den


def qnum(n):
    return (q**n - 1) / (q - 1)


def cc(m):
    return q**(-m) * qnum(m - 1) * qnum(m) * qnum(m + 1) / (6 * (1 + q**m))


def same(s: QScalar, expr) -> bool:
    return sp.simplify(to_sympy(s) - expr) == 0


@pytest.fixture
def sym_q():
    return q


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[n])
