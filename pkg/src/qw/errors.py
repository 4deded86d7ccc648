"""Exception hierarchy shared by every module of the kernel."""


class QwError(Exception):
    """Base class for all kernel errors."""


class DivisionByZero(QwError, ZeroDivisionError):
    pass


class PoleError(QwError, ArithmeticError):
    """Evaluation of a rational function at a root of its denominator."""


class ParseError(QwError, SyntaxError):
    """Malformed expression text.

    ``line`` and ``column`` are 1-based; ``offset`` is the 0-based character
    offset into the source; ``expected`` is the set of token descriptions the
    parser would have accepted at that point.
    """

    def __init__(self, message, source="", offset=0, expected=()):
        self.source = source
        self.pos = offset
        self.expected = frozenset(expected)
        before = source[:offset]
        self.line_no = before.count("\n") + 1
        self.column = offset - (before.rfind("\n") + 1) + 1
        detail = message
        if self.expected:
            detail += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(f"{detail} at line {self.line_no}, column {self.column}")


class GeneratorIndexError(ParseError, IndexError):
    """Generator index that is not an integer literal."""


class EvalTypeError(QwError, TypeError):
    """Operands of incompatible kinds (scalar, element, tensor)."""


class WeightError(QwError, ValueError):
    """q-bracket of a non-homogeneous operand without declared weights."""
