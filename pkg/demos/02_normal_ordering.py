"""
Multiplying in U_q
==================

Products are rewritten to the order T^t C^c L... W... with sorted
indices.  The q-bracket can then be realized as q^m xy - q^n yx.
"""

from qw import L, T, W, multiply, render
from qw.rewrite import q_bracket_realized

print("L1 * L2 =", render(L(1) * L(2)))
print("L2 * L1 =", render(L(2) * L(1)))

# T moves to the front, picking up powers of q
print("L2 * T  =", render(L(2) * T(1)))
print("T * T^-1 =", render(T(1) * T(-1)))

# the realized bracket reproduces the table
print("q^2 L2 W-2 - q^-2 W-2 L2 =", render(q_bracket_realized(L(2), W(-2), 2, -2)))

# but the product is not associative once T is involved
u, v, w = W(-1), L(2), T(1)
left = multiply(multiply(u, v), w)
right = multiply(u, multiply(v, w))
print("(W-1 L2) T - W-1 (L2 T) =", render(left - right))
