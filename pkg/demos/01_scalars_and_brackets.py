"""
q-numbers and the bracket table
===============================

Scalars are exact elements of Q(q).  The bracket table of the deformed
W(2,2) algebra is built from q-numbers and tends to the classical table
at q = 1.
"""

from qw import Q, LieGenerator, bracket_table, central_coeff, eval_at, q_integer, render

# q-numbers are rational functions in canonical form
for n in (-2, -1, 0, 1, 2, 3):
    print(f"[{n}]_q =", q_integer(n))

print("1/(q-1) * (q-1) =", 1 / (Q - 1) * (Q - 1))

# the central charge coefficient, and its value at q = 1
for m in range(2, 6):
    c = central_coeff(m)
    print(f"m={m}:", c, "  at q=1:", eval_at(c, 1), "  (m^3-m)/12 =", (m**3 - m) / 12)

# some brackets
L2, Wm2 = LieGenerator("L", 2), LieGenerator("W", -2)
print("[L2, W-2]_q =", render(bracket_table(L2, Wm2)))
print("[L1, L-1]_q =", render(bracket_table(LieGenerator("L", 1), LieGenerator("L", -1))))
print("as LaTeX:", render(bracket_table(L2, Wm2), "latex"))
