"""
Where the relations disagree
============================

Three checks that fail, with the smallest witnesses.
"""

from qw import STRICT_PAPER, render
from qw.hopf import antihom_sides, relation_sides
from qw.rewrite import confluence_probe

# 1. with C T^m = q^m T^m C, Delta no longer respects C L_m = L_m C
lhs, rhs = relation_sides(1, 0, "CL", STRICT_PAPER)
print("Delta(C)Delta(L1) - Delta(L1)Delta(C) =", render(lhs - rhs))

# 2. S is not anti-multiplicative on [L1, L2]_q
lhs, rhs = antihom_sides(1, 2, "LL")
print("S defect on (L1, L2):", render(lhs - rhs))

# 3. associativity of the normal-ordered product
rep = confluence_probe(500, 3, 3, 42)
print(rep.failures, "of", rep.samples, "random triples fail; first", rep.counterexample)
