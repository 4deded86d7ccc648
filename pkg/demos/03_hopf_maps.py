"""
Coproduct, counit and antipode
==============================
"""

from qw import C, L, T, W, antipode, coproduct, counit, evaluate_text, render
from qw.hopf import check_antipode_axiom, check_coassociativity, check_cocommutativity

print("Delta(L3) =", render(coproduct(L(3))))
print("Delta(C)  =", render(coproduct(C())))
print("eps(5 T^3) =", counit(T(3).scale(5)))
print("S(L1) =", render(antipode(L(1))))

# the expression language does the same
print(render(evaluate_text("Delta(L(1)*W(1))")))

for x in (L(5), W(-2), T(1), L(1) * W(2)):
    print(render(x), "coassociative:", check_coassociativity(x),
          "cocommutative:", check_cocommutativity(x),
          "antipode axiom:", check_antipode_axiom(x))

# a product where the antipode axiom breaks
x = T(1) * L(2) * L(3)
print(render(x), "antipode axiom:", check_antipode_axiom(x))
