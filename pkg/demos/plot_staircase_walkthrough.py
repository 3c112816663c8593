"""
Growing a staircase one point at a time
=======================================

Build the vanishing ideal of a small point set over GF(5) by inserting
points one by one, and watch the set of standard monomials gain exactly one
element per insertion.
"""

from pointgb.exactnum import PrimeField
from pointgb.groebner import autoreduce, standard_monomials
from pointgb.pointideal import add_point, single_point_basis
from pointgb.polyring import DEGLEX, monomial_str

F = PrimeField(5)
points = [(F(1), F(4)), (F(0), F(2)), (F(3), F(3)), (F(2), F(2)), (F(4), F(0))]

# start from the ideal of one point: (x1 - a1, x2 - a2)
B = single_point_basis(points[0], F, DEGLEX)
print("after 1 point:", [g.to_text() for g in B])

for k, h in enumerate(points[1:], start=2):
    step, m = add_point(B, h)
    B = autoreduce(step)
    S = sorted(standard_monomials(B), key=DEGLEX.key)
    print(f"after {k} points: new monomial {monomial_str(m)}, staircase {[monomial_str(s) for s in S]}")

print("final basis:")
for g in B:
    print("   ", g.to_text())
