"""
Vanishing ideals of root-of-unity classes
=========================================

The vectors of {1, w, w^2}^3 split into three classes by the product of
their coordinates.  Each class has a closed-form Groebner basis; compare it
with the basis computed point by point, and look at the degree floor that
makes the balancing lower bound work.
"""

from math import ceil

from pointgb.boundcert import new_standard_monomial
from pointgb.closedform import basis_root_of_unity, enumerate_B, enumerate_B_exponents, min_set, root_point
from pointgb.exactnum import CyclotomicField
from pointgb.groebner import autoreduce, standard_monomials
from pointgb.pointideal import vanishing_basis
from pointgb.polyring import DEGLEX, monomial_str

n, p = 3, 3
K = CyclotomicField(p)

for j in range(p):
    closed = autoreduce(basis_root_of_unity(n, p, j, DEGLEX), DEGLEX)
    built = vanishing_basis(enumerate_B(n, p, j), DEGLEX, K)
    print(f"class {j}: {len(closed)} generators, closed form agrees: {set(closed) == set(built)}")

S = standard_monomials(closed)
print("staircase equals class minima:", S == min_set(n, p, DEGLEX))
print("staircase:", [monomial_str(m) for m in sorted(S, key=DEGLEX.key)])

# any point outside B_0 adds a monomial of degree at least ceil(n(p-1)/p)
B0 = autoreduce(basis_root_of_unity(n, p, 0, DEGLEX), DEGLEX)
degrees = {sum(new_standard_monomial(B0, root_point(e, p))) for e in enumerate_B_exponents(n, p) if sum(e) % p}
print("degrees of new monomials:", sorted(degrees), "floor:", ceil(n * (p - 1) / p))
