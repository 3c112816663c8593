import random
from fractions import Fraction
from itertools import combinations

import pytest

from oracles import min_separating_degree, random_point_set
from pointgb.boundcert import (
    CertificateRefused,
    becs_bound,
    becs_bound_exact,
    certify_degree,
    new_standard_monomial,
)
from pointgb.closedform import (
    basis_root_of_unity,
    basis_uniform,
    enumerate_B,
    enumerate_B_exponents,
    root_point,
    subset_vector,
)
from pointgb.exactnum import QQ, CyclotomicField, PrimeField
from pointgb.groebner import autoreduce
from pointgb.pointideal import PointInSetError, single_point_basis, vanishing_basis
from pointgb.polyring import DEGLEX, LEX, Polynomial, evaluate


def _root_basis(n, p, t):
    return autoreduce(basis_root_of_unity(n, p, t, DEGLEX), DEGLEX)


def test_new_standard_monomial_examples():
    B1 = _root_basis(2, 2, 1)
    K = CyclotomicField(2)
    assert set(B1) == {Polynomial.parse("x1 + x2", 2, K), Polynomial.parse("x2^2 - 1", 2, K)}
    assert new_standard_monomial(B1, (1, 1)) == (1, 0)
    B0 = single_point_basis((0, 0), QQ)
    assert new_standard_monomial(B0, (0, 1)) == (0, 1)
    with pytest.raises(PointInSetError):
        new_standard_monomial(B0, (0, 0))


def test_certify_degree_examples():
    K = CyclotomicField(2)
    B1 = _root_basis(2, 2, 1)
    P = Polynomial.parse("x1 + x2", 2, K)
    cert = certify_degree(P, B1, (1, 1), points=enumerate_B(2, 2, 1))
    assert cert.bound == 1 and cert.valid and cert.y == (1, 0)
    assert cert.alpha_y_nonzero and cert.deg_P >= cert.bound
    assert cert.to_json(K)["alphaY"] == K.format(cert.alpha_y)

    with pytest.raises(CertificateRefused) as err:
        certify_degree(Polynomial.constant(2, K, 1), B1, (1, 1))
    assert err.value.stage == "vanishing"
    with pytest.raises(CertificateRefused) as err:
        certify_degree(P, B1, (1, -1))
    assert err.value.stage == "nonvanishing"
    lexB = autoreduce(basis_root_of_unity(2, 2, 1, LEX), LEX)
    with pytest.raises(CertificateRefused) as err:
        certify_degree(P, lexB, (1, 1))
    assert err.value.stage == "order"


def test_becs_bound_examples():
    assert becs_bound(2, 2) == 1
    assert becs_bound(3, 3) == 2
    assert becs_bound(20, 5) == 16
    assert becs_bound_exact(3, 3) == Fraction(2)
    assert becs_bound_exact(4, 2) == 2
    with pytest.raises(ValueError):
        becs_bound(3, 2)


@pytest.mark.parametrize("n,p", [(2, 2), (3, 3), (4, 2)])
def test_new_monomial_degree_bound_over_root_classes(n, p):
    bound = becs_bound(n, p)
    for t in range(p):
        B = _root_basis(n, p, t)
        for e in enumerate_B_exponents(n, p):
            if sum(e) % p == t:
                continue
            assert sum(new_standard_monomial(B, root_point(e, p))) >= bound


@pytest.mark.parametrize("field", [PrimeField(3), PrimeField(5), CyclotomicField(3)])
def test_bound_is_the_minimal_separating_degree(field):
    # deglex: the reduced characteristic function has leading monomial y, so the
    # certified bound equals the least degree of any separating polynomial
    rng = random.Random(f"sep/{field.tag}")
    for _ in range(8):
        pts = random_point_set(rng, field, 2, rng.randrange(2, 8))
        F, h = pts[:-1], pts[-1]
        B = vanishing_basis(F, DEGLEX, field)
        y = new_standard_monomial(B, h)
        assert sum(y) == min_separating_degree(F, h, field, len(F))


@pytest.mark.parametrize("field", [PrimeField(5), CyclotomicField(3)])
def test_soundness_on_products_of_hyperplanes(field):
    rng = random.Random(f"sound/{field.tag}")
    n = 2
    for _ in range(10):
        pts = random_point_set(rng, field, n, rng.randrange(2, 7))
        F, h = pts[:-1], pts[-1]
        B = vanishing_basis(F, DEGLEX, field)
        # one affine form per point of F, each through that point but missing h
        P = Polynomial.constant(n, field, 1)
        for f in F:
            k = next(k for k in range(n) if f[k] != h[k])
            P = P * (Polynomial.variable(n, field, k) - f[k])
        cert = certify_degree(P, B, h, points=F)
        assert cert.valid and P.degree() >= cert.bound
        assert cert.reduced_P_degree <= P.degree()
        # the same certificate without explicit points, via reduction
        assert certify_degree(P, B, h).y == cert.y


def test_uniform_witnesses_at_p2():
    F2 = PrimeField(2)
    B = basis_uniform(8, 4, F2)
    for C in combinations(range(1, 9), 6):
        assert sum(new_standard_monomial(B, subset_vector(C, 8, F2))) >= 2


def test_refuses_when_h_is_a_zero_of_P():
    F3 = PrimeField(3)
    pts = [(F3(0), F3(1)), (F3(1), F3(1))]
    B = vanishing_basis(pts, DEGLEX, F3)
    P = Polynomial.parse("x2 - 1", 2, F3)
    assert all(not evaluate(P, q) for q in pts)
    assert certify_degree(P, B, (0, 0)).bound == 1
    with pytest.raises(CertificateRefused) as err:
        certify_degree(P, B, pts[0])
    assert err.value.stage == "nonvanishing"
