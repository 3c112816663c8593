from itertools import combinations, product
from math import comb

import pytest

from pointgb.closedform import (
    all_classes,
    basis_root_of_unity,
    basis_uniform,
    characteristic_vectors,
    dd_family,
    enumerate_B,
    enumerate_B_exponents,
    equiv_class,
    f_polynomial,
    f_value_at_subset,
    hset_family,
    in_dd_family,
    min_set,
    root_of_unity_report,
    subset_vector,
    uniform_generators,
    uniform_new_standard_monomial,
)
from pointgb.exactnum import CyclotomicField, PrimeField, omega
from pointgb.groebner import autoreduce, is_groebner, standard_monomials
from pointgb.pointideal import vanishing_basis
from pointgb.polyring import DEGLEX, LEX, Polynomial, elementary_symmetric, evaluate


def test_equiv_class_examples():
    assert set(equiv_class((0, 1), 2).members) == {(0, 1), (1, 0)}
    assert set(equiv_class((0, 0), 3).members) == {(0, 0), (1, 1), (2, 2)}
    with pytest.raises(ValueError):
        equiv_class((0, 3), 3)


@pytest.mark.parametrize("n,p", [(2, 2), (3, 3), (2, 5), (4, 2)])
def test_classes_partition_D(n, p):
    classes = all_classes(n, p)
    assert len(classes) == p ** (n - 1)
    assert all(len(set(c.members)) == p for c in classes)
    members = [m for c in classes for m in c.members]
    assert sorted(members) == sorted(product(range(p), repeat=n))


def test_min_set_examples():
    assert min_set(2, 2, DEGLEX) == {(0, 0), (0, 1)}
    assert min_set(2, 3, DEGLEX) == {(0, 0), (1, 0), (0, 1)}
    assert len(min_set(3, 3, DEGLEX)) == 9
    assert len(min_set(3, 3, LEX)) == 9


def test_basis_root_of_unity_examples():
    K = CyclotomicField(2)
    G = basis_root_of_unity(2, 2, 0, DEGLEX)
    P = lambda t: Polynomial.parse(t, 2, K)
    assert set(G) == {P("x1*x2 - 1"), P("x1 - x2"), P("x1^2 - 1"), P("x2^2 - 1")}
    assert set(autoreduce(G, DEGLEX)) == {P("x1 - x2"), P("x2^2 - 1")}

    K3 = CyclotomicField(3)
    G3 = set(basis_root_of_unity(2, 3, 0, DEGLEX))
    assert Polynomial.parse("x1*x2 - 1", 2, K3) in G3
    assert Polynomial.parse("x2^2 - x1", 2, K3) in G3
    with pytest.raises(ValueError):
        basis_root_of_unity(2, 3, 3)


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 3), (4, 2)])
def test_closed_form_vanishes_on_B_j(n, p):
    for j in range(p):
        pts = enumerate_B(n, p, j)
        assert len(pts) == p ** (n - 1)
        for g in basis_root_of_unity(n, p, j, DEGLEX):
            assert all(not evaluate(g, pt) for pt in pts)


def test_closed_form_not_reduced_on_small_case():
    rep = root_of_unity_report(2, 2, 0, DEGLEX)
    assert rep["is_groebner"] and not rep["is_reduced"]
    assert rep["divisibility_witness"] is not None


def test_enumerate_B_examples():
    one, m1 = omega(2, 0), omega(2, 1)
    assert set(enumerate_B(2, 2, 0)) == {(one, one), (m1, m1)}
    assert set(enumerate_B(2, 2, 1)) == {(one, m1), (m1, one)}
    assert len(enumerate_B(3, 3, 2)) == 9
    with pytest.raises(OverflowError):
        enumerate_B_exponents(20, 3, 0)


def _hset_brute(t, n):
    out = []
    for S in combinations(range(1, n + 1), t):
        first = next((j for j in range(1, t + 1) if S[j - 1] < 2 * j), None)
        if first == t:
            out.append(S)
    return out


def test_hset_family_examples():
    assert hset_family(1, 6) == ((1,),)
    assert hset_family(2, 6) == ((2, 3),)
    assert set(hset_family(3, 6)) == {(2, 4, 5), (3, 4, 5)}
    with pytest.raises(ValueError):
        hset_family(4, 6)


@pytest.mark.parametrize("n", range(2, 11))
def test_hset_family_matches_definition(n):
    for t in range(1, n // 2 + 1):
        H = hset_family(t, n)
        assert set(H) == set(_hset_brute(t, n))
        for S in H:
            assert S[-1] == 2 * t - 1
            if t > 1:
                assert S[-2] == 2 * t - 2


def test_f_polynomial_examples():
    n = 5
    for d in range(n + 1):
        f1 = f_polynomial((1,), d, n)
        assert f1 == Polynomial.parse("x1 + x2 + x3 + x4 + x5", n) - d
        U = range(2, n + 1)
        expected = elementary_symmetric(U, 2, n) - elementary_symmetric(U, 1, n).scale(d - 1) + comb(d, 2)
        assert f_polynomial((2, 3), d, n) == expected
    with pytest.raises(ValueError):
        f_polynomial((1, 2), 2, 5)


@pytest.mark.parametrize("n", range(2, 9))
def test_f_polynomial_leading_term_and_vanishing(n):
    for t in range(1, n // 2 + 1):
        for H in hset_family(t, n):
            for d in range(n + 1):
                f = f_polynomial(H, d, n)
                lm, lc = f.leading_term(DEGLEX)
                assert f.degree() == t
                assert lm == tuple(1 if i + 1 in H else 0 for i in range(n)) and lc == 1
                for D in combinations(range(1, n + 1), d):
                    v = subset_vector(D, n)
                    assert evaluate(f, v) == 0
                # the closed-form evaluation at 0/1 points agrees with expansion
                for k in range(n + 1):
                    S = tuple(range(1, k + 1))
                    assert f_value_at_subset(H, d, n, S) == evaluate(f, subset_vector(S, n))


def test_dd_family_examples():
    assert {tuple(U) for U in dd_family(1, 4)} == {(2, 3), (2, 4), (3, 4)}
    assert {tuple(U) for U in dd_family(0, 2)} == {(1,), (2,)}
    assert not in_dd_family((1, 3), 1)
    assert in_dd_family((2, 4), 1)
    for d in range(4):
        for n in range(d + 1, 9):
            brute = [U for U in combinations(range(1, n + 1), d + 1) if in_dd_family(U, d)]
            assert sorted(dd_family(d, n)) == brute


def test_basis_uniform_examples():
    F2 = PrimeField(2)
    B = basis_uniform(2, 1, F2)
    P = lambda t: Polynomial.parse(t, 2, F2)
    assert set(B) == {P("x1 + x2 - 1"), P("x2^2 - x2")}
    assert set(B) == set(vanishing_basis(characteristic_vectors(2, 1, F2), DEGLEX, F2))
    F3 = PrimeField(3)
    B42 = basis_uniform(4, 2, F3)
    assert len(standard_monomials(B42)) == comb(4, 2) == 6
    assert B42.reduced
    with pytest.raises(ValueError):
        basis_uniform(4, 3, F3)


@pytest.mark.parametrize("n,d", [(4, 1), (4, 2), (5, 2), (6, 2), (6, 3)])
def test_basis_uniform_vanishes_and_is_groebner(n, d):
    F = PrimeField(3)
    B = basis_uniform(n, d, F)
    pts = characteristic_vectors(n, d, F)
    assert all(not evaluate(g, v) for g in B for v in pts)
    assert is_groebner(B, DEGLEX)
    assert len(standard_monomials(B)) == comb(n, d)


@pytest.mark.parametrize("n,d", [(4, 2), (6, 3), (6, 2)])
def test_symbolic_new_monomial_matches_expanded(n, d):
    from pointgb.boundcert import new_standard_monomial

    for p in (2, 3):
        F = PrimeField(p)
        B = basis_uniform(n, d, F)
        assert [g.lm for g in uniform_generators(n, d)] == B.leading_monomials()
        for k in range(n + 1):
            for C in combinations(range(1, n + 1), k):
                if k == d:
                    continue
                y, _ = uniform_new_standard_monomial(n, d, C, p)
                assert y == new_standard_monomial(B, subset_vector(C, n, F))
