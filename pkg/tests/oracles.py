"""Independent reference computations used by the tests."""

import cmath
import random
from itertools import product

from pointgb.exactnum import CyclotomicNumber, PrimeField
from pointgb.polyring import evaluate


def to_complex(a: CyclotomicNumber) -> complex:
    w = cmath.exp(2j * cmath.pi / a.p)
    return sum(float(c) * w**i for i, c in enumerate(a.coeffs))


def root_complex(e, p):
    return [cmath.exp(2j * cmath.pi * k / p) for k in e]


def _rank_increases(rows, new, field):
    """Gaussian elimination: does ``new`` lie outside the span of ``rows``? (rows kept echelon)"""
    v = list(new)
    for pivot, r in rows:
        if v[pivot]:
            f = v[pivot] / r[pivot]
            v = [a - f * b for a, b in zip(v, r)]
    for i, a in enumerate(v):
        if a:
            rows.append((i, v))
            return True
    return False


def staircase_by_linear_algebra(points, field, order, max_exp):
    """Standard monomials of I(points): monomials whose evaluation vector is independent
    of those of all smaller monomials (greedy basis in ascending order)."""
    n = len(points[0])
    monos = sorted(product(range(max_exp + 1), repeat=n), key=order.key)
    rows, std = [], set()
    for m in monos:
        vec = []
        for pt in points:
            v = field.one
            for a, e in zip(pt, m):
                v = v * a**e
            vec.append(v)
        if _rank_increases(rows, vec, field):
            std.add(m)
        if len(std) == len(points):
            break
    return std


def random_point_set(rng: random.Random, field, n, size):
    if isinstance(field, PrimeField):
        universe = field.p**n
        size = min(size, universe)
        coords = lambda: tuple(field(rng.randrange(field.p)) for _ in range(n))
    else:
        K = field
        choices = [K(0), K(1), K(-1), K.omega(1), K.omega(2), K(2)]
        coords = lambda: tuple(rng.choice(choices) for _ in range(n))
        size = min(size, len(choices) ** n)
    pts = set()
    while len(pts) < size:
        pts.add(coords())
    pts = list(pts)
    rng.shuffle(pts)
    return pts


def vanishes_on(G, points):
    return all(not evaluate(g, pt) for g in G for pt in points)


def _rank(vectors, field):
    rows = []
    for v in vectors:
        _rank_increases(rows, v, field)
    return len(rows)


def _eval_vector(m, points, field):
    out = []
    for pt in points:
        v = field.one
        for a, e in zip(pt, m):
            v = v * a**e
        out.append(v)
    return out


def min_separating_degree(points, h, field, max_deg):
    """Least d such that some P of degree <= d vanishes on ``points`` with P(h) != 0.

    Such P exists iff adding h raises the rank of the degree <= d evaluation map.
    """
    n = len(h)
    for d in range(max_deg + 1):
        monos = [m for m in product(range(d + 1), repeat=n) if sum(m) <= d]
        with_h = [_eval_vector(m, list(points) + [h], field) for m in monos]
        without = [row[:-1] for row in with_h]
        if _rank(with_h, field) > _rank(without, field):
            return d
    return None
