"""Vanishing ideals of finite point sets, built one point at a time."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groebner import GroebnerBasis, autoreduce
from .polyring import DEGLEX, Polynomial, TermOrder, evaluate


class PointInSetError(ValueError):
    """The new point already lies on the variety of the basis."""


@dataclass(frozen=True)
class PointSet:
    n: int
    field: object
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(self.field(a) for a in pt) for pt in self.points)
        for pt in pts:
            if len(pt) != self.n:
                raise ValueError(f"point {pt} does not have {self.n} coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @classmethod
    def from_json(cls, data: dict) -> "PointSet":
        from .exactnum import field_from_tag

        field = field_from_tag(data["field"])
        pts = [tuple(field.parse(str(a)) for a in pt) for pt in data["points"]]
        return cls(int(data["n"]), field, tuple(pts))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.tag,
            "points": [[self.field.format(a) for a in pt] for pt in self.points],
        }


def single_point_basis(point: Sequence, field, order: TermOrder = DEGLEX) -> GroebnerBasis:
    """Reduced basis {x_1 - a_1, ..., x_n - a_n} of a single point."""
    n = len(point)
    polys = [
        Polynomial.variable(n, field, k) - Polynomial.constant(n, field, a)
        for k, a in enumerate(point)
    ]
    return GroebnerBasis(order, tuple(polys), reduced=True)


def _pivot(B: GroebnerBasis, h):
    """Index and value of the smallest-leading-monomial element not vanishing at h."""
    for i, g in enumerate(B.polys):
        v = evaluate(g, h)
        if v:
            return i, v
    raise PointInSetError(f"point {tuple(map(str, h))} already lies in the point set")


def add_point(B: GroebnerBasis, h: Sequence):
    """One Farr-Gao step: a Groebner basis of I(F + {h}) from the reduced basis of I(F).

    Returns ``(basis, m)`` where the basis is not autoreduced and ``m`` is the
    single monomial that joins the staircase.
    """
    field = B.field
    n = B.n
    h = tuple(field(a) for a in h)
    order = B.order
    i, gi_h = _pivot(B, h)
    gi = B.polys[i]
    out = []
    for j, g in enumerate(B.polys):
        if j == i:
            continue
        v = evaluate(g, h)
        out.append(g - gi.scale(v / gi_h) if v else g)
    for k in range(n):
        linear = Polynomial.variable(n, field, k) - Polynomial.constant(n, field, h[k])
        out.append(linear * gi)
    return GroebnerBasis(order, tuple(out), reduced=False), gi.leading_monomial(order)


def vanishing_basis(points, order: TermOrder = DEGLEX, field=None) -> GroebnerBasis:
    """Reduced Groebner basis of I(points), inserting points in the given order."""
    if not isinstance(points, PointSet):
        if field is None:
            raise ValueError("a field is required for a raw point list")
        pts = list(points)
        if not pts:
            raise ValueError("empty point set")
        points = PointSet(len(pts[0]), field, tuple(pts))
    if not len(points):
        raise ValueError("empty point set")
    it = iter(points.points)
    B = single_point_basis(next(it), points.field, order)
    for h in it:
        step, _ = add_point(B, h)
        B = autoreduce(step, check=False)
    return B


def characteristic_function(B: GroebnerBasis, h: Sequence) -> Polynomial:
    """g_i / g_i(h): equal to 1 at h and 0 on the points of B's variety."""
    h = tuple(B.field(a) for a in h)
    i, v = _pivot(B, h)
    return B.polys[i].scale(1 / v)
