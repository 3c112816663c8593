"""Degree lower bounds from standard monomials.

If P vanishes on a finite set F but not at a point h, then P has degree at
least deg(y), where y is the one monomial that joins the deglex staircase
when h is added to F.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import ceil

from .groebner import GroebnerBasis, autoreduce
from .pointideal import PointInSetError, _pivot, add_point
from .polyring import Polynomial, evaluate, monomial_str


class CertificateRefused(Exception):
    """A hypothesis of the certificate failed; ``stage`` names which one."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.message = message


@dataclass
class DegreeCertificate:
    y: tuple
    bound: int
    witness_h: tuple
    alpha_y: object
    alpha_y_nonzero: bool
    reduced_P_degree: int
    deg_P: int
    notes: list = dc_field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.alpha_y_nonzero and self.deg_P >= self.bound

    def to_json(self, field=None) -> dict:
        fmt = field.format if field is not None else str
        return {
            "y": list(self.y),
            "y_text": monomial_str(self.y),
            "bound": self.bound,
            "h": [fmt(a) for a in self.witness_h],
            "alphaY": fmt(self.alpha_y),
            "alphaYNonzero": self.alpha_y_nonzero,
            "reducedDegP": self.reduced_P_degree,
            "degP": self.deg_P,
            "valid": self.valid,
            "notes": list(self.notes),
        }


def new_standard_monomial(B: GroebnerBasis, h) -> tuple:
    """Leading monomial of the first basis element (ascending order) not vanishing at h."""
    h = tuple(B.field(a) for a in h)
    try:
        i, _ = _pivot(B, h)
    except PointInSetError as exc:
        raise PointInSetError(str(exc)) from None
    return B.polys[i].leading_monomial(B.order)


def certify_degree(P: Polynomial, B: GroebnerBasis, h, points=None) -> DegreeCertificate:
    """Certify deg(P) >= deg(y) for P vanishing on F = V(I(B)) with P(h) != 0.

    ``B`` must be the reduced deglex basis of I(F).  When ``points`` (the
    explicit F) is given, vanishing is checked pointwise, otherwise by
    reducing P modulo ``B``.
    """
    if B.order.kind != "deglex":
        raise CertificateRefused("order", "degree bounds need the deglex order")
    field = B.field
    h = tuple(field(a) for a in h)
    if P.is_zero() or not evaluate(P, h):
        raise CertificateRefused("nonvanishing", "P(h) = 0")
    if points is not None:
        for v in points:
            if evaluate(P, v):
                raise CertificateRefused("vanishing", f"P does not vanish at {tuple(map(str, v))}")
    elif not B.reduce(P).is_zero():
        raise CertificateRefused("vanishing", "P is not in the ideal of the point set")
    try:
        step, y = add_point(B, h)
    except PointInSetError as exc:
        raise CertificateRefused("point", str(exc)) from None
    BT = autoreduce(step, check=False)
    Pbar = BT.reduce(P)
    alpha = Pbar.coefficient(y)
    cert = DegreeCertificate(
        y=y,
        bound=sum(y),
        witness_h=h,
        alpha_y=alpha,
        alpha_y_nonzero=bool(alpha),
        reduced_P_degree=Pbar.degree(),
        deg_P=P.degree(),
    )
    if not cert.alpha_y_nonzero:
        raise CertificateRefused("alpha", "coefficient of the new standard monomial vanished")
    return cert


def becs_bound_exact(n: int, p: int) -> Fraction:
    if n % p:
        raise ValueError(f"p={p} does not divide n={n}")
    return Fraction(n * (p - 1), p)


def becs_bound(n: int, p: int) -> int:
    """ceil(n(p-1)/p): lower bound for the new staircase monomial over B_t."""
    return ceil(becs_bound_exact(n, p))
