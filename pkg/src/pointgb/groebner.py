"""Buchberger's algorithm, reduced bases and staircase enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .polyring import (
    DEGLEX,
    Polynomial,
    TermOrder,
    divides,
    mono_lcm,
    reduce,
    s_polynomial,
)


class NotGroebnerError(ValueError):
    pass


class UnboundedStaircase(ValueError):
    """Some variable has no pure power among the leading monomials."""


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    polys: tuple
    reduced: bool = False

    def __post_init__(self):
        polys = tuple(sorted(self.polys, key=lambda g: self.order.key(g.leading_monomial(self.order))))
        object.__setattr__(self, "polys", polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    @property
    def n(self) -> int:
        return self.polys[0].n

    @property
    def field(self):
        return self.polys[0].field

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        return reduce(f, self.polys, self.order)

    def same_ideal_basis(self, other: "GroebnerBasis") -> bool:
        return self.order == other.order and set(self.polys) == set(other.polys)

    def to_json(self) -> dict:
        return {
            "order": self.order.kind,
            "field": self.field.tag,
            "n": self.n,
            "reduced": self.reduced,
            "basis": [g.to_json(self.order) for g in self.polys],
            "text": [g.to_text(self.order) for g in self.polys],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroebnerBasis":
        from .exactnum import field_from_tag

        field = field_from_tag(data["field"])
        order = TermOrder(data["order"])
        polys = [Polynomial.from_json(g, data["n"], field) for g in data["basis"]]
        return cls(order, tuple(polys), bool(data.get("reduced", False)))


def _nonzero(polys) -> list:
    out = [g for g in polys if not g.is_zero()]
    if not out:
        raise ValueError("need at least one nonzero polynomial")
    return out


def buchberger(generators: Sequence[Polynomial], order: TermOrder = DEGLEX) -> GroebnerBasis:
    """Groebner basis of the ideal generated by ``generators`` (not autoreduced).

    Pairs are processed by ascending lcm of leading monomials; pairs with
    coprime leading monomials are skipped.
    """
    G = _nonzero(generators)
    lms = [g.leading_monomial(order) for g in G]
    pairs = [(i, j) for i, j in combinations(range(len(G)), 2)]

    def pair_key(ij):
        i, j = ij
        return (order.key(mono_lcm(lms[i], lms[j])), ij)

    while pairs:
        pairs.sort(key=pair_key)
        i, j = pairs.pop(0)
        if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
            continue
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if r.is_zero():
            continue
        G.append(r)
        lms.append(r.leading_monomial(order))
        k = len(G) - 1
        pairs.extend((a, k) for a in range(k))
    return GroebnerBasis(order, tuple(G), reduced=False)


def is_groebner(B: Sequence[Polynomial], order: TermOrder = DEGLEX) -> bool:
    """Buchberger's criterion, checked on every pair (no criteria shortcuts)."""
    B = list(B.polys if isinstance(B, GroebnerBasis) else B)
    for f, g in combinations(B, 2):
        if not reduce(s_polynomial(f, g, order), B, order).is_zero():
            return False
    return True


def is_reduced(B: Sequence[Polynomial], order: TermOrder = DEGLEX) -> bool:
    """Monic, and no term of any element divisible by another element's leading monomial."""
    B = list(B.polys if isinstance(B, GroebnerBasis) else B)
    lead = [g.leading_term(order) for g in B]
    if any(c != 1 for _, c in lead):
        return False
    for i, g in enumerate(B):
        for j, (lm, _) in enumerate(lead):
            if i != j and any(divides(lm, m) for m in g.terms):
                return False
    return True


def autoreduce(B, order: TermOrder | None = None, check: bool = True) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal spanned by the Groebner basis ``B``.

    ``check=False`` skips the (quadratic) Buchberger-criterion precondition
    test; use it only where ``B`` is known to be a Groebner basis.
    """
    if isinstance(B, GroebnerBasis):
        order = order or B.order
        polys = list(B.polys)
    else:
        polys = list(B)
    order = order or DEGLEX
    polys = _nonzero(polys)
    if check and not is_groebner(polys, order):
        raise NotGroebnerError("input is not a Groebner basis")

    by_lm = {}
    for g in polys:
        lm = g.leading_monomial(order)
        by_lm.setdefault(lm, g)
    minimal = [
        lm for lm in by_lm if not any(o != lm and divides(o, lm) for o in by_lm)
    ]
    out = []
    for lm in minimal:
        g = by_lm[lm].monic(order)
        tail = g - Polynomial.monomial(lm, g.field)
        # tail monomials are smaller than lm, so elements with leading monomial lm never fire
        out.append(Polynomial.monomial(lm, g.field) + reduce(tail, polys, order))
    return GroebnerBasis(order, tuple(out), reduced=True)


def reduced_groebner_basis(generators, order: TermOrder = DEGLEX) -> GroebnerBasis:
    return autoreduce(buchberger(generators, order), check=False)


def standard_monomials(B, order: TermOrder | None = None) -> frozenset:
    """Monomials outside the initial ideal of a zero-dimensional Groebner basis."""
    if isinstance(B, GroebnerBasis):
        order = order or B.order
        polys = B.polys
    else:
        polys = list(B)
    order = order or DEGLEX
    lms = [g.leading_monomial(order) for g in polys]
    n = polys[0].n
    caps = []
    for i in range(n):
        pure = [m[i] for m in lms if all(e == 0 for k, e in enumerate(m) if k != i) and m[i] > 0]
        if not pure:
            raise UnboundedStaircase(f"no pure power of x{i + 1} among the leading monomials")
        caps.append(min(pure))
    if any(all(e == 0 for e in m) for m in lms):
        return frozenset()
    return frozenset(
        m
        for m in product(*(range(c) for c in caps))
        if not any(divides(lm, m) for lm in lms)
    )


def is_downward_closed(monomials) -> bool:
    S = set(monomials)
    for m in S:
        for i, e in enumerate(m):
            if e and m[:i] + (e - 1,) + m[i + 1 :] not in S:
                return False
    return True
