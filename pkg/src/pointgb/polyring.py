"""Monomials, term orders and sparse multivariate polynomials over an exact field.

Monomials are plain tuples of exponents ``(i_1, ..., i_n)``; variable ``x_1``
is the most significant one, so ``x_n < ... < x_1`` under both orders.
"""

from __future__ import annotations

import heapq
import json
from itertools import combinations
from typing import Iterable, Sequence

from .exactnum import QQ, parse_expression

Monomial = tuple


class TermOrder:
    """Lexicographic or degree-lexicographic order on exponent tuples."""

    KINDS = ("lex", "deglex")

    def __init__(self, kind: str = "deglex"):
        if kind not in self.KINDS:
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind

    def key(self, m: Monomial) -> tuple:
        if self.kind == "lex":
            return m
        return (sum(m),) + m

    def neg_key(self, m: Monomial) -> tuple:
        return tuple(-k for k in self.key(m))

    def compare(self, u: Monomial, v: Monomial) -> int:
        if len(u) != len(v):
            raise ValueError("monomials have different numbers of variables")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"TermOrder({self.kind!r})"


LEX = TermOrder("lex")
DEGLEX = TermOrder("deglex")


def compare(order: TermOrder, u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    return order.compare(u, v)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_div(v: Monomial, u: Monomial) -> Monomial:
    return tuple(b - a for a, b in zip(u, v))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def unit(n: int, i: int, e: int = 1) -> Monomial:
    m = [0] * n
    m[i] = e
    return tuple(m)


def monomial_str(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Sparse polynomial: a map from exponent tuples to nonzero field elements."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field=QQ, terms=None):
        self.n = n
        self.field = field
        self.terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                m = tuple(m)
                if len(m) != n:
                    raise ValueError(f"monomial {m} does not have {n} exponents")
                c = field(c)
                if m in self.terms:
                    c = self.terms[m] + c
                if c:
                    self.terms[m] = c
                else:
                    self.terms.pop(m, None)

    @classmethod
    def _raw(cls, n, field, terms):
        f = cls.__new__(cls)
        f.n, f.field, f.terms = n, field, terms
        return f

    @classmethod
    def zero(cls, n, field=QQ):
        return cls._raw(n, field, {})

    @classmethod
    def constant(cls, n, field, c):
        c = field(c)
        return cls._raw(n, field, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, n, field, i):
        return cls._raw(n, field, {unit(n, i): field.one})

    @classmethod
    def monomial(cls, m: Monomial, field=QQ, c=1):
        c = field(c)
        return cls._raw(len(m), field, {tuple(m): c} if c else {})

    @classmethod
    def parse(cls, text: str, n: int, field=QQ) -> "Polynomial":
        return parse_expression(text, field, allow_variables=True, n=n)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), self.field.zero)

    def leading_term(self, order: TermOrder):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: TermOrder) -> Monomial:
        return self.leading_term(order)[0]

    def sorted_terms(self, order: TermOrder):
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if other.n != self.n or other.field != self.field:
            raise ValueError("polynomials live in different rings")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.n, self.field, other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.n, self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.n, self.field)
        return Polynomial._raw(self.n, self.field, {m: a * c for m, a in self.terms.items()})

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        return Polynomial._raw(
            self.n, self.field, {mono_mul(u, m): a * c for u, a in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                m = mono_mul(u, v)
                s = terms.get(m)
                terms[m] = a * b if s is None else s + a * b
        return Polynomial._raw(self.n, self.field, {m: c for m, c in terms.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.degree() != 0:
                raise ValueError("can only divide by nonzero constants")
            other = other.terms[(0,) * self.n]
        return self.scale(1 / self.field(other))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.n, self.field, 1)
        for _ in range(e):
            result = result * self
        return result

    def monic(self, order: TermOrder) -> "Polynomial":
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def map_coefficients(self, field) -> "Polynomial":
        return Polynomial(self.n, field, {m: field(c) for m, c in self.terms.items()})

    # -- evaluation ---------------------------------------------------------

    def __call__(self, point):
        return evaluate(self, point)

    # -- comparison and I/O ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.field == other.field and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_text(self, order: TermOrder = DEGLEX) -> str:
        return format_polynomial(self, order)

    def __str__(self):
        return format_polynomial(self, DEGLEX)

    def __repr__(self):
        return f"Polynomial({self.n}, {self.field!r}, {str(self)!r})"

    def to_json(self, order: TermOrder = DEGLEX) -> list:
        return [
            {"exp": list(m), "coef": self.field.format(c)} for m, c in self.sorted_terms(order)
        ]

    @classmethod
    def from_json(cls, data, n: int, field) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(n, field, [(tuple(t["exp"]), field.parse(str(t["coef"]))) for t in data])


def _coef_text(field, c) -> tuple:
    """(sign, body) for a coefficient; body wrapped in parentheses if it has several terms."""
    s = field.format(c)
    if s.startswith("-") and not any(op in s[1:] for op in "+-"):
        return -1, s[1:]
    if any(op in s[1:] for op in "+-"):
        return 1, f"({s})"
    return 1, s


def format_polynomial(f: Polynomial, order: TermOrder = DEGLEX) -> str:
    if not f.terms:
        return "0"
    out = []
    for m, c in f.sorted_terms(order):
        sign, body = _coef_text(f.field, c)
        mono = monomial_str(m)
        if mono == "1":
            term = body
        elif body == "1":
            term = mono
        else:
            term = f"{body}*{mono}"
        if not out:
            out.append(term if sign > 0 else f"-{term}")
        else:
            out.append(("+ " if sign > 0 else "- ") + term)
    return " ".join(out)


def leading_monomial(f: Polynomial, order: TermOrder):
    """(lm, lc) of a nonzero polynomial."""
    return f.leading_term(order)


def evaluate(f: Polynomial, point: Sequence):
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.n} variables")
    field = f.field
    point = [field(a) for a in point]
    powers = [{0: field.one, 1: a} for a in point]
    total = field.zero
    for m, c in f.terms.items():
        t = c
        for i, e in enumerate(m):
            if e:
                cache = powers[i]
                pw = cache.get(e)
                if pw is None:
                    pw = cache[e] = point[i] ** e
                t = t * pw
        total = total + t
    return total


def reduce(f: Polynomial, G: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Normal form of ``f`` modulo ``G``.

    The largest reducible monomial is eliminated first, using the divisor with
    the smallest leading monomial.
    """
    if not f.terms:
        return f
    leads = []
    for g in G:
        if not g.terms:
            raise ValueError("cannot reduce by the zero polynomial")
        m, c = g.leading_term(order)
        leads.append((order.key(m), m, c, g))
    leads.sort(key=lambda t: t[0])

    work = dict(f.terms)
    heap = [(order.neg_key(m), m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for _, lm, lc, g in leads:
            if divides(lm, m):
                q = mono_div(m, lm)
                factor = c / lc
                for u, a in g.terms.items():
                    if u == lm:
                        continue
                    v = mono_mul(u, q)
                    s = work.get(v)
                    if s is None:
                        work[v] = -factor * a
                        heapq.heappush(heap, (order.neg_key(v), v))
                    else:
                        s = s - factor * a
                        if s:
                            work[v] = s
                        else:
                            del work[v]
                break
        else:
            remainder[m] = c
    return Polynomial._raw(f.n, f.field, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), 1 / cf) - g.mul_term(mono_div(lcm, mg), 1 / cg)


def elementary_symmetric(J: Iterable[int], i: int, n: int, field=QQ) -> Polynomial:
    """Sum of x_T over all i-subsets T of J (indices 1-based)."""
    J = sorted(set(J))
    if any(not 1 <= j <= n for j in J):
        raise ValueError(f"index set {J} not inside [1, {n}]")
    if not 0 <= i <= len(J):
        raise ValueError(f"degree {i} out of range for |J| = {len(J)}")
    terms = {}
    for T in combinations(J, i):
        m = [0] * n
        for t in T:
            m[t - 1] = 1
        terms[tuple(m)] = field.one
    return Polynomial._raw(n, field, terms)


def squarefree_monomial(S: Iterable[int], n: int) -> Monomial:
    """Exponent tuple of x_S for a 1-based index set S."""
    m = [0] * n
    for s in S:
        m[s - 1] = 1
    return tuple(m)
