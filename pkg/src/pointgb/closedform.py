"""Closed-form Groebner bases for two families of point sets.

* ``B_j``: vectors of p-th roots of unity whose coordinate product is w^j.
  Standard monomials are the minima of the diagonal-shift classes of
  exponent vectors in {0..p-1}^n.
* ``V(n, d)``: 0/1 characteristic vectors of the d-subsets of [n], with the
  basis built from elementary symmetric polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .exactnum import QQ, CyclotomicField, generalized_binomial, omega
from .groebner import GroebnerBasis, is_groebner, is_reduced
from .polyring import (
    DEGLEX,
    Polynomial,
    TermOrder,
    elementary_symmetric,
    squarefree_monomial,
    unit,
)

MAX_ROOT_POINTS = 20_000


@dataclass(frozen=True)
class ExponentClass:
    p: int
    members: tuple  # member k is the base vector shifted by k along the diagonal

    def __len__(self):
        return len(self.members)

    def minimum(self, order: TermOrder):
        return min(self.members, key=order.key)

    def shift_between(self, a, b) -> int:
        """The k with b = a + k(1,...,1) mod p."""
        return (b[0] - a[0]) % self.p


def _check_exponents(u, p):
    if any(not 0 <= e < p for e in u):
        raise ValueError(f"exponent vector {u} not in {{0..{p - 1}}}^n")


def equiv_class(u, p: int) -> ExponentClass:
    u = tuple(u)
    _check_exponents(u, p)
    return ExponentClass(p, tuple(tuple((e + k) % p for e in u) for k in range(p)))


def all_classes(n: int, p: int) -> list:
    """Every diagonal-shift class, each listed once (base = member with u_1 = 0)."""
    return [equiv_class((0,) + rest, p) for rest in product(range(p), repeat=n - 1)]


def min_set(n: int, p: int, order: TermOrder = DEGLEX) -> frozenset:
    return frozenset(c.minimum(order) for c in all_classes(n, p))


def basis_root_of_unity(n: int, p: int, j: int = 0, order: TermOrder = DEGLEX) -> list:
    """Binomials b - w^(kj) a (a the class minimum, b = a shifted by k) plus x_i^p - 1.

    The set is a Groebner basis of I(B_j) but in general not a reduced one.
    """
    if not 0 <= j < p:
        raise ValueError(f"class index j={j} outside [0, {p})")
    K = CyclotomicField(p)
    polys = []
    for cls in all_classes(n, p):
        a = cls.minimum(order)
        for b in cls.members:
            if b == a:
                continue
            k = cls.shift_between(a, b)
            polys.append(
                Polynomial.monomial(b, K) - Polynomial.monomial(a, K, omega(p, k * j))
            )
    for i in range(n):
        polys.append(Polynomial.monomial(unit(n, i, p), K) - Polynomial.constant(n, K, 1))
    return polys


def root_of_unity_report(n: int, p: int, j: int = 0, order: TermOrder = DEGLEX) -> dict:
    """Whether the binomial basis is a Groebner basis, and whether it is reduced."""
    G = basis_root_of_unity(n, p, j, order)
    lms = [g.leading_monomial(order) for g in G]
    witness = None
    for a in lms:
        for b in lms:
            if a != b and all(x <= y for x, y in zip(a, b)):
                witness = (a, b)
                break
        if witness:
            break
    return {
        "n": n,
        "p": p,
        "j": j,
        "order": order.kind,
        "size": len(G),
        "is_groebner": is_groebner(G, order),
        "is_reduced": is_reduced(G, order),
        "divisibility_witness": [list(witness[0]), list(witness[1])] if witness else None,
    }


def enumerate_B_exponents(n: int, p: int, j: int | None = None, limit: int = MAX_ROOT_POINTS):
    """Exponent vectors e (point = (w^e_1, ..., w^e_n)) in B, or in B_j if j is given."""
    if p**n > limit:
        raise OverflowError(f"{p}^{n} vectors exceed the enumeration guard {limit}")
    return [e for e in product(range(p), repeat=n) if j is None or sum(e) % p == j % p]


def enumerate_B(n: int, p: int, j: int, limit: int = MAX_ROOT_POINTS) -> list:
    return [tuple(omega(p, k) for k in e) for e in enumerate_B_exponents(n, p, j, limit)]


def root_point(e, p: int) -> tuple:
    return tuple(omega(p, k) for k in e)


# ---------------------------------------------------------------------------
# Uniform families
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def hset_family(t: int, n: int) -> tuple:
    """Sets {s_1 < ... < s_t} in [n] whose first index j with s_j < 2j is t."""
    if not 0 < t <= n // 2:
        raise ValueError(f"t={t} outside 0 < t <= n/2 for n={n}")
    out = []

    def grow(prefix):
        j = len(prefix) + 1
        lo = prefix[-1] + 1 if prefix else 1
        if j == t:
            # s_t < 2t, and s_{t-1} >= 2t - 2 forces s_t = 2t - 1
            for s in range(lo, min(2 * t - 1, n) + 1):
                out.append(tuple(prefix) + (s,))
            return
        for s in range(max(lo, 2 * j), n + 1):
            grow(prefix + [s])

    grow([])
    return tuple(out)


def is_hset(H, n: int) -> bool:
    H = tuple(sorted(H))
    t = len(H)
    return 0 < t <= n // 2 and H in hset_family(t, n)


def _hprime(H, n: int) -> list:
    t = len(H)
    return sorted(set(H) | set(range(2 * t, n + 1)))


def f_polynomial(H, d: int, n: int, field=QQ) -> Polynomial:
    """sum_k (-1)^(t-k) C(d-k, t-k) sigma_{H',k} with H' = H + {2t, ..., n}."""
    H = tuple(sorted(H))
    if not is_hset(H, n):
        raise ValueError(f"{H} is not in any H_t for n={n}")
    if not 0 <= d <= n:
        raise ValueError(f"d={d} outside [0, {n}]")
    t = len(H)
    Hp = _hprime(H, n)
    f = Polynomial.zero(n, field)
    for k in range(t + 1):
        c = (-1) ** (t - k) * generalized_binomial(d - k, t - k)
        if c:
            f = f + elementary_symmetric(Hp, k, n, field).scale(c)
    return f


def f_value_at_subset(H, d: int, n: int, subset) -> int:
    """Integer value of f_{H,d} at the characteristic vector of ``subset``."""
    t = len(H)
    r = len(set(_hprime(H, n)) & set(subset))
    return sum((-1) ** (t - k) * generalized_binomial(d - k, t - k) * comb(r, k) for k in range(t + 1))


def dd_family(d: int, n: int) -> list:
    """Sets U = {u_1 < ... < u_{d+1}} in [n] with u_j >= 2j for j <= d."""
    out = []

    def grow(prefix):
        j = len(prefix) + 1
        lo = prefix[-1] + 1 if prefix else 1
        if j == d + 1:
            out.extend(tuple(prefix) + (s,) for s in range(lo, n + 1))
            return
        for s in range(max(lo, 2 * j), n + 1):
            grow(prefix + [s])

    if d + 1 <= n:
        grow([])
    return out


def in_dd_family(U, d: int) -> bool:
    U = sorted(U)
    return len(U) == d + 1 and all(U[j - 1] >= 2 * j for j in range(1, d + 1))


@dataclass(frozen=True)
class UniformGenerator:
    """One member of the closed-form basis for V(n, d), kept symbolic."""

    kind: str  # "square" (x_i^2 - x_i), "monomial" (x_U) or "symmetric" (f_{H,d})
    index: tuple
    n: int
    d: int

    @property
    def lm(self):
        if self.kind == "square":
            return unit(self.n, self.index[0] - 1, 2)
        return squarefree_monomial(self.index, self.n)

    def polynomial(self, field=QQ) -> Polynomial:
        if self.kind == "square":
            i = self.index[0] - 1
            x = Polynomial.variable(self.n, field, i)
            return x * x - x
        if self.kind == "monomial":
            return Polynomial.monomial(self.lm, field)
        return f_polynomial(self.index, self.d, self.n, field)

    def value_at_subset(self, subset) -> int:
        """Integer value at the 0/1 characteristic vector of ``subset``."""
        if self.kind == "square":
            return 0
        if self.kind == "monomial":
            return int(set(self.index) <= set(subset))
        return f_value_at_subset(self.index, self.d, self.n, subset)


def uniform_generators(n: int, d: int, order: TermOrder = DEGLEX) -> list:
    """The closed-form basis of I(V(n, d)) in ascending leading-monomial order."""
    if not 0 <= d <= n // 2:
        raise ValueError(f"need 0 <= d <= n/2, got d={d}, n={n}")
    gens = [UniformGenerator("square", (i,), n, d) for i in range(2, n + 1)]
    gens += [UniformGenerator("monomial", U, n, d) for U in dd_family(d, n)]
    for t in range(1, d + 1):
        gens += [UniformGenerator("symmetric", H, n, d) for H in hset_family(t, n)]
    gens.sort(key=lambda g: order.key(g.lm))
    return gens


def basis_uniform(n: int, d: int, field=QQ, order: TermOrder = DEGLEX) -> GroebnerBasis:
    polys = tuple(g.polynomial(field) for g in uniform_generators(n, d, order))
    return GroebnerBasis(order, polys, reduced=is_reduced(polys, order))


def characteristic_vectors(n: int, d: int, field=QQ) -> list:
    """V([n] choose d) as points of field^n, subsets in lexicographic order."""
    one, zero = field.one, field.zero
    return [
        tuple(one if i + 1 in S else zero for i in range(n)) for S in combinations(range(1, n + 1), d)
    ]


def subset_vector(S, n: int, field=QQ) -> tuple:
    S = set(S)
    return tuple(field.one if i + 1 in S else field.zero for i in range(n))


def uniform_new_standard_monomial(n: int, d: int, subset, p: int, order: TermOrder = DEGLEX):
    """Staircase monomial gained by adding v_subset to V(n, d), computed over F_p.

    Scans the symbolic basis in ascending order and evaluates each member at
    the 0/1 point without expanding it, so this works where the expanded
    polynomials would be far too large.  Returns ``(monomial, generator)``.
    """
    for g in uniform_generators(n, d, order):
        if g.value_at_subset(subset) % p:
            return g.lm, g
    raise ValueError("the point lies in V(n, d)")
