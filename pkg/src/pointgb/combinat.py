"""Balancing families of root-of-unity vectors and Galvin's set-family problem.

Exact searches (bitset branch and bound) plus the certificate pipelines that
turn a family into a polynomial and bound its degree from below.

Root-of-unity vectors are stored by exponents: ``e`` stands for
``(w^e_1, ..., w^e_n)``.  Sets are 1-based tuples; bit ``i - 1`` of a mask
encodes element ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

import numpy as np

from .boundcert import CertificateRefused, becs_bound_exact, certify_degree
from .closedform import (
    basis_root_of_unity,
    basis_uniform,
    characteristic_vectors,
    enumerate_B_exponents,
    root_point,
    subset_vector,
    uniform_new_standard_monomial,
)
from .exactnum import CyclotomicField, CyclotomicNumber, PrimeField, is_prime
from .groebner import autoreduce
from .polyring import DEGLEX, Polynomial, evaluate, monomial_str

MAX_VECTORS = 4096
MAX_SUBSETS = 3_000_000


# ---------------------------------------------------------------------------
# Shared pieces
# ---------------------------------------------------------------------------


@dataclass
class SearchReport:
    params: dict
    optimum: int | None = None
    lower_bound: int = 0
    upper_bound: int | None = None
    witness: list | None = None
    exhaustive: bool = True
    nodes: int = 0
    notes: list = dc_field(default_factory=list)
    extra: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "params": self.params,
            "optimum": self.optimum,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "witness": self.witness,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "notes": self.notes,
        }
        out.update(self.extra)
        return out


def _popcount(x: int) -> int:
    return x.bit_count()


class _CoverSearch:
    """Exact 'cover ``universe`` with at most k masks' by branch and bound."""

    def __init__(self, masks):
        self.masks = masks
        self.nodes = 0
        self.biggest = max((_popcount(m) for m in masks), default=0)
        self.covering = {}

    def _covers(self, e):
        c = self.covering.get(e)
        if c is None:
            bit = 1 << e
            c = self.covering[e] = [i for i, m in enumerate(self.masks) if m & bit]
        return c

    def find(self, uncovered: int, k: int):
        """Indices of at most k masks covering ``uncovered``, or None."""
        self.nodes += 1
        if not uncovered:
            return []
        if k == 0 or _popcount(uncovered) > k * self.biggest:
            return None
        # branch on the uncovered element with the fewest candidates
        best = None
        x = uncovered
        while x:
            low = x & -x
            e = low.bit_length() - 1
            c = self._covers(e)
            if best is None or len(c) < len(best):
                best = c
                if len(c) <= 1:
                    break
            x ^= low
        for i in best:
            rest = self.find(uncovered & ~self.masks[i], k - 1)
            if rest is not None:
                return [i] + rest
        return None


def _drop_dominated(masks):
    """Indices of masks not strictly contained in (or equal to an earlier) other mask."""
    keep = []
    for i, m in enumerate(masks):
        dominated = False
        for j, o in enumerate(masks):
            if j != i and m | o == o and (m != o or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    return keep


# ---------------------------------------------------------------------------
# Root-of-unity vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootVectorFamily:
    n: int
    p: int
    vectors: tuple

    def __post_init__(self):
        vecs = tuple(tuple(int(e) % self.p for e in v) for v in self.vectors)
        if any(len(v) != self.n for v in vecs):
            raise ValueError(f"every vector needs {self.n} coordinates")
        object.__setattr__(self, "vectors", vecs)

    def __len__(self):
        return len(self.vectors)

    def points(self) -> list:
        return [root_point(v, self.p) for v in self.vectors]


def product_class(e, p: int) -> int:
    """j with w^e_1 * ... * w^e_n = w^j."""
    return sum(e) % p


def inner_product(v, w, p: int) -> CyclotomicNumber:
    """sum_i w^(v_i + w_i) in Q(w_p), the plain (unconjugated) scalar product."""
    counts = [0] * p
    for a, b in zip(v, w):
        counts[(a + b) % p] += 1
    return CyclotomicNumber(p, counts)


def orthogonal(v, w, p: int) -> bool:
    return inner_product(v, w, p).is_zero()


def _orthogonality_masks(vecs, p):
    index = {v: i for i, v in enumerate(vecs)}
    masks = []
    for v in vecs:
        m = 0
        for w in vecs:
            if orthogonal(v, w, p):
                m |= 1 << index[w]
        masks.append(m)
    return masks


def is_balancing_family(T: RootVectorFamily, limit: int = MAX_VECTORS) -> bool:
    """Every vector of B = {1, w, ..., w^(p-1)}^n is orthogonal to some member of T."""
    if not len(T):
        return False
    for w in enumerate_B_exponents(T.n, T.p, None, limit):
        if not any(orthogonal(v, w, T.p) for v in T.vectors):
            return False
    return True


def brute_force_K(n: int, p: int, k_max: int, symmetry: bool = True, limit: int = MAX_VECTORS) -> SearchReport:
    """Smallest balancing family of size <= k_max, found exhaustively.

    With ``symmetry`` the family is assumed to contain (1, ..., 1): scaling all
    members coordinatewise by one fixed vector of B preserves balancing, so
    any family can be moved onto one containing the all-ones vector.
    """
    if not is_prime(p) or n % p:
        raise ValueError(f"need a prime p dividing n, got n={n}, p={p}")
    params = {"n": n, "p": p, "k_max": k_max, "symmetry": symmetry}
    report = SearchReport(params=params, lower_bound=1, extra={"theorem": "K-lower-bound", "n(p-1)": n * (p - 1)})
    if k_max <= 0:
        report.notes.append("k_max = 0: only the trivial bound K >= 1 (B is nonempty)")
        return report
    vecs = enumerate_B_exponents(n, p, None, limit)
    masks = _orthogonality_masks(vecs, p)
    full = (1 << len(vecs)) - 1
    search = _CoverSearch(masks)
    refuted = []
    start = 0
    uncovered = full
    if symmetry:
        start = 1
        uncovered = full & ~masks[0]  # vecs[0] is the all-ones vector
        report.notes.append("family normalised to contain the all-ones vector (coordinatewise scaling symmetry)")
    for k in range(1, k_max + 1):
        if k < start:
            continue
        sol = search.find(uncovered, k - start)
        if sol is None:
            refuted.append(k)
            report.lower_bound = k + 1
            continue
        chosen = ([0] if symmetry else []) + sol
        report.optimum = len(chosen)
        report.upper_bound = len(chosen)
        report.lower_bound = len(chosen)
        report.witness = [list(vecs[i]) for i in chosen]
        break
    report.nodes = search.nodes
    report.extra["refuted_sizes"] = refuted
    if report.witness is not None:
        fam = RootVectorFamily(n, p, tuple(tuple(v) for v in report.witness))
        report.extra["witness_verified"] = is_balancing_family(fam, limit)
    return report


def orthogonality_class_shift(n: int, p: int) -> int:
    """c with prod_i y_i z_i = w^c whenever y . z = 0 (each residue appears n/p times)."""
    return (n // p) * (p * (p - 1) // 2) % p


def in_orthogonality_regime(n: int, p: int) -> bool:
    return n % p == 0 and (p % 2 == 1 or n % 4 == 0)


def orthogonal_class_check(y, z, p: int, n: int | None = None) -> str:
    """Verdict on 'y . z = 0 and y in B_i imply z in B_{p-i}' for one pair.

    Returns ``"not applicable"`` (pair not orthogonal), ``"outside regime"``
    (p = 2 with n not divisible by 4, or p not dividing n), ``"holds"`` or
    ``"violated"``.
    """
    n = len(y) if n is None else n
    if not orthogonal(y, z, p):
        return "not applicable"
    if not in_orthogonality_regime(n, p):
        return "outside regime"
    i = product_class(y, p)
    return "holds" if product_class(z, p) == (p - i) % p else "violated"


def orthogonality_sweep(n: int, p: int, limit: int = MAX_VECTORS) -> dict:
    """Check the class implication over all ordered orthogonal pairs of B."""
    vecs = enumerate_B_exponents(n, p, None, limit)
    counts = {"holds": 0, "violated": 0, "not applicable": 0, "outside regime": 0}
    shifted_ok = True
    c = orthogonality_class_shift(n, p)
    for y in vecs:
        for z in vecs:
            verdict = orthogonal_class_check(y, z, p, n)
            counts[verdict] += 1
            if verdict != "not applicable":
                shifted_ok &= product_class(z, p) == (c - product_class(y, p)) % p
    return {
        "n": n,
        "p": p,
        "in_regime": in_orthogonality_regime(n, p),
        "class_shift": c,
        "shifted_map_holds": shifted_ok,
        "counts": counts,
    }


def linear_form(v, p: int) -> Polynomial:
    """sum_i w^(v_i) x_i over Q(w_p)."""
    K = CyclotomicField(p)
    n = len(v)
    return Polynomial(n, K, {tuple(1 if k == i else 0 for k in range(n)): root_point([e], p)[0] for i, e in enumerate(v)})


def balancing_lower_certificate(T: RootVectorFamily) -> dict:
    """Certify |T| >= n(p-1) for a balancing family T via one degree bound per product class."""
    n, p = T.n, T.p
    if not len(T):
        raise CertificateRefused("validity", "empty family")
    if n % p:
        raise CertificateRefused("validity", f"p={p} does not divide n={n}")
    if not is_balancing_family(T):
        raise CertificateRefused("validity", "family is not balancing")
    K = CyclotomicField(p)
    c = orthogonality_class_shift(n, p)
    notes = []
    if not in_orthogonality_regime(n, p):
        notes.append(f"p=2 with n not divisible by 4: orthogonal partners of B_i lie in B_{{{c}-i}}")
    classes = []
    total = 0
    for i in range(p):
        Ti = [v for v in T.vectors if product_class(v, p) == i]
        target = (c - i) % p
        P = Polynomial.constant(n, K, 1)
        for v in Ti:
            P = P * linear_form(v, p)
        F_pts = [root_point(e, p) for e in enumerate_B_exponents(n, p, target)]
        for z in F_pts:
            if evaluate(P, z):
                raise CertificateRefused("vanishing", f"P_{i} does not vanish on B_{target}")
        j = next(j for j in range(p) if j != target)
        q_exp = enumerate_B_exponents(n, p, j)[0]
        q = root_point(q_exp, p)
        if not evaluate(P, q):
            raise CertificateRefused("nonvanishing", f"P_{i} vanishes at the chosen point of B_{j}")
        basis = autoreduce(basis_root_of_unity(n, p, target, DEGLEX), DEGLEX, check=False)
        cert = certify_degree(P, basis, q, points=F_pts)
        total += cert.bound
        classes.append(
            {
                "class": i,
                "size": len(Ti),
                "vanishes_on": target,
                "q_class": j,
                "q": list(q_exp),
                "degP": P.degree(),
                "y": monomial_str(cert.y),
                "bound": cert.bound,
                "alphaY": K.format(cert.alpha_y),
            }
        )
    return {
        "theorem": "K-lower-bound",
        "n": n,
        "p": p,
        "family_size": len(T),
        "per_class": classes,
        "per_class_bound": str(becs_bound_exact(n, p)),
        "certified_lower_bound": total,
        "target": n * (p - 1),
        "certified": total >= n * (p - 1) and len(T) >= total,
        "notes": notes,
    }


# ---------------------------------------------------------------------------
# Galvin's problem
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SetFamily:
    N: int
    sets: tuple

    def __post_init__(self):
        sets = tuple(tuple(sorted(int(x) for x in s)) for s in self.sets)
        for s in sets:
            if any(not 1 <= x <= self.N for x in s) or len(set(s)) != len(s):
                raise ValueError(f"set {s} is not a subset of [1, {self.N}]")
        object.__setattr__(self, "sets", sets)

    def __len__(self):
        return len(self.sets)

    @property
    def masks(self) -> list:
        return [to_mask(s) for s in self.sets]

    def to_json(self) -> dict:
        return {"N": self.N, "sets": [list(s) for s in self.sets]}

    @classmethod
    def from_json(cls, data: dict) -> "SetFamily":
        return cls(int(data["N"]), tuple(tuple(s) for s in data["sets"]))


def to_mask(S) -> int:
    m = 0
    for x in S:
        m |= 1 << (x - 1)
    return m


def from_mask(m: int) -> tuple:
    return tuple(i + 1 for i in range(m.bit_length()) if m >> i & 1)


def subset_masks(N: int, k: int, limit: int = MAX_SUBSETS) -> np.ndarray:
    """All k-subsets of [N] as uint64 bitmasks, in lexicographic order."""
    if comb(N, k) > limit:
        raise OverflowError(f"C({N},{k}) exceeds the enumeration guard {limit}")
    weights = np.array([1 << i for i in range(N)], dtype=np.uint64)
    idx = np.array(list(combinations(range(N), k)), dtype=np.int64).reshape(-1, k)
    return weights[idx].sum(axis=1, dtype=np.uint64)


def galvin_construction(n: int) -> SetFamily:
    """Intervals {i, ..., i + 2n - 1} for i = 1..2n in [4n]."""
    if n < 1:
        raise ValueError("n must be positive")
    return SetFamily(4 * n, tuple(tuple(range(i, i + 2 * n)) for i in range(1, 2 * n + 1)))


def _uniform_shape_ok(family: SetFamily, n: int) -> bool:
    return family.N == 4 * n and all(len(s) == 2 * n for s in family.sets)


def galvin_failures(family: SetFamily, n: int, limit: int = MAX_SUBSETS) -> np.ndarray:
    """Masks of the 2n-subsets B meeting no member in exactly n elements."""
    Bs = subset_masks(4 * n, 2 * n, limit)
    hit = np.zeros(len(Bs), dtype=bool)
    for A in family.masks:
        hit |= np.bitwise_count(Bs & np.uint64(A)) == n
    return Bs[~hit]


def is_galvin_family(family: SetFamily, n: int, limit: int = MAX_SUBSETS) -> bool:
    """Every 2n-subset of [4n] meets some member in exactly n elements (exhaustive)."""
    if not len(family) or not _uniform_shape_ok(family, n):
        return False
    return len(galvin_failures(family, n, limit)) == 0


def brute_force_m(n: int, max_n: int = 2) -> SearchReport:
    """Exact m(n) by minimum set cover over all 2n-subsets of [4n]."""
    if not 1 <= n <= max_n:
        raise OverflowError(f"exact search limited to 1 <= n <= {max_n}")
    N = 4 * n
    cands = [to_mask(S) for S in combinations(range(1, N + 1), 2 * n)]
    index = {m: i for i, m in enumerate(cands)}
    cover = []
    for A in cands:
        c = 0
        for B in cands:
            if _popcount(A & B) == n:
                c |= 1 << index[B]
        cover.append(c)
    keep = _drop_dominated(cover)
    search = _CoverSearch([cover[i] for i in keep])
    full = (1 << len(cands)) - 1
    upper = len(galvin_construction(n))
    report = SearchReport(
        params={"n": n},
        upper_bound=upper,
        extra={"theorem": "galvin-m", "candidates": len(cands), "after_dominance": len(keep)},
    )
    refuted = []
    for k in range(1, upper + 1):
        sol = search.find(full, k)
        if sol is None:
            refuted.append(k)
            continue
        fam = SetFamily(N, tuple(from_mask(cands[keep[i]]) for i in sol))
        report.optimum = report.lower_bound = report.upper_bound = len(sol)
        report.witness = [list(s) for s in fam.sets]
        report.extra["witness_verified"] = is_galvin_family(fam, n)
        break
    report.nodes = search.nodes
    report.extra["refuted_sizes"] = refuted
    report.extra["construction_verified"] = is_galvin_family(galvin_construction(n), n)
    return report


def counting_inequality(p: int, enumerate_limit: int = 100_000) -> dict:
    """Compare 4p C(2p,p) with C(4p,p); count |T_i| directly when C(4p,3p) is small."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lhs = 4 * p * comb(2 * p, p)
    rhs = comb(4 * p, p)
    out = {
        "theorem": "galvin-counting",
        "p": p,
        "lhs": lhs,
        "rhs": rhs,
        "holds": lhs < rhs,
        "claimed_Ti": 2 * comb(2 * p, p),
        "enumerated_Ti": None,
    }
    if comb(4 * p, 3 * p) <= enumerate_limit:
        A = to_mask(range(1, 2 * p + 1))
        Ts = subset_masks(4 * p, 3 * p, enumerate_limit)
        out["enumerated_Ti"] = int(np.sum(np.bitwise_count(Ts & np.uint64(A)) % p == 0))
    return out


def witness_C(family: SetFamily, p: int, limit: int = MAX_SUBSETS) -> SearchReport:
    """First 3p-subset C of [4p] (lex order) with |C & A| not divisible by p for every member A."""
    N = 4 * p
    Cs = subset_masks(N, 3 * p, limit)
    ok = np.ones(len(Cs), dtype=bool)
    for A in family.masks:
        ok &= np.bitwise_count(Cs & np.uint64(A)) % p != 0
    hits = np.flatnonzero(ok)
    report = SearchReport(
        params={"p": p, "family_size": len(family)},
        nodes=len(Cs),
        extra={"theorem": "galvin-witness", "count": int(len(hits))},
    )
    if len(hits):
        report.witness = list(from_mask(int(Cs[hits[0]])))
    return report


def galvin_lower_certificate(family: SetFamily, p: int, assume_valid: bool = False) -> dict:
    """Certify |family| >= p for a Galvin family on [4p] by a degree bound over F_p."""
    if not is_prime(p):
        raise CertificateRefused("parameters", f"{p} is not prime")
    n = 4 * p
    stages = []
    notes = []
    if p <= 3:
        notes.append("p <= 3: outside the p > 3 regime where the witness is guaranteed to exist")

    if not _uniform_shape_ok(family, p) or not len(family):
        raise CertificateRefused("validity", f"need nonempty family of {2 * p}-subsets of [{n}]")
    if assume_valid:
        stages.append({"stage": "validity", "status": "assumed"})
    else:
        bad = galvin_failures(family, p)
        if len(bad):
            raise CertificateRefused("validity", f"subset {list(from_mask(int(bad[0])))} is not balanced")
        stages.append({"stage": "validity", "status": "verified", "checked": comb(n, 2 * p)})

    wit = witness_C(family, p)
    if wit.witness is None:
        raise CertificateRefused("witness", "no 3p-subset avoids every intersection size divisible by p")
    C = wit.witness
    inter = [len(set(C) & set(A)) for A in family.sets]
    FvC = 1
    for k in inter:
        FvC = FvC * k % p
    if FvC == 0:
        raise CertificateRefused("evaluation", "F(v_C) = 0")
    # F(v_B) = prod |A_i & B| mod p, checked for every 2p-subset B
    Bs = subset_masks(n, 2 * p)
    prod = np.ones(len(Bs), dtype=np.int64)
    for A in family.masks:
        prod = prod * (np.bitwise_count(Bs & np.uint64(A)).astype(np.int64) % p) % p
    if prod.any():
        raise CertificateRefused("vanishing", "F does not vanish on every characteristic vector")
    stages.append({"stage": "witness", "C": C, "F(v_C) mod p": FvC, "vanishing_checked": len(Bs)})

    y, gen = uniform_new_standard_monomial(n, 2 * p, C, p)
    deg_y = sum(y)
    deg_F = len(family)  # product of nonzero linear forms
    stages.append({"stage": "standard-monomial", "y": monomial_str(y), "deg_y": deg_y, "generator": gen.kind})
    if deg_y < p:
        raise CertificateRefused("standard-monomial", f"deg(y) = {deg_y} < p")

    alpha = None
    if n <= 8:
        K = PrimeField(p)
        F = Polynomial.constant(n, K, 1)
        for A in family.sets:
            F = F * Polynomial(n, K, {tuple(1 if k + 1 == a else 0 for k in range(n)): 1 for a in A})
        basis = basis_uniform(n, 2 * p, K)
        cert = certify_degree(F, basis, subset_vector(C, n, K), points=characteristic_vectors(n, 2 * p, K))
        if cert.y != y:
            raise CertificateRefused("standard-monomial", "symbolic and expanded staircases disagree")
        deg_F = F.degree()
        alpha = K.format(cert.alpha_y)
        stages.append({"stage": "degree", "degF": deg_F, "alphaY": alpha})
    else:
        stages.append({"stage": "degree", "degF": deg_F, "alphaY": None, "note": "F kept factored"})
    if deg_F < deg_y:
        raise CertificateRefused("degree", f"deg(F) = {deg_F} < deg(y) = {deg_y}")
    return {
        "theorem": "galvin-lower-bound",
        "p": p,
        "family_size": len(family),
        "degF": deg_F,
        "deg_y": deg_y,
        "certified_lower_bound": deg_y,
        "certified": len(family) >= deg_F >= deg_y >= p,
        # the witness C is guaranteed for every family only when p > 3
        "bounds": {"m_lower": p if p > 3 else None, "m_upper": 2 * p},
        "stages": stages,
        "notes": notes,
    }
