"""Exact coefficient fields: rationals, prime fields F_p and cyclotomic fields Q(w_p).

Every field object exposes the same small interface used by the polynomial
code: ``zero``, ``one``, ``__call__`` (coerce ints / strings / elements),
``parse``, ``format`` and a ``tag`` string.  Elements support the usual
arithmetic operators and are immutable and hashable.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from functools import lru_cache
from math import comb


class FieldMismatch(ValueError):
    """Arithmetic between elements of different fields."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"expected a prime, got {p!r}")


# ---------------------------------------------------------------------------
# Rationals
# ---------------------------------------------------------------------------


class RationalField:
    """Q, with elements represented by :class:`fractions.Fraction`."""

    tag = "rational"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip().replace(" ", ""))

    def format(self, x: Fraction) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# ---------------------------------------------------------------------------
# Prime fields
# ---------------------------------------------------------------------------


class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * PrimeFieldElement(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(v, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    """The prime field F_p."""

    def __init__(self, p: int):
        _require_prime(p)
        self.p = p
        self.characteristic = p
        self.tag = f"fp:{p}"
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def __call__(self, x) -> PrimeFieldElement:
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element given to F_{self.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return PrimeFieldElement(x.numerator, self.p) / x.denominator
        return PrimeFieldElement(int(x), self.p)

    def parse(self, text: str) -> PrimeFieldElement:
        return self(Fraction(text.strip().replace(" ", "")))

    def format(self, x: PrimeFieldElement) -> str:
        return str(x.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# Cyclotomic fields
# ---------------------------------------------------------------------------


def _reduce_cyclotomic(c: list, p: int) -> tuple:
    """Reduce a coefficient list in powers of w modulo Phi_p = 1 + y + ... + y^(p-1)."""
    folded = [Fraction(0)] * p
    for k, v in enumerate(c):
        if v:
            folded[k % p] += v
    top = folded[p - 1]
    if top:
        return tuple(v - top for v in folded[: p - 1])
    return tuple(folded[: p - 1])


class CyclotomicNumber:
    """Element c_0 + c_1 w + ... + c_{p-2} w^{p-2} of Q(w_p), w a primitive p-th root of unity."""

    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, p: int, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) == p - 1 and all(isinstance(c, Fraction) for c in coeffs):
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = _reduce_cyclotomic([Fraction(c) for c in coeffs], p)
        self.p = p
        self._hash = None

    @classmethod
    def rational(cls, p: int, x) -> "CyclotomicNumber":
        return cls(p, [Fraction(x)] + [Fraction(0)] * (p - 2))

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.p != self.p:
                raise FieldMismatch(f"Q(w_{self.p}) vs Q(w_{other.p})")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicNumber(self.p, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicNumber(self.p, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.p, [a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.p
        prod = [Fraction(0)] * (2 * p - 3 if p > 2 else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicNumber(p, _reduce_cyclotomic(prod, p))

    __rmul__ = __mul__

    def conjugate_power(self, k: int) -> "CyclotomicNumber":
        """Image under the Galois automorphism w -> w^k (k prime to p)."""
        c = [Fraction(0)] * self.p
        for i, a in enumerate(self.coeffs):
            c[(i * k) % self.p] += a
        return CyclotomicNumber(self.p, _reduce_cyclotomic(c, self.p))

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse in Q(w_p)")
        # a * prod_{k=2}^{p-1} sigma_k(a) is the (rational) field norm of a
        other = CyclotomicNumber.rational(self.p, 1)
        for k in range(2, self.p):
            other = other * self.conjugate_power(k)
        norm = (self * other).coeffs[0]
        return other * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.rational(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.p, self.coeffs))
        return self._hash

    def __str__(self):
        return format_cyclotomic(self)

    def __repr__(self):
        return f"CyclotomicNumber({self.p}, {format_cyclotomic(self)!r})"


def format_cyclotomic(a: CyclotomicNumber) -> str:
    parts = []
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            w = "w" if i == 1 else f"w^{i}"
            body = w if abs(c) == 1 else f"{abs(c)}*{w}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


class CyclotomicField:
    """Q(w_p); for p = 2 this is Q with w = -1."""

    def __init__(self, p: int):
        _require_prime(p)
        self.p = p
        self.characteristic = 0
        self.tag = f"cyc:{p}"
        self.zero = CyclotomicNumber.rational(p, 0)
        self.one = CyclotomicNumber.rational(p, 1)

    def __call__(self, x) -> CyclotomicNumber:
        if isinstance(x, CyclotomicNumber):
            if x.p != self.p:
                raise FieldMismatch(f"Q(w_{x.p}) element given to Q(w_{self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return CyclotomicNumber.rational(self.p, x)

    def omega(self, i: int = 1) -> CyclotomicNumber:
        return omega(self.p, i)

    def parse(self, text: str) -> CyclotomicNumber:
        return parse_expression(text, self, allow_variables=False)

    def format(self, x: CyclotomicNumber) -> str:
        return format_cyclotomic(x)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.p == self.p

    def __hash__(self):
        return hash(("cyc", self.p))

    def __repr__(self):
        return f"CyclotomicField({self.p})"


@lru_cache(maxsize=None)
def omega(p: int, i: int = 1) -> CyclotomicNumber:
    """Canonical form of w^i in Q(w_p)."""
    _require_prime(p)
    c = [Fraction(0)] * p
    c[i % p] = Fraction(1)
    return CyclotomicNumber(p, _reduce_cyclotomic(c, p))


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    if a.p != b.p:
        raise FieldMismatch(f"Q(w_{a.p}) vs Q(w_{b.p})")
    return a * b


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()


def binom_mod_p(x: int, j: int, p: int) -> PrimeFieldElement:
    """C(x, j) mod p, with C(x, j) = x(x-1)...(x-j+1)/j! for any integer x."""
    if j < 0:
        raise ValueError("j must be non-negative")
    _require_prime(p)
    return PrimeFieldElement(generalized_binomial(x, j), p)


def generalized_binomial(x: int, j: int) -> int:
    """Falling-factorial binomial; agrees with math.comb for 0 <= j <= x."""
    if j < 0:
        return 0
    if x >= 0:
        return comb(x, j)
    # C(-m, j) = (-1)^j C(m + j - 1, j)
    return (-1) ** j * comb(-x + j - 1, j)


# ---------------------------------------------------------------------------
# Field tags and expression parsing
# ---------------------------------------------------------------------------

_TAG_RE = re.compile(r"^(?:(fp|f|gf)[:]?(\d+)|(cyc)[:]?(\d+)|(rational|qq|q))$", re.I)


def field_from_tag(tag: str):
    """Field for a tag such as ``fp:5``, ``f5``, ``cyc:3``, ``cyc3`` or ``rational``."""
    m = _TAG_RE.match(tag.strip())
    if not m:
        raise ValueError(f"unknown field tag {tag!r}")
    if m.group(2):
        return PrimeField(int(m.group(2)))
    if m.group(4):
        return CyclotomicField(int(m.group(4)))
    return QQ


_IMPLICIT_MUL = re.compile(r"(?<=[0-9A-Za-z_)])\s*(?=[xw(])")


def parse_expression(text: str, field, allow_variables=True, n=None):
    """Parse ``text`` into a field element or, with variables, a polynomial.

    Accepts ``+ - * / ^`` and parentheses, variables ``x1 .. xn`` and the root
    of unity ``w`` (cyclotomic fields only).  ``*`` may be omitted.
    """
    src = _IMPLICIT_MUL.sub("*", text.strip()).replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc

    if allow_variables:
        from .polyring import Polynomial

        def const(c):
            return Polynomial.constant(n, field, c)

        def var(i):
            return Polynomial.variable(n, field, i)
    else:

        def const(c):
            return field(c)

        var = None

    def visit(node):
        if isinstance(node, ast.Expression):
            return visit(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return const(node.value)
        if isinstance(node, ast.Name):
            name = node.id
            if name == "w":
                if not isinstance(field, CyclotomicField):
                    raise ValueError("'w' is only meaningful over a cyclotomic field")
                return const(field.omega(1))
            if allow_variables and re.fullmatch(r"x\d+", name):
                i = int(name[1:])
                if n is None or not 1 <= i <= n:
                    raise ValueError(f"variable {name} outside x1..x{n}")
                return var(i - 1)
            raise ValueError(f"unknown symbol {name!r}")
        if isinstance(node, ast.UnaryOp):
            v = visit(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return visit(node.left) ** node.right.value
            a, b = visit(node.left), visit(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
        raise ValueError(f"unsupported syntax in {text!r}")

    return visit(tree)
