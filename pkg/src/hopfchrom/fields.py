"""Exact scalar arithmetic over Q, GF(p) and cyclotomic extensions Q(zeta_n).

A scalar is a raw payload interpreted by a Field context:

  * rationals    -- ``fractions.Fraction`` (auto-reduced, positive denominator)
  * prime-field  -- ``int`` residue in ``[0, p)``
  * cyclotomic   -- ``tuple[Fraction, ...]`` of length phi(n), coefficients of
                    ``1, z, z^2, ...`` modulo the n-th cyclotomic polynomial

All payloads are canonical by construction, so ``==`` on payloads decides
equality of scalars of a common field.  The ``Scalar`` wrapper pairs a payload
with its field for contexts where values from different fields may meet.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "FieldSpec",
    "Field",
    "RationalField",
    "PrimeField",
    "CyclotomicField",
    "Scalar",
    "FieldError",
    "FieldMismatchError",
    "field_make",
    "primitive_root_of_unity",
]


class FieldError(ValueError):
    """Invalid field specification or unparsable scalar literal."""


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


@dataclass(frozen=True)
class FieldSpec:
    """Description of a supported exact field."""

    kind: str  # "rationals" | "prime-field" | "cyclotomic"
    p: int | None = None
    n: int | None = None

    def __str__(self) -> str:
        if self.kind == "rationals":
            return "Q"
        if self.kind == "prime-field":
            return f"GF({self.p})"
        return f"Q(zeta_{self.n})"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin, valid far beyond any modulus used here
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RAT_RE.match(text):
        raise FieldError(f"invalid rational literal {text!r}")
    num, _, den = text.partition("/")
    if den == "":
        return Fraction(int(num))
    if int(den) == 0:
        raise FieldError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den))


class Field:
    """Common interface of the three exact fields."""

    spec: FieldSpec
    zero: object
    one: object

    # -- arithmetic on payloads -------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        acc, base = self.one, a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def is_zero(self, a) -> bool:
        return a == self.zero

    # -- conversions -------------------------------------------------------
    def from_int(self, k: int):
        raise NotImplementedError

    def coerce(self, v):
        """Accept an int or an already-canonical payload."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def characteristic(self) -> int:
        raise NotImplementedError

    @property
    def finite(self) -> bool:
        return False

    def elements(self):
        raise FieldError(f"{self.spec} is not finite")

    def scalar(self, v) -> "Scalar":
        return Scalar(self, self.coerce(v))

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"Field({self.spec})"


class RationalField(Field):
    def __init__(self):
        self.spec = FieldSpec("rationals")
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return 1 / a

    def from_int(self, k: int):
        return Fraction(k)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise FieldError(f"cannot coerce {v!r} into {self.spec}")

    def parse(self, text: str):
        return _parse_rational(text)

    def format(self, a) -> str:
        return str(a)

    def characteristic(self) -> int:
        return 0


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"modulus {p!r} is not prime")
        self.p = p
        self.spec = FieldSpec("prime-field", p=p)
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inversion of zero")
        return pow(a, -1, self.p)

    def from_int(self, k: int):
        return k % self.p

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        raise FieldError(f"cannot coerce {v!r} into {self.spec}")

    def parse(self, text: str):
        text = text.strip()
        if not re.match(r"^[+-]?\d+$", text):
            raise FieldError(f"invalid residue literal {text!r} for {self.spec}")
        return int(text) % self.p

    def format(self, a) -> str:
        return str(a)

    def characteristic(self) -> int:
        return self.p

    @property
    def finite(self) -> bool:
        return True

    def elements(self):
        return range(self.p)


def _euler_phi(n: int) -> int:
    phi, m, q = 1, n, 2
    while q * q <= m:
        if m % q == 0:
            phi *= q - 1
            m //= q
            while m % q == 0:
                phi *= q
                m //= q
        q += 1
    if m > 1:
        phi *= m - 1
    return phi


def _cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficient list of Phi_n, low degree first."""
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division over Z
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        phi_d = _cyclotomic_polynomial._cache.setdefault(d, _cyclotomic_polynomial(d))
        poly = _int_poly_div(poly, phi_d)
    _cyclotomic_polynomial._cache[n] = poly
    return poly


_cyclotomic_polynomial._cache = {}


def _int_poly_div(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic up to sign
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % lead == 0
        q = c // lead
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert all(c == 0 for c in num[: len(den) - 1])
    return out


class CyclotomicField(Field):
    """Q(zeta_n) with elements reduced modulo the n-th cyclotomic polynomial."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise FieldError(f"conductor {n!r} must be a positive integer")
        self.n = n
        self.degree = _euler_phi(n)
        # monic modulus as Fractions, low degree first, without the leading 1
        poly = _cyclotomic_polynomial(n)
        assert len(poly) == self.degree + 1 and poly[-1] == 1
        self._modulus_tail = tuple(Fraction(c) for c in poly[:-1])
        self.spec = FieldSpec("cyclotomic", n=n)
        self.zero = tuple([Fraction(0)] * self.degree)
        self.one = self._const(Fraction(1))
        self.zeta = self._reduce([Fraction(0), Fraction(1)])

    def _const(self, c: Fraction):
        v = [Fraction(0)] * self.degree
        v[0] = c
        return tuple(v)

    def _reduce(self, coeffs: list[Fraction]):
        coeffs = list(coeffs)
        if len(coeffs) < self.degree:
            coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        for i in range(len(coeffs) - 1, self.degree - 1, -1):
            c = coeffs[i]
            if c:
                for j, m in enumerate(self._modulus_tail):
                    coeffs[i - self.degree + j] -= c * m
            coeffs.pop()
        return tuple(coeffs)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        out = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self._reduce(out)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inversion of zero")
        # extended Euclid in Q[x] against the (irreducible) modulus
        mod = list(self._modulus_tail) + [Fraction(1)]
        r0, r1 = mod, list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant gcd since the modulus is irreducible
        deg0 = _poly_deg(r0)
        assert deg0 == 0, "cyclotomic modulus is irreducible"
        c = r0[0]
        return self._reduce([x / c for x in s0])

    def from_int(self, k: int):
        return self._const(Fraction(k))

    def coerce(self, v):
        if isinstance(v, tuple):
            if len(v) != self.degree or not all(isinstance(x, Fraction) for x in v):
                raise FieldError(f"bad cyclotomic payload {v!r} for {self.spec}")
            return v
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, Fraction):
            return self._const(v)
        if isinstance(v, (list,)):
            return self._reduce([Fraction(x) for x in v])
        raise FieldError(f"cannot coerce {v!r} into {self.spec}")

    def parse(self, text: str):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise FieldError(
                f"cyclotomic literal must be a coefficient list [c0,c1,...], got {text!r}"
            )
        body = text[1:-1].strip()
        coeffs = [_parse_rational(part) for part in body.split(",")] if body else []
        if len(coeffs) > self.degree:
            raise FieldError(
                f"coefficient list of length {len(coeffs)} exceeds degree {self.degree}"
            )
        return self._reduce(coeffs)

    def format(self, a) -> str:
        return "[" + ",".join(str(c) for c in a) + "]"

    def characteristic(self) -> int:
        return 0


# -- dense polynomial helpers over Fraction coefficients ---------------------

def _poly_deg(p: list[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    db = _poly_deg(b)
    assert db >= 0
    a = list(a)
    q = [Fraction(0)] * max(len(a) - db, 1)
    lead = b[db]
    for i in range(_poly_deg(a) - db, -1, -1):
        c = a[i + db] / lead
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return q, a


@dataclass(frozen=True)
class Scalar:
    """A payload tagged with its field; supports mixed-field detection."""

    field: Field
    value: object

    def _peer(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixed fields {self.field.spec} and {other.field.spec}"
                )
            return other
        return Scalar(self.field, self.field.coerce(other))

    def __add__(self, other):
        o = self._peer(other)
        return Scalar(self.field, self.field.add(self.value, o.value))

    def __sub__(self, other):
        o = self._peer(other)
        return Scalar(self.field, self.field.sub(self.value, o.value))

    def __mul__(self, other):
        o = self._peer(other)
        return Scalar(self.field, self.field.mul(self.value, o.value))

    def __truediv__(self, other):
        o = self._peer(other)
        return Scalar(self.field, self.field.div(self.value, o.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return Scalar(self.field, self.field.pow(self.value, k))

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixed fields {self.field.spec} and {other.field.spec}"
                )
            return self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.spec, self.value))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field.spec}, {self})"


def field_make(spec: FieldSpec) -> Field:
    """Build the field context described by ``spec``."""
    if spec.kind == "rationals":
        return RationalField()
    if spec.kind == "prime-field":
        if spec.p is None:
            raise FieldError("prime-field spec needs a modulus p")
        return PrimeField(spec.p)
    if spec.kind == "cyclotomic":
        if spec.n is None:
            raise FieldError("cyclotomic spec needs a conductor n")
        return CyclotomicField(spec.n)
    raise FieldError(f"unknown field kind {spec.kind!r}")


def _rational_is_square(q: Fraction):
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def primitive_root_of_unity(field: Field, n: int):
    """A deterministic element of exact multiplicative order ``n``.

    Smallest residue in GF(p); -1/1 in Q; a power of zeta (or -zeta for odd
    conductor) in a cyclotomic field.  Raises FieldError when no such root
    exists.
    """
    if n < 1:
        raise FieldError("order must be >= 1")
    if n == 1:
        return field.one

    def check(q):
        if field.pow(q, n) != field.one:
            return False
        return all(field.pow(q, k) != field.one for k in range(1, n))

    if isinstance(field, RationalField):
        if n == 2:
            return Fraction(-1)
        raise FieldError(f"Q has no primitive root of unity of order {n}")
    if isinstance(field, PrimeField):
        if (field.p - 1) % n != 0:
            raise FieldError(f"GF({field.p}) has no element of order {n}")
        for a in range(1, field.p):
            if check(a):
                return a
        raise FieldError(f"GF({field.p}) has no element of order {n}")
    if isinstance(field, CyclotomicField):
        m = field.n
        if m % n == 0:
            root = field.pow(field.zeta, m // n)
        elif m % 2 == 1 and (2 * m) % n == 0:
            root = field.pow(field.neg(field.zeta), 2 * m // n)
        else:
            raise FieldError(f"{field.spec} has no element of order {n}")
        assert check(root)
        return root
    raise FieldError(f"unsupported field {field.spec}")
