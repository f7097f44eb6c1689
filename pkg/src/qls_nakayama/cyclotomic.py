"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored in the power basis of Q[X]/Phi_N(X) as an integer
numerator vector over a common positive denominator.  Every value is kept
reduced modulo Phi_N, so equality is a plain comparison of coordinates.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

Rational = Union[int, Fraction]


class ConductorMismatch(ValueError):
    pass


class ScalarSyntaxError(ValueError):
    def __init__(self, text: str, column: int, message: str):
        self.text = text
        self.column = column
        super().__init__(f"{message} at column {column} in {text!r}")


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # exact division of integer polynomials (low -> high), b monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    assert not any(a), "non-exact division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


class _FieldData:
    """Per-conductor reduction tables."""

    def __init__(self, n: int):
        self.n = n
        phi = cyclotomic_polynomial(n)
        self.deg = deg = len(phi) - 1
        # powers[k] = X^k mod Phi_n for 0 <= k < n; X^n = 1 closes the cycle
        powers = []
        cur = [1] + [0] * (deg - 1)
        for _ in range(n):
            powers.append(tuple(cur))
            top = cur[-1]
            nxt = [0] + cur[:-1]
            if top:
                for j in range(deg):
                    nxt[j] -= top * phi[j]
            cur = nxt
        self.powers = powers
        self.root_index = {p: k for k, p in enumerate(powers)}


@lru_cache(maxsize=None)
def _field(n: int) -> _FieldData:
    return _FieldData(n)


class CycScalar:
    """An element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("N", "num", "den", "_hash")

    def __init__(self, N: int, coeffs: Iterable[Rational] = ()):
        fd = _field(N)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > fd.deg:
            # fold higher powers through the reduction table
            folded = [Fraction(0)] * fd.deg
            for k, c in enumerate(coeffs):
                if c:
                    for j, v in enumerate(fd.powers[k % N]):
                        if v:
                            folded[j] += c * v
            coeffs = folded
        coeffs = coeffs + [Fraction(0)] * (fd.deg - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = tuple(int(c * den) for c in coeffs)
        self._set(N, num, den)

    def _set(self, N: int, num: tuple[int, ...], den: int) -> None:
        g = math.gcd(den, *num)
        if g != 1:
            num = tuple(v // g for v in num)
            den //= g
        if not any(num):
            den = 1
        self.N = N
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, N: int, num: tuple[int, ...], den: int) -> CycScalar:
        obj = cls.__new__(cls)
        obj._set(N, num, den)
        return obj

    @classmethod
    def rational(cls, N: int, value: Rational) -> CycScalar:
        value = Fraction(value)
        deg = _field(N).deg
        return cls._raw(N, (value.numerator,) + (0,) * (deg - 1), value.denominator)

    @classmethod
    def zero(cls, N: int) -> CycScalar:
        return cls.rational(N, 0)

    @classmethod
    def one(cls, N: int) -> CycScalar:
        return cls.rational(N, 1)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    @property
    def conductor(self) -> int:
        return self.N

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycScalar):
            return self.N == other.N and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.N, self.num, self.den))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> CycScalar:
        if isinstance(other, CycScalar):
            if other.N != self.N:
                raise ConductorMismatch(f"conductors differ: {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(self.N, other)
        raise TypeError(f"cannot combine CycScalar with {type(other).__name__}")

    def __add__(self, other) -> CycScalar:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return CycScalar._raw(self.N, tuple(a + b for a, b in zip(self.num, o.num)), self.den)
        d1, d2 = self.den, o.den
        return CycScalar._raw(
            self.N, tuple(a * d2 + b * d1 for a, b in zip(self.num, o.num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar._raw(self.N, tuple(-a for a in self.num), self.den)

    def __sub__(self, other) -> CycScalar:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CycScalar:
        return (-self) + other

    def __mul__(self, other) -> CycScalar:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        N = self.N
        a, b = self.num, o.num
        if not any(a[1:]):
            c = a[0]
            return CycScalar._raw(N, tuple(c * v for v in b), self.den * o.den)
        if not any(b[1:]):
            c = b[0]
            return CycScalar._raw(N, tuple(c * v for v in a), self.den * o.den)
        fd = _field(N)
        deg = fd.deg
        conv = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        res = conv[:deg]
        powers = fd.powers
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                for j, v in enumerate(powers[k % N]):
                    if v:
                        res[j] += c * v
        return CycScalar._raw(N, tuple(res), self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> CycScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        return _inverse(self)

    def __truediv__(self, other) -> CycScalar:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other) -> CycScalar:
        return self._coerce(other) * self.inv()

    def __pow__(self, e: int) -> CycScalar:
        if e < 0:
            return self.inv() ** (-e)
        k = root_exponent(self)
        if k is not None:
            return root_of_unity(self.N, k * e)
        result = CycScalar.one(self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"CycScalar({self.N}, {format_scalar(self)!r})"


@lru_cache(maxsize=4096)
def _inverse(a: CycScalar) -> CycScalar:
    N = a.N
    k = root_exponent(a)
    if k is not None:
        return root_of_unity(N, -k)
    if a.is_rational():
        return CycScalar.rational(N, Fraction(a.den, a.num[0]))
    # solve (a * v) = 1 via the multiplication matrix in the power basis
    fd = _field(N)
    deg = fd.deg
    cols = []
    for j in range(deg):
        cols.append((a * root_of_unity(N, j)).coeffs)
    m = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
    for c in range(deg):
        p = next(r for r in range(c, deg) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for r in range(deg):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return CycScalar(N, [m[i][deg] for i in range(deg)])


@lru_cache(maxsize=None)
def root_of_unity(N: int, k: int) -> CycScalar:
    """zeta_N ** k in canonical form."""
    if N < 1:
        raise ValueError("conductor must be positive")
    fd = _field(N)
    return CycScalar._raw(N, fd.powers[k % N], 1)


def root_exponent(s: CycScalar) -> Optional[int]:
    """The k in [0, N) with s == zeta_N ** k, or None if s is not in mu_N."""
    if s.den != 1:
        return None
    return _field(s.N).root_index.get(s.num)


def detect_root_order(s: CycScalar) -> Optional[int]:
    """Multiplicative order of s if s is an N-th root of unity, else None."""
    if s.is_zero():
        return None
    one = CycScalar.one(s.N)
    for d in divisors(s.N):
        p = one
        # plain repeated multiplication keeps this independent of root_exponent
        for _ in range(d):
            p = p * s
        if p == one:
            return d
    return None


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """zeta_N ** exponent; exponent is kept reduced mod N."""

    conductor: int
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.conductor)

    @property
    def order(self) -> int:
        return self.conductor // math.gcd(self.conductor, self.exponent)

    @property
    def value(self) -> CycScalar:
        return root_of_unity(self.conductor, self.exponent)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        if other.conductor != self.conductor:
            raise ConductorMismatch("roots of unity with different conductors")
        return RootOfUnity(self.conductor, self.exponent + other.exponent)

    def __pow__(self, e: int) -> RootOfUnity:
        return RootOfUnity(self.conductor, self.exponent * e)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(self.conductor, -self.exponent)

    def is_one(self) -> bool:
        return self.exponent == 0

    def __str__(self) -> str:
        if self.exponent == 0:
            return "1"
        return f"z^{self.exponent}" if self.exponent != 1 else "z"


# -- literal grammar ------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:\s*/\s*\d+)?)\s*(?:\*\s*(?P<z1>z)(?:\s*\^\s*(?P<e1>\d+))?)?
        | (?P<z2>z)(?:\s*\^\s*(?P<e2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str, N: int) -> CycScalar:
    """Parse a polynomial literal in ``z`` (standing for zeta_N)."""
    s = text
    pos = 0
    coeffs: dict[int, Fraction] = {}
    first = True
    if not s.strip():
        raise ScalarSyntaxError(text, 1, "empty scalar literal")
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (not first and m.group("sign") is None):
            raise ScalarSyntaxError(text, pos + 1, "unexpected input")
        if m.group("coef") is None and m.group("z2") is None:
            raise ScalarSyntaxError(text, pos + 1, "expected a term")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef").replace(" ", ""))
            if m.group("z1"):
                e = int(m.group("e1")) if m.group("e1") else 1
            else:
                e = 0
        else:
            coef = Fraction(1)
            e = int(m.group("e2")) if m.group("e2") else 1
        coeffs[e] = coeffs.get(e, Fraction(0)) + sign * coef
        pos = m.end()
        first = False
    result = CycScalar.zero(N)
    for e, c in coeffs.items():
        if c:
            result = result + root_of_unity(N, e) * c
    return result


def format_scalar(s: CycScalar) -> str:
    parts = []
    for e in range(len(s.num) - 1, -1, -1):
        c = Fraction(s.num[e], s.den)
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            zp = "z" if e == 1 else f"z^{e}"
            body = zp if mag == 1 else f"{mag}*{zp}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"
