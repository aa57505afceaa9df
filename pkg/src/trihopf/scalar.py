"""Exact arithmetic in cyclotomic fields Q(zeta_N) = Q[x]/(Phi_N)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
import cmath


class ConductorMismatch(ValueError):
    """Two scalars from different cyclotomic fields were combined."""


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficients stored low degree first
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return q, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod_int(p, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(p)


class CyclotomicField:
    """The field Q(zeta_n). Instances are cached, one per conductor."""

    _cache: dict[int, "CyclotomicField"] = {}

    def __new__(cls, n: int):
        if n in cls._cache:
            return cls._cache[n]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"conductor must be a positive integer, got {n!r}")
        self = super().__new__(cls)
        self.n = n
        self.poly = cyclotomic_poly(n)
        self.phi = len(self.poly) - 1
        # x^k mod Phi_n for k in [phi, 2*phi - 2], as integer vectors
        red = {}
        cur = [0] * self.phi
        if self.phi >= 1:
            # x^phi = -(lower part of Phi)
            cur = [-c for c in self.poly[:-1]]
        for k in range(self.phi, 2 * self.phi - 1):
            red[k] = tuple(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [cur[i] - top * self.poly[i] for i in range(self.phi)]
        self._red = red
        self._zero_num = (0,) * self.phi
        self.zero = Cyc._raw(self, self._zero_num, 1)
        self.one = Cyc._raw(self, (1,) + (0,) * (self.phi - 1), 1)
        cls._cache[n] = self
        return self

    def __reduce__(self):
        return (CyclotomicField, (self.n,))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"

    def __call__(self, value) -> "Cyc":
        return self.coerce(value)

    def coerce(self, value) -> "Cyc":
        if isinstance(value, Cyc):
            if value.field is not self:
                raise ConductorMismatch(f"scalar of conductor {value.field.n} used in field of conductor {self.n}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Cyc._raw(self, (value,) + self._zero_num[1:], 1)
        if isinstance(value, Rational):
            f = Fraction(value)
            return Cyc._raw(self, (f.numerator,) + self._zero_num[1:], f.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} to a cyclotomic scalar")

    def from_coeffs(self, coeffs) -> "Cyc":
        """Element sum_k coeffs[k] * zeta^k; any length, reduced mod Phi_n."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fr]
        return Cyc._make(self, self._reduce(ints), den)

    def _reduce(self, ints: list[int]) -> list[int]:
        phi = self.phi
        if len(ints) <= phi:
            return ints + [0] * (phi - len(ints))
        # fold powers through x^n = 1, then reduce the rest mod Phi_n
        full = [0] * max(self.n, phi)
        for k, c in enumerate(ints):
            if c:
                full[k % self.n] += c
        out = full[:phi]
        for k in range(phi, len(full)):
            c = full[k]
            if c:
                for i, r in enumerate(self._power_mod(k)):
                    out[i] += c * r
        return out

    @lru_cache(maxsize=None)
    def _power_mod(self, k: int) -> tuple[int, ...]:
        if k < self.phi:
            v = [0] * self.phi
            v[k] = 1
            return tuple(v)
        prev = self._power_mod(k - 1)
        top = prev[-1]
        cur = [0] + list(prev[:-1])
        if top:
            cur = [cur[i] - top * self.poly[i] for i in range(self.phi)]
        return tuple(cur)

    def zeta(self, k: int = 1) -> "Cyc":
        """zeta_n^k."""
        return Cyc._make(self, list(self._power_mod(k % self.n)), 1)

    def embeddings(self) -> list[int]:
        return [j for j in range(1, self.n + 1) if gcd(j, self.n) == 1] if self.n > 1 else [1]


def field(n: int) -> CyclotomicField:
    return CyclotomicField(n)


def root_of_unity(k: int, n: int) -> "Cyc":
    """zeta_n^k as an element of Q(zeta_n)."""
    return CyclotomicField(n).zeta(k)


class Cyc:
    """An element of Q(zeta_n): integer numerators over a common positive denominator."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _raw(cls, F: CyclotomicField, num: tuple, den: int) -> "Cyc":
        self = object.__new__(cls)
        self.field = F
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, F: CyclotomicField, num, den: int) -> "Cyc":
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = gcd(den, *num)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        return cls._raw(F, tuple(num), den)

    # -- coercion helpers
    def _other(self, other) -> "Cyc | None":
        if isinstance(other, Cyc):
            if other.field is not self.field:
                raise ConductorMismatch(
                    f"conductor mismatch: {self.field.n} vs {other.field.n}")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.coerce(other)
        return None

    @property
    def conductor(self) -> int:
        return self.field.n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return Cyc._make(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        return Cyc._make(self.field, [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                         self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyc._raw(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        F = self.field
        a, b = self.num, o.num
        phi = F.phi
        if phi == 1:
            return Cyc._make(F, [a[0] * b[0]], self.den * o.den)
        if not any(b[1:]):
            c = b[0]
            return Cyc._make(F, [x * c for x in a], self.den * o.den)
        if not any(a[1:]):
            c = a[0]
            return Cyc._make(F, [x * c for x in b], self.den * o.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        red = F._red
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                for i, r in enumerate(red[k]):
                    if r:
                        out[i] += c * r
        return Cyc._make(F, out, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        F = self.field
        if self.is_rational():
            return Cyc._make(F, [self.den] + [0] * (F.phi - 1), self.num[0])
        # work over Q with Fraction polynomials
        a = _trim([Fraction(c, self.den) for c in self.num])
        m = _trim([Fraction(c) for c in F.poly])
        s0, s1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, m
        while len(r1) > 1 or r1[0] != 0:
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        # r0 is a nonzero constant; s0 * a = r0 mod Phi
        c = r0[0]
        return F.from_coeffs([x / c for x in s0])

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.n, self.num, self.den))
        return self._hash

    def galois(self, j: int) -> "Cyc":
        """Image under the automorphism zeta -> zeta^j (gcd(j, n) = 1)."""
        F = self.field
        if gcd(j, F.n) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        ints = [0] * F.n
        for k, c in enumerate(self.num):
            if c:
                ints[(k * j) % F.n] += c
        return Cyc._make(F, F._reduce(ints), self.den)

    def conj(self) -> "Cyc":
        return self.galois(-1 % self.field.n) if self.field.n > 2 else self

    def embed(self, m: int) -> "Cyc":
        """Image in Q(zeta_m) under zeta_n -> zeta_m^(m/n)."""
        n = self.field.n
        if m % n:
            raise ConductorMismatch(f"cannot embed conductor {n} into {m}")
        G = CyclotomicField(m)
        step = m // n
        ints = [0] * m
        for k, c in enumerate(self.num):
            if c:
                ints[(k * step) % m] += c
        return Cyc._make(G, G._reduce(ints), self.den)

    def to_complex(self, j: int = 1) -> complex:
        z = cmath.exp(2j * cmath.pi * j / self.field.n)
        return sum(c * z ** k for k, c in enumerate(self.num)) / self.den

    def to_json(self) -> list[list[int]]:
        return [[c // gcd(c, self.den), self.den // gcd(c, self.den)] for c in self.num]

    def __repr__(self) -> str:
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, c in enumerate(self.num):
            if c:
                f = Fraction(c, self.den)
                terms.append(f"{f}" if k == 0 else f"{f}*z{self.field.n}^{k}")
        return " + ".join(terms)


def scalar_from_json(data, conductor: int) -> Cyc:
    """Inverse of Cyc.to_json; accepts a bare number for rationals."""
    F = CyclotomicField(conductor)
    if isinstance(data, (int, float)) and not isinstance(data, bool):
        if isinstance(data, float) and not data.is_integer():
            raise ValueError("floating point scalars are not accepted")
        return F(int(data))
    if isinstance(data, str):
        return F(Fraction(data))
    if not isinstance(data, list):
        raise ValueError(f"malformed scalar {data!r}")
    coeffs = []
    for pair in data:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ValueError(f"malformed scalar coefficient {pair!r}")
        coeffs.append(Fraction(int(pair[0]), int(pair[1])))
    return F.from_coeffs(coeffs)


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_divmod_frac(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _trim(q), _trim(a[:db] or [Fraction(0)])
