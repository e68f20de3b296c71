"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are represented in the power basis 1, z, ..., z^(phi(N)-1) of
Q[x]/(Phi_N(x)) with one shared integer denominator, so equality is literal
equality of normalized coefficient vectors at a fixed conductor.  Values with
different conductors are compared after embedding both into the lcm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def divisors(n: int) -> list[int]:
    small, big = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                big.append(n // d)
        d += 1
    return small + big[::-1]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs a positive integer")
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact division by a monic integer polynomial
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, monic, length phi(n)+1."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in divisors(n):
        if d < n:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # rows[j] = coefficient vector of x^(phi+j) mod Phi_n; enough rows for
    # both products (degree 2*phi-2) and plain powers x^e, e < n
    phi = euler_phi(n)
    count = max(phi - 1, n - phi)
    if count == 0:
        return ()
    head = cyclotomic_polynomial(n)[:phi]
    rows = [tuple(-c for c in head)]
    for _ in range(count - 1):
        prev = rows[-1]
        top = prev[phi - 1]
        nxt = [0] + list(prev[: phi - 1])
        if top:
            for k in range(phi):
                nxt[k] += top * rows[0][k]
        rows.append(tuple(nxt))
    return tuple(rows)


def _reduce_vector(n: int, conv: list[int]) -> list[int]:
    phi = euler_phi(n)
    out = conv[:phi] + [0] * (phi - len(conv[:phi]))
    if len(conv) > phi:
        rows = _reduction_rows(n)
        for j in range(phi, len(conv)):
            c = conv[j]
            if c:
                row = rows[j - phi]
                for k in range(phi):
                    out[k] += c * row[k]
    return out


@lru_cache(maxsize=None)
def _xpow_vector(n: int, e: int) -> tuple[int, ...]:
    # x^e mod Phi_n as an integer vector of length phi(n)
    phi = euler_phi(n)
    e %= n
    vec = [0] * (e + 1)
    vec[e] = 1
    return tuple(_reduce_vector(n, vec))


@lru_cache(maxsize=None)
def _embedding_rows(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    # basis image of Q(zeta_n) inside Q(zeta_m): z_n^k -> z_m^(k*m/n)
    if m % n:
        raise ValueError(f"no embedding: {n} does not divide {m}")
    step = m // n
    return tuple(_xpow_vector(m, k * step) for k in range(euler_phi(n)))


class CycloNum:
    """An element of Q(zeta_(conductor)); immutable, normalized."""

    __slots__ = ("conductor", "den", "nums")

    def __init__(self, conductor: int, den: int, nums: tuple[int, ...]):
        self.conductor = conductor
        self.den = den
        self.nums = nums

    @staticmethod
    def _make(conductor: int, den: int, nums: list[int]) -> "CycloNum":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        g = abs(den)
        for v in nums:
            g = gcd(g, v)
            if g == 1:
                break
        if g == 0:
            g = 1
        if den < 0:
            g = -g
        return CycloNum(conductor, den // g, tuple(v // g for v in nums))

    @staticmethod
    def zero(conductor: int = 1) -> "CycloNum":
        return CycloNum(conductor, 1, (0,) * euler_phi(conductor))

    @staticmethod
    def one(conductor: int = 1) -> "CycloNum":
        nums = [0] * euler_phi(conductor)
        nums[0] = 1
        return CycloNum(conductor, 1, tuple(nums))

    @staticmethod
    def from_rational(value, conductor: int = 1) -> "CycloNum":
        r = Fraction(value)
        nums = [0] * euler_phi(conductor)
        nums[0] = r.numerator
        return CycloNum._make(conductor, r.denominator, nums)

    @staticmethod
    def from_coeffs(conductor: int, coeffs) -> "CycloNum":
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != euler_phi(conductor):
            raise ValueError("coefficient vector has wrong length")
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        return CycloNum._make(conductor, den, [int(f * den) for f in fracs])

    @staticmethod
    def root(conductor: int, exponent: int = 1) -> "CycloNum":
        return CycloNum(conductor, 1, _xpow_vector(conductor, exponent))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_one(self) -> bool:
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.nums[0], self.den)

    def embed(self, conductor: int) -> "CycloNum":
        if conductor == self.conductor:
            return self
        rows = _embedding_rows(self.conductor, conductor)
        out = [0] * euler_phi(conductor)
        for k, v in enumerate(self.nums):
            if v:
                row = rows[k]
                for j in range(len(out)):
                    out[j] += v * row[j]
        return CycloNum._make(conductor, self.den, out)

    def _coerce(self, other) -> "tuple[CycloNum, CycloNum]":
        if not isinstance(other, CycloNum):
            other = CycloNum.from_rational(other)
        if self.conductor == other.conductor:
            return self, other
        m = lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    def __add__(self, other) -> "CycloNum":
        a, b = self._coerce(other)
        den = lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        nums = [fa * x + fb * y for x, y in zip(a.nums, b.nums)]
        return CycloNum._make(a.conductor, den, nums)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.conductor, self.den, tuple(-v for v in self.nums))

    def __sub__(self, other) -> "CycloNum":
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other) -> "CycloNum":
        return (-self) + other

    def __mul__(self, other) -> "CycloNum":
        if isinstance(other, int):
            return CycloNum._make(
                self.conductor, self.den, [other * v for v in self.nums]
            )
        if isinstance(other, Fraction):
            return CycloNum._make(
                self.conductor,
                self.den * other.denominator,
                [other.numerator * v for v in self.nums],
            )
        a, b = self._coerce(other)
        phi = len(a.nums)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        conv[i + j] += x * y
        nums = _reduce_vector(a.conductor, conv)
        return CycloNum._make(a.conductor, a.den * b.den, nums)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            r = 1 / self.as_rational()
            return CycloNum.from_rational(r, self.conductor)
        # extended Euclid in Q[x] against Phi_N
        n = self.conductor
        r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r1 = [Fraction(v, self.den) for v in self.nums]
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while True:
            d1 = deg(r1)
            if d1 <= 0:
                break
            d0 = deg(r0)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = r0[d0] / r1[d1]
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] -= c * r1[i]
            if len(s0) < len(s1) + shift:
                s0 = s0 + [Fraction(0)] * (len(s1) + shift - len(s0))
            for i in range(len(s1)):
                s0[i + shift] -= c * s1[i]
        if deg(r1) != 0:
            raise ArithmeticError("gcd with Phi_N not constant")
        c = r1[0]
        inv = [x / c for x in s1]
        inv += [Fraction(0)] * (euler_phi(n) - len(inv))
        return CycloNum.from_coeffs(n, inv[: euler_phi(n)])

    def __truediv__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            if not r:
                raise ZeroDivisionError("division by zero")
            return CycloNum._make(
                self.conductor,
                self.den * r.numerator,
                [r.denominator * v for v in self.nums],
            )
        a, b = self._coerce(other)
        return a * b.inverse()

    def __rtruediv__(self, other) -> "CycloNum":
        return CycloNum.from_rational(other, self.conductor) / self

    def __pow__(self, e: int) -> "CycloNum":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._coerce(other)
        return a.den == b.den and a.nums == b.nums

    __hash__ = None  # equality crosses conductors; use .key() at a fixed one

    def key(self) -> tuple:
        return (self.conductor, self.den, self.nums)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        terms = []
        for k, v in enumerate(self.nums):
            if v:
                c = str(Fraction(v, self.den))
                terms.append(c if k == 0 else f"{c}*z{k}" if k > 1 else f"{c}*z")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclo[{self.conductor}]({body})"


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_conductor ^ exponent, kept in lowest terms."""

    conductor: int
    exponent: int

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        e = self.exponent % self.conductor
        g = gcd(e, self.conductor) if e else self.conductor
        object.__setattr__(self, "conductor", self.conductor // g)
        object.__setattr__(self, "exponent", e // g)

    @property
    def order(self) -> int:
        return self.conductor

    def to_cyclo(self, conductor: int | None = None) -> CycloNum:
        z = CycloNum.root(self.conductor, self.exponent)
        return z.embed(conductor) if conductor else z

    def __pow__(self, t: int) -> "RootOfUnity":
        return RootOfUnity(self.conductor, self.exponent * t)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        m = lcm(self.conductor, other.conductor)
        return RootOfUnity(
            m, self.exponent * (m // self.conductor) + other.exponent * (m // other.conductor)
        )


def order_of(z) -> int:
    """Multiplicative order of a root of unity; ValueError otherwise."""
    if isinstance(z, RootOfUnity):
        return z.order
    if not isinstance(z, CycloNum):
        z = CycloNum.from_rational(z)
    if z.is_zero():
        raise ValueError("zero is not a root of unity")
    bound = lcm(2, z.conductor)
    if not (z ** bound).is_one():
        raise ValueError(f"{z!r} is not a root of unity")
    for t in divisors(bound):
        if (z ** t).is_one():
            return t
    raise AssertionError("unreachable")


def as_root_of_unity(z: CycloNum) -> RootOfUnity:
    """Express a CycloNum as a RootOfUnity; ValueError if it is not one."""
    n = order_of(z)
    acc = CycloNum.one(z.conductor)
    zn = CycloNum.root(n).embed(lcm(n, z.conductor))
    ze = z.embed(lcm(n, z.conductor))
    for k in range(n):
        if acc == ze:
            return RootOfUnity(n, k)
        acc = acc * zn
    raise ValueError(f"{z!r} is not a root of unity")


def primitive_roots(d: int) -> tuple[RootOfUnity, ...]:
    """All roots of unity of exact order d."""
    return tuple(RootOfUnity(d, k) for k in range(d) if gcd(k, d) == 1)
