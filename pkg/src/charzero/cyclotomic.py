"""Exact cyclotomic integers with a decidable zero test.

A value of conductor m is stored by its coordinates in the power basis
{zeta_m^i : 0 <= i < phi(m)} after eager reduction modulo the m-th
cyclotomic polynomial.  Since Phi_m is the minimal polynomial of zeta_m,
the reduced coordinate vector is unique, so equality and the zero test are
plain integer comparisons: no tolerance exists anywhere in this module.

Mixed-conductor arithmetic lifts both operands to the least common
multiple conductor via zeta_m = zeta_M^(M/m).  All values are immutable.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .polynomials import IntPoly


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("conductor must be positive")
    result = m
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _divisors(m: int) -> list[int]:
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


def _moebius(n: int) -> int:
    mu, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    if n > 1:
        mu = -mu
    return mu


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> IntPoly:
    """Phi_m via the Moebius product prod_{d|m} (x^d - 1)^mu(m/d)."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m == 1:
        return IntPoly((-1, 1))
    numer = IntPoly((1,))
    denom = IntPoly((1,))
    for d in _divisors(m):
        mu = _moebius(m // d)
        if mu == 1:
            numer = numer * IntPoly.x_pow_minus_one(d)
        elif mu == -1:
            denom = denom * IntPoly.x_pow_minus_one(d)
    return numer // denom


@lru_cache(maxsize=None)
def _power_basis(m: int) -> tuple[tuple[int, ...], ...]:
    """Canonical coordinates of x^i mod Phi_m, for i up to the largest
    exponent a product of two reduced elements can reach (2*phi(m) - 2)."""
    phi_poly = cyclotomic_polynomial(m)
    phi = phi_poly.degree
    # x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}) since Phi_m is monic
    top = tuple(-c for c in phi_poly.coeffs[:phi])
    rows: list[tuple[int, ...]] = []
    for i in range(phi):
        row = [0] * phi
        row[i] = 1
        rows.append(tuple(row))
    for _ in range(phi, max(m, 2 * phi - 1)):
        prev = rows[-1]
        carry = prev[phi - 1]
        row = [0] + list(prev[:-1])
        if carry:
            for j in range(phi):
                row[j] += carry * top[j]
        rows.append(tuple(row))
    return tuple(rows)


class CycInt:
    """Element of Z[zeta_m] in canonical power-basis coordinates."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple[int, ...]):
        # internal: coeffs must already be canonical of length phi(conductor)
        self.conductor = conductor
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_exponents(m: int, exponent_coeffs: dict[int, int]) -> "CycInt":
        """Canonical reduction of sum_e c_e * zeta_m^e."""
        if m < 1:
            raise ValueError("conductor must be positive")
        basis = _power_basis(m)
        phi = len(basis[0])
        acc = [0] * phi
        for e, c in exponent_coeffs.items():
            if c == 0:
                continue
            row = basis[e % m]
            for j in range(phi):
                acc[j] += c * row[j]
        return CycInt(m, tuple(acc))

    @staticmethod
    def integer(n: int, m: int = 1) -> "CycInt":
        return CycInt.from_exponents(m, {0: n})

    @staticmethod
    def zeta(m: int, e: int = 1) -> "CycInt":
        return CycInt.from_exponents(m, {e: 1})

    @staticmethod
    def zero(m: int = 1) -> "CycInt":
        return CycInt(m, (0,) * euler_phi(m))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def lift(self, big_m: int) -> "CycInt":
        """Rewrite in conductor big_m (a multiple of the current one)."""
        if big_m == self.conductor:
            return self
        if big_m % self.conductor != 0:
            raise ValueError("can only lift to a multiple of the conductor")
        k = big_m // self.conductor
        return CycInt.from_exponents(
            big_m, {i * k: c for i, c in enumerate(self.coeffs) if c}
        )

    def _common(self, other: "CycInt") -> tuple["CycInt", "CycInt"]:
        if self.conductor == other.conductor:
            return self, other
        m = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(other, self.conductor)
        a, b = self._common(other)
        return CycInt(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(other, self.conductor)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.conductor, tuple(other * c for c in self.coeffs))
        a, b = self._common(other)
        m = a.conductor
        basis = _power_basis(m)
        phi = len(a.coeffs)
        conv = [0] * (2 * phi - 1)
        for i, ca in enumerate(a.coeffs):
            if ca:
                for j, cb in enumerate(b.coeffs):
                    if cb:
                        conv[i + j] += ca * cb
        acc = list(conv[:phi]) + [0] * max(0, phi - len(conv))
        for e in range(phi, len(conv)):
            c = conv[e]
            if c:
                row = basis[e]
                for j in range(phi):
                    acc[j] += c * row[j]
        return CycInt(m, tuple(acc))

    __rmul__ = __mul__

    def galois(self, a: int) -> "CycInt":
        """Image under zeta_m -> zeta_m^a, gcd(a, m) = 1."""
        m = self.conductor
        if gcd(a % m, m) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        return CycInt.from_exponents(
            m, {(i * a) % m: c for i, c in enumerate(self.coeffs) if c}
        )

    def conjugate(self) -> "CycInt":
        """Complex conjugation, zeta -> zeta^{-1}."""
        if self.conductor <= 2:
            return self
        return self.galois(self.conductor - 1)

    # -- comparison / display ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        if not isinstance(other, CycInt):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # values of different conductors compare equal; do not hash

    def __repr__(self):
        return f"CycInt(m={self.conductor}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c:+d}")
            else:
                z = f"z{self.conductor}" + (f"^{i}" if i > 1 else "")
                if c == 1:
                    parts.append(f"+{z}")
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c:+d}*{z}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        zero = self.is_zero()
        return {
            "conductor": self.conductor,
            "coeffs": [] if zero else list(self.coeffs),
            "is_zero": zero,
        }

    @staticmethod
    def from_json(obj: dict) -> "CycInt":
        m = int(obj["conductor"])
        phi = euler_phi(m)
        coeffs = list(obj["coeffs"])
        if len(coeffs) < phi:
            coeffs += [0] * (phi - len(coeffs))
        if len(coeffs) != phi:
            raise ValueError("coefficient vector has the wrong length")
        return CycInt(m, tuple(int(c) for c in coeffs))


def cyc_make(m: int, exponent_multiset: dict[int, int]) -> CycInt:
    """Public constructor: canonical form of sum_e c_e zeta_m^e."""
    return CycInt.from_exponents(m, exponent_multiset)


def cyc_is_zero(v: CycInt) -> bool:
    """Exact zero test from canonical coordinates."""
    return v.is_zero()
