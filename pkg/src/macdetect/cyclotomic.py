"""Exact coefficient rings: rationals and the cyclotomic fields Q(zeta_t).

Rationals are :class:`fractions.Fraction`.  Elements of Q(zeta_t) are stored in
the power basis 1, z, ..., z^(phi(t)-1), reduced modulo the t-th cyclotomic
polynomial, so equality is coefficient-wise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction]


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    # Coefficients low degree first; den is monic.
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            out[i - dq] = c
            for j, dc in enumerate(den):
                num[i - dq + j] -= c * dc
    if any(num[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(t: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_t, lowest degree first.

    >>> cyclotomic_poly(3)
    (1, 1, 1)
    """
    if t < 1:
        raise ValueError(f"conductor must be >= 1, got {t}")
    poly = [-1] + [0] * (t - 1) + [1]  # x^t - 1
    for d in range(1, t):
        if t % d == 0:
            poly = _poly_divmod_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def euler_phi(t: int) -> int:
    return len(cyclotomic_poly(t)) - 1


def _reduce(poly: list[Fraction], t: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(t)
    deg = len(phi) - 1
    poly = list(poly)
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            for j in range(deg):
                if phi[j]:
                    poly[i - deg + j] -= c * phi[j]
    poly = poly[:deg] + [Fraction(0)] * max(0, deg - len(poly))
    return tuple(Fraction(c) for c in poly)


@dataclass(frozen=True)
class CycloNum:
    """An element of Q(zeta_t) in reduced power-basis form."""

    t: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != euler_phi(self.t):
            raise ValueError(
                f"Q(zeta_{self.t}) needs {euler_phi(self.t)} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_poly(cls, t: int, poly) -> "CycloNum":
        """Reduce an arbitrary polynomial in zeta_t (low degree first)."""
        return cls(t, _reduce([Fraction(c) for c in poly], t))

    @classmethod
    def rational(cls, t: int, value: Scalar) -> "CycloNum":
        phi = euler_phi(t)
        return cls(t, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, t: int) -> "CycloNum":
        return cls.rational(t, 0)

    @classmethod
    def one(cls, t: int) -> "CycloNum":
        return cls.rational(t, 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            if other.t != self.t:
                raise ValueError(f"conductor mismatch: {self.t} vs {other.t}")
            return other
        if isinstance(other, (int, _RationalABC)):
            return CycloNum.rational(self.t, Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.t, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.t, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.t, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            c = Fraction(other)
            return CycloNum(self.t, tuple(a * c for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloNum(self.t, _reduce(prod, self.t))

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Division by rationals only; general inverses are not needed here.
        if isinstance(other, (int, _RationalABC)):
            c = Fraction(other)
            return CycloNum(self.t, tuple(a / c for a in self.coeffs))
        return NotImplemented

    def __pow__(self, e: int) -> "CycloNum":
        if e < 0:
            raise ValueError("negative powers not supported")
        result, base = CycloNum.one(self.t), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return self.t == other.t and self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.t, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(str(c) if i == 0 else f"{c}*z^{i}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycloNum(t={self.t}, {self})"


def zeta(t: int) -> CycloNum:
    return root_power(t, 1)


@lru_cache(maxsize=4096)
def root_power(t: int, j: int) -> CycloNum:
    """zeta_t ** (j mod t), reduced."""
    if t < 1:
        raise ValueError(f"conductor must be >= 1, got {t}")
    e = j % t
    return CycloNum.from_poly(t, [0] * e + [1])


def root_of_unity_filter(t: int, m: int) -> CycloNum:
    """sum_{s<t} zeta_t^(s*m); equals t if t | m and 0 otherwise."""
    total = CycloNum.zero(t)
    for s in range(t):
        total = total + root_power(t, s * m)
    return total


# -- serialization ---------------------------------------------------------

def format_rational(x: Scalar) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str | int) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s.strip())


def cyclo_to_json(c: CycloNum) -> dict:
    return {"t": c.t, "coeffs": [format_rational(a) for a in c.coeffs]}


def cyclo_from_json(obj) -> CycloNum:
    """Accepts a {"t", "coeffs"} dict, or a bare rational string/int (t = 1)."""
    if isinstance(obj, (str, int)):
        return CycloNum.rational(1, parse_rational(obj))
    return CycloNum(int(obj["t"]), tuple(parse_rational(c) for c in obj["coeffs"]))


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
