"""Truncated formal power series in q over Q or Q(zeta_t)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .cyclotomic import CycloNum, cyclo_to_json, format_rational


def _ring_of(c) -> int | None:
    return c.t if isinstance(c, CycloNum) else None


@dataclass(frozen=True)
class QSeries:
    """c_0 + c_1 q + ... + c_N q^N, with N = ``order`` inclusive.

    ``ring`` is None for rational coefficients, or the conductor t when the
    coefficients are :class:`CycloNum` values.
    """

    coeffs: tuple
    ring: int | None = None

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        for c in self.coeffs:
            if _ring_of(c) != self.ring:
                raise ValueError(f"coefficient {c!r} not in ring {self.ring}")

    @classmethod
    def from_list(cls, values: Iterable, ring: int | None = None) -> "QSeries":
        if ring is None:
            return cls(tuple(Fraction(v) for v in values), None)
        out = []
        for v in values:
            out.append(v if isinstance(v, CycloNum) else CycloNum.rational(ring, v))
        return cls(tuple(out), ring)

    @classmethod
    def zero(cls, order: int, ring: int | None = None) -> "QSeries":
        return cls.from_list([0] * (order + 1), ring)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _zero(self):
        return Fraction(0) if self.ring is None else CycloNum.zero(self.ring)

    def _check(self, other: "QSeries") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1], self.ring)

    def embed(self, t: int) -> "QSeries":
        """View a rational series inside Q(zeta_t)."""
        if self.ring == t:
            return self
        if self.ring is not None:
            raise ValueError(f"cannot embed Q(zeta_{self.ring}) into Q(zeta_{t})")
        return QSeries(tuple(CycloNum.rational(t, c) for c in self.coeffs), t)

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.ring)

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.ring)

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-a for a in self.coeffs), self.ring)

    def scale(self, c) -> "QSeries":
        if isinstance(c, CycloNum):
            if self.ring != c.t:
                raise ValueError(f"ring mismatch: {self.ring} vs {c.t}")
        elif not isinstance(c, (int, _RationalABC)):
            raise TypeError(f"unsupported scalar {c!r}")
        else:
            c = Fraction(c)
        return QSeries(tuple(c * a for a in self.coeffs), self.ring)

    def __rmul__(self, c) -> "QSeries":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        return self.scale(other)

    def D(self, j: int = 1) -> "QSeries":
        return apply_D(self, j)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def nonzero_indices(self) -> list[int]:
        return [n for n, c in enumerate(self.coeffs) if c != 0]

    def to_json(self) -> dict:
        if self.ring is None:
            coeffs = [format_rational(c) for c in self.coeffs]
        else:
            coeffs = [cyclo_to_json(c) for c in self.coeffs]
        return {"order": self.order, "coeffs": coeffs}


def series_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def series_scale(c, a: QSeries) -> QSeries:
    return a.scale(c)


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated Cauchy product to order min(N_a, N_b)."""
    a._check(b)
    N = min(a.order, b.order)
    out = [a._zero() for _ in range(N + 1)]
    bc = b.coeffs
    for i in range(N + 1):
        ai = a.coeffs[i]
        if ai == 0:
            continue
        for j in range(N + 1 - i):
            if bc[j] != 0:
                out[i + j] = out[i + j] + ai * bc[j]
    return QSeries(tuple(out), a.ring)


def apply_D(a: QSeries, j: int) -> QSeries:
    """(q d/dq)^j: multiply the q^n coefficient by n^j."""
    if j < 0:
        raise ValueError("D-power must be non-negative")
    if j == 0:
        return a
    return QSeries(tuple(c * n**j for n, c in enumerate(a.coeffs)), a.ring)


def lambda_series(v: int, s: int, order: int) -> QSeries:
    """sum_{m >= 1, ms <= N} m^v q^(ms)."""
    if s < 1:
        raise ValueError(f"part size must be >= 1, got {s}")
    out = [0] * (order + 1)
    for m in range(1, order // s + 1):
        out[m * s] = m**v
    return QSeries.from_list(out)


def series_from_values(values: Sequence, ring: int | None = None) -> QSeries:
    return QSeries.from_list(values, ring)
