"""Eisenstein series and the detector forms g_{k,l} and f_{k,l}^{r,t}."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

from .cyclotomic import CycloNum, root_power
from .qseries import QSeries, apply_D, series_mul


@dataclass(frozen=True)
class DetectorParams:
    """(k, l) for g_{k,l}; (k, l, r, t) for f_{k,l}^{r,t}.

    k >= 1 is required: with k = 0 the negative-sign argument for g breaks down.
    """

    k: int
    l: int
    r: int | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        k, l = self.k, self.l
        if k < 1 or k % 2 == 0:
            raise ValueError(f"k must be an odd positive integer, got {k}")
        if l % 2 == 0 or l <= k:
            raise ValueError(f"l must be odd with l > k, got l={l}, k={k}")
        if (self.r is None) != (self.t is None):
            raise ValueError("r and t must be given together")
        if self.t is not None:
            validate_residue(self.r, self.t)

    @property
    def is_ap(self) -> bool:
        return self.t is not None


def validate_residue(r: int, t: int) -> None:
    if t < 2:
        raise ValueError(f"modulus t must be >= 2, got {t}")
    if not 0 <= r < t:
        raise ValueError(f"residue must satisfy 0 <= r < t, got r={r}")
    if gcd(r, t) != 1:
        raise ValueError(f"residue {r} is not coprime to {t}")


@lru_cache(maxsize=None)
def _bernoulli_table(k: int) -> tuple[Fraction, ...]:
    B = [Fraction(1)]
    for m in range(1, k + 1):
        # sum_{j=0}^{m} C(m+1, j) B_j = 0
        B.append(-sum(comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return tuple(B)


def bernoulli(k: int) -> Fraction:
    """B_k with the B_1 = -1/2 convention."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _bernoulli_table(k)[k]


def divisors(n: int) -> list[int]:
    """Sorted positive divisors by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def sigma_pow(k: int, n: int) -> int:
    return sum(d**k for d in divisors(n))


def _sigma_table(k: int, order: int) -> list[int]:
    table = [0] * (order + 1)
    for d in range(1, order + 1):
        dk = d**k
        for m in range(d, order + 1, d):
            table[m] += dk
    return table


def _check_weight(k: int) -> None:
    if k < 2 or k % 2:
        raise ValueError(f"Eisenstein series need even weight >= 2, got {k}")


def eisenstein_constant(k: int) -> Fraction:
    return -bernoulli(k) / (2 * k)


def eisenstein(k: int, order: int) -> QSeries:
    """G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n."""
    _check_weight(k)
    values = _sigma_table(k - 1, order)
    values[0] = eisenstein_constant(k)
    return QSeries.from_list(values)


def eisenstein_twisted(k: int, r: int, t: int, order: int) -> QSeries:
    """The residue-class piece of G_k supported on n = r mod t."""
    _check_weight(k)
    validate_residue(r, t)
    if r % t == 0:
        raise ValueError("r = 0 mod t leaves a nonvanishing constant term")
    sig = _sigma_table(k - 1, order)
    return QSeries.from_list([sig[n] if n and n % t == r else 0 for n in range(order + 1)])


def eisenstein_twisted_by_filter(k: int, r: int, t: int, order: int) -> QSeries:
    """(1/t) sum_s zeta^(-rs) G_k(tau + s/t), evaluated coefficient-wise in Q(zeta_t)."""
    _check_weight(k)
    validate_residue(r, t)
    if r % t == 0:
        raise ValueError("r = 0 mod t leaves a nonvanishing constant term")
    G = eisenstein(k, order)
    out = []
    for n, c in enumerate(G.coeffs):
        acc = CycloNum.zero(t)
        for s in range(t):
            acc = acc + root_power(t, -r * s) * root_power(t, s * n)
        out.append(acc * c / t)
    return QSeries(tuple(out), t)


def _poly_D(powers: tuple[int, ...], G: QSeries) -> QSeries:
    # (D^{p1} + D^{p2} + ...) G
    total = apply_D(G, powers[0])
    for p in powers[1:]:
        total = total + apply_D(G, p)
    return total


def build_g(params: DetectorParams, order: int) -> QSeries:
    """(D^{3l}+D^{2l}+D^l+1) G_{3k+1} - (D^{3k}+D^{2k}+D^k+1) G_{3l+1}."""
    if params.is_ap:
        raise ValueError("g_{k,l} takes no (r, t)")
    k, l = params.k, params.l
    first = _poly_D((3 * l, 2 * l, l, 0), eisenstein(3 * k + 1, order))
    second = _poly_D((3 * k, 2 * k, k, 0), eisenstein(3 * l + 1, order))
    return first - second


def a_coeff(k: int, l: int, n: int, d: int) -> int:
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")
    return (n ** (3 * l) + n ** (2 * l) + n**l + 1) * d ** (3 * k) - (
        n ** (3 * k) + n ** (2 * k) + n**k + 1
    ) * d ** (3 * l)


def a_total(k: int, l: int, n: int) -> int:
    """n-th coefficient of g_{k,l}, via the divisor-sum closed form."""
    return sum(a_coeff(k, l, n, d) for d in divisors(n))


def build_f(params: DetectorParams, order: int) -> QSeries:
    """(D^l + 1) G_{k+1} - (D^k + 1) G_{l+1}^{r,t}."""
    if not params.is_ap:
        raise ValueError("f_{k,l}^{r,t} needs (r, t)")
    k, l, r, t = params.k, params.l, params.r, params.t
    first = _poly_D((l, 0), eisenstein(k + 1, order))
    second = _poly_D((k, 0), eisenstein_twisted(l + 1, r, t, order))
    return first - second


def b_coeff(k: int, l: int, r: int, t: int, n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ds = divisors(n)
    if n % t == r % t:
        return sum((n**l + 1) * d**k - (n**k + 1) * d**l for d in ds)
    return (n**l + 1) * sum(d**k for d in ds)


@dataclass(frozen=True)
class RamanujanReport:
    order: int
    # per identity: highest index with a nonzero residual coefficient, or None
    max_nonzero: tuple[int | None, int | None, int | None]

    @property
    def all_zero(self) -> bool:
        return all(m is None for m in self.max_nonzero)


def ramanujan_residuals(order: int, G2=None, G4=None, G6=None) -> tuple[QSeries, QSeries, QSeries]:
    """Residuals of DG2 = -2G2^2 + 5/6 G4, DG4 = -8G2G4 + 7/10 G6, DG6 = -12G2G6 + 400/7 G4^2.

    The Eisenstein inputs can be overridden to check that corrupted series are caught.
    """
    G2 = eisenstein(2, order) if G2 is None else G2
    G4 = eisenstein(4, order) if G4 is None else G4
    G6 = eisenstein(6, order) if G6 is None else G6
    r1 = apply_D(G2, 1) + series_mul(G2, G2).scale(2) - G4.scale(Fraction(5, 6))
    r2 = apply_D(G4, 1) + series_mul(G2, G4).scale(8) - G6.scale(Fraction(7, 10))
    r3 = apply_D(G6, 1) + series_mul(G2, G6).scale(12) - series_mul(G4, G4).scale(Fraction(400, 7))
    return r1, r2, r3


def ramanujan_check(order: int, **overrides) -> RamanujanReport:
    if order < 1:
        raise ValueError("order must be >= 1")
    residuals = ramanujan_residuals(order, **overrides)
    tops = tuple(max(r.nonzero_indices(), default=None) for r in residuals)
    return RamanujanReport(order, tops)
