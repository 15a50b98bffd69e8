"""Ground-truth classification and verification scans for the detector forms."""
from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .quasimodular import DetectorParams, a_coeff, a_total, b_coeff, divisors, validate_residue

WORKERS_ENV = "MACDETECT_WORKERS"

# Deterministic for n < 3.3e24 (Sorenson & Webster); far beyond desk scale.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic Miller-Rabin range")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def integer_cube_root(n: int) -> int:
    """floor(n ** (1/3)) by binary search on integers."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lo, hi = 0, 1
    while hi**3 <= n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**3 <= n:
            lo = mid
        else:
            hi = mid
    return lo


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


class CubeClass(enum.Enum):
    PRIME_CUBE = "prime_cube"
    EXCEEDS_CUBE = "exceeds_cube"
    BELOW_ALL_CUBES = "below_all_cubes"

    @property
    def expected_sign(self) -> int:
        return {"prime_cube": 0, "exceeds_cube": 1, "below_all_cubes": -1}[self.value]


def classify_cube(n: int) -> CubeClass:
    if n < 2:
        raise ValueError(f"classification is defined for n >= 2, got {n}")
    p = integer_cube_root(n)
    if p**3 == n and is_prime(p):
        return CubeClass.PRIME_CUBE
    if any(q**3 < n for q in prime_factors(n)):
        return CubeClass.EXCEEDS_CUBE
    return CubeClass.BELOW_ALL_CUBES


def is_prime_in_ap(n: int, r: int, t: int) -> bool:
    validate_residue(r, t)
    return n % t == r and is_prime(n)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _chunks(lo: int, hi: int, pieces: int) -> list[tuple[int, int]]:
    size = max(1, -(-(hi - lo + 1) // pieces))
    return [(a, min(hi, a + size - 1)) for a in range(lo, hi + 1, size)]


def _parallel_map(fn: Callable, args: Sequence[tuple], workers: int) -> list:
    if workers <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *a) for a in args]
        return [f.result() for f in futures]


def _run_chunked(fn: Callable, lo: int, hi: int, extra: tuple, workers: int | None) -> list:
    if hi < lo:
        return []
    workers = default_workers() if workers is None else workers
    # tiny ranges are not worth a process pool
    if hi - lo < 400:
        workers = 1
    pieces = _chunks(lo, hi, workers * 4 if workers > 1 else 1)
    results = _parallel_map(fn, [(a, b) + extra for a, b in pieces], workers)
    return [row for chunk in results for row in chunk]


# -- cube scan -------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    n: int
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"n": self.n, "expected": self.expected, "actual": self.actual}


@dataclass
class CubeScanReport:
    k: int
    l: int
    max_n: int
    zero_set: list[int] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _cube_chunk(lo: int, hi: int, k: int, l: int) -> list[tuple[int, int, int]]:
    return [(n, _sign(a_total(k, l, n)), classify_cube(n).expected_sign) for n in range(lo, hi + 1)]


def scan_cube(k: int, l: int, max_n: int, workers: int | None = None) -> CubeScanReport:
    """Compare sign(a_{k,l}(n)) with the cube trichotomy on 2 <= n <= max_n."""
    DetectorParams(k, l)
    report = CubeScanReport(k, l, max_n)
    names = {0: "zero", 1: "positive", -1: "negative"}
    for n, got, want in _run_chunked(_cube_chunk, 2, max_n, (k, l), workers):
        if got == 0:
            report.zero_set.append(n)
        if got != want:
            report.mismatches.append(Mismatch(n, names[want], names[got]))
    return report


# -- arithmetic-progression scan -------------------------------------------

@dataclass
class APScanReport:
    k: int
    l: int
    r: int
    t: int
    max_n: int
    value_at_one: int | None = None
    zero_set: list[int] = field(default_factory=list)
    negatives: list[int] = field(default_factory=list)
    expected_zero_set: list[int] = field(default_factory=list)

    @property
    def missing(self) -> list[int]:
        return sorted(set(self.expected_zero_set) - set(self.zero_set))

    @property
    def spurious(self) -> list[int]:
        return sorted(set(self.zero_set) - set(self.expected_zero_set))

    @property
    def ok(self) -> bool:
        return not self.negatives and self.zero_set == self.expected_zero_set


def _ap_chunk(lo: int, hi: int, k: int, l: int, r: int, t: int) -> list[tuple[int, int, bool]]:
    return [(n, b_coeff(k, l, r, t, n), is_prime_in_ap(n, r, t)) for n in range(lo, hi + 1)]


def scan_ap(k: int, l: int, r: int, t: int, max_n: int, workers: int | None = None) -> APScanReport:
    """Non-negativity on [1, max_n]; zeros on [2, max_n] versus primes = r mod t."""
    DetectorParams(k, l, r, t)
    report = APScanReport(k, l, r, t, max_n)
    if max_n >= 1:
        report.value_at_one = b_coeff(k, l, r, t, 1)
        if report.value_at_one < 0:
            report.negatives.append(1)
    for n, value, expected in _run_chunked(_ap_chunk, 2, max_n, (k, l, r, t), workers):
        if value < 0:
            report.negatives.append(n)
        if value == 0:
            report.zero_set.append(n)
        if expected:
            report.expected_zero_set.append(n)
    return report


# -- lemma probes ----------------------------------------------------------

@dataclass(frozen=True)
class LemmaViolation:
    n: int
    d: int
    check: str
    value: int

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "check": self.check, "value": str(self.value)}


@dataclass
class LemmaReport:
    k: int
    l: int
    max_n: int
    pairs_checked: int = 0
    violations: list[LemmaViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _probe_chunk(lo: int, hi: int, k: int, l: int) -> list:
    out = []
    for n in range(lo, hi + 1):
        for d in divisors(n):
            a = a_coeff(k, l, n, d)
            if (a < 0) != (d == n):
                out.append((n, d, "sign", a))
            if d < n:
                bound = Fraction(n ** (3 * l) * d ** (3 * k)) * (1 + Fraction(1, n**l - 1))
                if not a < bound:
                    out.append((n, d, "upper_bound", a))
            else:
                floor = Fraction(n ** (2 * k + 3 * l)) * (1 - Fraction(1, n * n))
                if not abs(a) > floor:
                    out.append((n, d, "lower_bound", a))
        out.append((n, None, "count", len(divisors(n))))
    return out


def probe_lemmas(k: int, l: int, max_n: int, workers: int | None = None) -> LemmaReport:
    """Sign of a_{k,l}(n, d), the upper bound for d < n and the lower bound on |a(n, n)|."""
    DetectorParams(k, l)
    report = LemmaReport(k, l, max_n)
    for n, d, check, value in _run_chunked(_probe_chunk, 2, max_n, (k, l), workers):
        if check == "count":
            report.pairs_checked += value
        else:
            report.violations.append(LemmaViolation(n, d, check, value))
    return report
