"""Linear combinations of twisted, D-differentiated MacMahonesque series.

A combination sum c * D^j U_a(zeta_t^s q) has q^n coefficient
sum c * n^j * M_a(n) * zeta_t^(s n).  This module evaluates such combinations,
checks the published expansions against the detector forms, fits
representations by exact elimination and certifies linear independence on a
finite window.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Sequence

from . import appendix
from .cyclotomic import CycloNum, cyclo_from_json, cyclo_to_json, euler_phi, root_power
from .linalg import InconsistentSystem, rank as _rank, solve as _solve
from .macmahon import macmahon_values, symmetric_macmahon_values
from .qseries import QSeries
from .quasimodular import DetectorParams, build_f, build_g


@dataclass(frozen=True)
class Term:
    j: int
    vector: tuple[int, ...]
    s: int
    c: CycloNum

    def to_json(self) -> dict:
        return {"j": self.j, "vector": list(self.vector), "s": self.s, "c": cyclo_to_json(self.c)}


@dataclass(frozen=True)
class LinearCombination:
    t: int
    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        for term in self.terms:
            if term.c.t != self.t:
                raise ValueError(f"coefficient conductor {term.c.t} != {self.t}")
            if not 0 <= term.s < self.t:
                raise ValueError(f"twist index {term.s} outside [0, {self.t})")
            if term.j < 0:
                raise ValueError("D-power must be non-negative")
            if not term.vector or any(v < 0 for v in term.vector):
                raise ValueError(f"bad exponent vector {term.vector}")

    @classmethod
    def single(cls, vector: Sequence[int], c=1, j: int = 0, s: int = 0, t: int = 1) -> "LinearCombination":
        coeff = c if isinstance(c, CycloNum) else CycloNum.rational(t, c)
        return cls(t, (Term(j, tuple(vector), s, coeff),))

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if self.t != other.t:
            raise ValueError(f"conductor mismatch: {self.t} vs {other.t}")
        return LinearCombination(self.t, self.terms + other.terms)

    def scale(self, c) -> "LinearCombination":
        return LinearCombination(self.t, tuple(Term(x.j, x.vector, x.s, x.c * c) for x in self.terms))

    def to_json(self) -> list[dict]:
        return [term.to_json() for term in self.terms]

    @classmethod
    def from_json(cls, items: Iterable[dict], t: int | None = None) -> "LinearCombination":
        terms = []
        for item in items:
            c = cyclo_from_json(item.get("c", "1"))
            terms.append(Term(int(item.get("j", 0)), tuple(int(v) for v in item["vector"]), int(item.get("s", 0)), c))
        if t is None:
            t = max((term.c.t for term in terms), default=1)
        # bare rational coefficients arrive with t = 1 and are embedded
        terms = [x if x.c.t == t else Term(x.j, x.vector, x.s, CycloNum.rational(t, x.c.to_rational()))
                 for x in terms]
        return cls(t, tuple(terms))


def _orbit_size(vector: tuple[int, ...]) -> int:
    return factorial(len(vector)) // prod(factorial(m) for m in Counter(vector).values())


def _grouped_values(terms: Sequence[Term], order: int) -> list[tuple[int, int, CycloNum, tuple[int, ...]]]:
    """(j, s, c, values) per term, merging complete permutation orbits into one symmetric DP."""
    groups: dict[tuple, list[Term]] = {}
    for term in terms:
        key = (term.j, term.s, term.c, tuple(sorted(term.vector)))
        groups.setdefault(key, []).append(term)
    out = []
    for (j, s, c, multiset), members in groups.items():
        vecs = {m.vector for m in members}
        if len(members) > 1 and len(vecs) == len(members) == _orbit_size(multiset):
            out.append((j, s, c, symmetric_macmahon_values(multiset, order)))
        else:
            out.extend((j, s, c, macmahon_values(m.vector, order)) for m in members)
    return out


def evaluate_combination(comb: LinearCombination, order: int) -> QSeries:
    """q-expansion to ``order``; rational series when t = 1, else over Q(zeta_t)."""
    t = comb.t
    phi = euler_phi(t)
    # acc[s][p][n]: rational coordinate p of the zeta^(s n)-weighted part
    acc = [[[Fraction(0)] * (order + 1) for _ in range(phi)] for _ in range(t)]
    for j, s, c, values in _grouped_values(comb.terms, order):
        for p, cp in enumerate(c.coeffs):
            if not cp:
                continue
            row = acc[s][p]
            for n in range(1, order + 1):
                if values[n]:
                    row[n] += cp * n**j * values[n]
    if t == 1:
        return QSeries(tuple(acc[0][0]), None)
    out = []
    for n in range(order + 1):
        total = CycloNum.zero(t)
        for s in range(t):
            part = CycloNum(t, tuple(acc[s][p][n] for p in range(phi)))
            if not part.is_zero():
                total = total + root_power(t, s * n) * part
        out.append(total)
    return QSeries(tuple(out), t)


# -- the published expansions ----------------------------------------------

def gstar_combination() -> LinearCombination:
    terms = []
    for coeff, vectors in appendix.GSTAR:
        c = CycloNum.rational(1, int(coeff))
        terms.extend(Term(0, v, 0, c) for v in vectors)
    return LinearCombination(1, tuple(terms))


def fstar_combination() -> LinearCombination:
    """Normalize w^(n-1) = w^2 * w^n and w^(2n-2) = w * w^(2n) into twist terms."""
    t = 3
    w = root_power(t, 1)
    w2 = root_power(t, 2)
    terms = []
    for vector, mult, alpha, beta in appendix.FSTAR:
        terms.append(Term(0, vector, 0, CycloNum.rational(t, mult * alpha)))
        if beta:
            terms.append(Term(0, vector, 1, w2 * (mult * beta)))
            terms.append(Term(0, vector, 2, w * (mult * beta)))
    return LinearCombination(t, tuple(terms))


def fstar_printed_value(n: int) -> CycloNum:
    """f*(n) straight from the printed shape, without twist normalization."""
    total = CycloNum.zero(3)
    for vector, mult, alpha, beta in appendix.FSTAR:
        factor = CycloNum.rational(3, alpha) + (root_power(3, n - 1) + root_power(3, 2 * n - 2)) * beta
        total = total + factor * (mult * macmahon_values(vector, n)[n])
    return total


@dataclass
class AppendixReport:
    which: str
    max_n: int
    scale: object = None
    value_at_one: object = None
    target_at_one: object = None
    zero_set: list[int] = field(default_factory=list)
    mismatches: list[int] = field(default_factory=list)
    first_mismatch: dict | None = None

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _compare(which: str, candidate: QSeries, target: QSeries, max_n: int, require_unit_scale: bool) -> AppendixReport:
    report = AppendixReport(which, max_n)
    report.value_at_one = candidate[1] if max_n >= 1 else None
    report.target_at_one = target[1] if max_n >= 1 else None
    scale = Fraction(1)
    if not require_unit_scale:
        for n in range(2, max_n + 1):
            if target[n] != 0:
                scale = candidate[n] / _as_rational(target[n])
                break
    report.scale = scale
    for n in range(2, max_n + 1):
        if candidate[n] == 0:
            report.zero_set.append(n)
        expected = target[n] * scale
        if candidate[n] != expected:
            report.mismatches.append(n)
            if report.first_mismatch is None:
                report.first_mismatch = {"n": n, "expected": expected, "actual": candidate[n]}
    return report


def _as_rational(x) -> Fraction:
    return x.to_rational() if isinstance(x, CycloNum) else Fraction(x)


def verify_gstar(max_n: int, require_unit_scale: bool = False) -> AppendixReport:
    """Compare the printed g* with g_{1,3} on 2 <= n <= max_n.

    By default g* is compared up to one overall rational factor, fixed by the
    first n >= 2 where g_{1,3} is nonzero; ``require_unit_scale`` demands
    literal equality instead.  n = 1 is reported, never compared.
    """
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    candidate = evaluate_combination(gstar_combination(), max_n)
    target = build_g(DetectorParams(*appendix.GSTAR_FORM), max_n)
    return _compare("gstar", candidate, target, max_n, require_unit_scale)


def verify_fstar(max_n: int, require_unit_scale: bool = False) -> AppendixReport:
    """Compare the printed f* with f_{1,3}^{1,3} over Q(w) on 2 <= n <= max_n."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    candidate = evaluate_combination(fstar_combination(), max_n)
    target = build_f(DetectorParams(*appendix.FSTAR_FORM), max_n).embed(3)
    return _compare("fstar", candidate, target, max_n, require_unit_scale)


# -- fitting ---------------------------------------------------------------

@dataclass
class FitResult:
    coefficients: list
    nullspace_dim: int
    fit_k: int
    verify_k: int
    verify_mismatches: list[int] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.verify_mismatches

    def combination(self, basis: Sequence[LinearCombination]) -> LinearCombination:
        t = basis[0].t
        total = LinearCombination(t)
        for c, atom in zip(self.coefficients, basis):
            if c != 0:
                total = total + atom.scale(c)
        return total


def _coords(x, t: int) -> tuple[Fraction, ...]:
    if isinstance(x, CycloNum):
        return x.coeffs
    return CycloNum.rational(t, x).coeffs


def _common_conductor(basis: Sequence[LinearCombination], target: QSeries) -> int:
    ts = {atom.t for atom in basis}
    if len(ts) > 1:
        raise ValueError(f"basis atoms have mixed conductors {sorted(ts)}")
    t = ts.pop() if ts else 1
    if target.ring is not None and target.ring != t:
        raise ValueError(f"target ring {target.ring} does not match basis conductor {t}")
    return t


def fit_expansion(
    target: QSeries,
    basis: Sequence[LinearCombination],
    fit_k: int | None = None,
    verify_k: int | None = None,
) -> FitResult:
    """Solve target(n) = sum_i c_i atom_i(n) exactly for 1 <= n <= fit_k, then test (fit_k, verify_k].

    Coefficients live in Q(zeta_t); the system is solved over Q after writing
    every unknown and every equation in the power basis.  The nullspace
    dimension is reported over Q(zeta_t).  Raises InconsistentSystem when no
    exact solution exists on the fit window.
    """
    if not basis:
        raise ValueError("empty basis")
    t = _common_conductor(basis, target)
    phi = euler_phi(t)
    fit_k = len(basis) + 10 if fit_k is None else fit_k
    verify_k = 2 * fit_k if verify_k is None else verify_k
    if verify_k < fit_k or target.order < verify_k:
        raise ValueError(f"target order {target.order} must cover the verify window {verify_k}")

    atoms = [evaluate_combination(atom, verify_k) for atom in basis]
    zeta_powers = [root_power(t, p) for p in range(phi)]
    A, b = [], []
    for n in range(1, fit_k + 1):
        # column (i, p) holds the coordinates of zeta^p * atom_i(n)
        columns = []
        for series in atoms:
            value = series[n]
            for zp in zeta_powers:
                columns.append(_coords(value * zp if t > 1 else value, t))
        rhs = _coords(target[n], t)
        for q in range(phi):
            A.append([col[q] for col in columns])
            b.append(rhs[q])
    x, nullity = _solve(A, b)
    coefficients = []
    for i in range(len(basis)):
        coords = tuple(x[i * phi:(i + 1) * phi])
        coefficients.append(coords[0] if t == 1 else CycloNum(t, coords))

    result = FitResult(coefficients, nullity // phi, fit_k, verify_k)
    fitted = evaluate_combination(result.combination(basis), verify_k) if any(c != 0 for c in coefficients) else None
    for n in range(1, verify_k + 1):
        got = fitted[n] if fitted is not None else 0
        want = target[n]
        if t > 1 and not isinstance(want, CycloNum):
            want = CycloNum.rational(t, want)
        if got != want and n > fit_k:
            result.verify_mismatches.append(n)
        elif got != want:
            raise AssertionError(f"solver returned a solution that misses n={n}")
    return result


def independence_rank(forms: Sequence[QSeries], window: int) -> int:
    """Exact rank of the forms' coefficients on 1 <= n <= window.

    Over Q(zeta_t) the rank is computed after restriction of scalars (each form
    contributes its zeta-multiples), then divided by phi(t).
    """
    if not forms:
        return 0
    rings = {f.ring for f in forms}
    if len(rings) > 1:
        raise ValueError(f"forms live in different rings: {rings}")
    for f in forms:
        if f.order < window:
            raise ValueError(f"form of order {f.order} does not cover window {window}")
    ring = rings.pop()
    if ring is None or euler_phi(ring) == 1:
        rows = [[_as_rational(f[n]) for n in range(1, window + 1)] for f in forms]
        return _rank(rows)
    phi = euler_phi(ring)
    rows = []
    for f in forms:
        for p in range(phi):
            zp = root_power(ring, p)
            rows.append([x for n in range(1, window + 1) for x in (f[n] * zp).coeffs])
    return _rank(rows) // phi


# -- basis builders --------------------------------------------------------

def _partitions(m: int, largest: int | None = None):
    largest = m if largest is None else largest
    if m == 0:
        yield ()
        return
    for x in range(min(m, largest), 0, -1):
        for rest in _partitions(m - x, x):
            yield (x,) + rest


def appendix_basis(which: str, grouped: bool = False) -> list[LinearCombination]:
    """Atoms U_a (j = 0, untwisted, coefficient 1) on the vectors printed in g* or f*."""
    if which == "gstar":
        groups = [vectors for _, vectors in appendix.GSTAR]
    elif which == "fstar":
        groups = [(v,) for v, *_ in appendix.FSTAR]
    else:
        raise ValueError(f"unknown stored expansion {which!r}")
    if not grouped:
        groups = [(v,) for g in groups for v in g]
    return [LinearCombination(1, tuple(Term(0, v, 0, CycloNum.one(1)) for v in g)) for g in groups]


def odd_symmetric_basis(max_weight: int, t: int = 1) -> list[LinearCombination]:
    """Symmetrized U_a over all odd-entry vectors with |a| + len(a) <= max_weight.

    Each atom sums U_a over one permutation orbit; with t > 1 every orbit is
    repeated for each twist s = 0..t-1.
    """
    atoms = []
    for half in range(1, max_weight // 2 + 1):
        for part in _partitions(half):
            multiset = tuple(2 * x - 1 for x in part)
            orbit = sorted(set(itertools.permutations(multiset)))
            for s in range(t):
                one = CycloNum.one(t)
                atoms.append(LinearCombination(t, tuple(Term(0, v, s, one) for v in orbit)))
    return atoms


__all__ = [
    "AppendixReport", "FitResult", "InconsistentSystem", "LinearCombination", "Term",
    "appendix_basis", "evaluate_combination", "fit_expansion", "fstar_combination",
    "fstar_printed_value", "gstar_combination", "independence_rank", "odd_symmetric_basis",
    "verify_fstar", "verify_gstar",
]
