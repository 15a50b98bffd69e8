"""MacMahonesque partition functions M_a(n).

M_a(n) sums m_1^v_1 * ... * m_a^v_a over all ways to write
n = m_1 s_1 + ... + m_a s_a with 0 < s_1 < ... < s_a and every m_i >= 1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .cyclotomic import CycloNum, root_power
from .qseries import QSeries


@dataclass(frozen=True)
class ExponentVector:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise ValueError("exponent vector must have length >= 1")
        if any(v < 0 for v in self.entries):
            raise ValueError(f"exponents must be non-negative: {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> "ExponentVector":
        return cls(tuple(int(v) for v in entries))

    @classmethod
    def parse(cls, text: str) -> "ExponentVector":
        return cls(tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()))

    @property
    def degree(self) -> int:
        return sum(self.entries)

    @property
    def length(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def _entries(vec) -> tuple[int, ...]:
    if isinstance(vec, ExponentVector):
        return vec.entries
    return ExponentVector(tuple(vec)).entries


def macmahon_bruteforce(vec, n: int) -> int:
    """Enumerate partitions of n with exactly len(vec) distinct part sizes."""
    entries = _entries(vec)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = len(entries)
    total = 0

    def descend(i: int, smallest: int, remaining: int, weight: int) -> None:
        nonlocal total
        if i == a:
            if remaining == 0:
                total += weight
            return
        left = a - i
        s = smallest
        # the remaining `left` sizes are at least s, s+1, ..., s+left-1
        while left * s + left * (left - 1) // 2 <= remaining:
            m = 1
            while m * s <= remaining:
                descend(i + 1, s + 1, remaining - m * s, weight * m ** entries[i])
                m += 1
            s += 1

    descend(0, 1, n, 1)
    return total


@lru_cache(maxsize=512)
def macmahon_values(entries: tuple[int, ...], order: int) -> tuple[int, ...]:
    """Integer coefficients M_a(0..order) via the ascending-part-size DP."""
    entries = _entries(entries)
    a = len(entries)
    N = order
    partial = [np.zeros(N + 1, dtype=object) for _ in range(a + 1)]
    partial[0][0] = 1
    for s in range(1, N + 1):
        # descending j keeps s_1 < ... < s_a strict
        for j in range(min(a, _max_parts_below(s, N)), 0, -1):
            prev = partial[j - 1]
            if not prev[: N + 1 - s].any():
                continue
            v = entries[j - 1]
            cur = partial[j]
            for m in range(1, N // s + 1):
                cur[m * s:] += prev[: N + 1 - m * s] * m**v
    return tuple(int(x) for x in partial[a])


def _max_parts_below(s: int, N: int) -> int:
    # with largest size s at most j parts fit when 1+..+(j-1)+s <= N
    j = 1
    while (j * (j - 1)) // 2 + s <= N:
        j += 1
    return j - 1


def macmahon_series(vec, order: int) -> QSeries:
    return QSeries.from_list(macmahon_values(_entries(vec), order))


def twisted_macmahon(vec, t: int, s: int, order: int) -> QSeries:
    """U_a(zeta_t^s q): the q^n coefficient is M_a(n) * zeta_t^(s n)."""
    if not 0 <= s < t:
        raise ValueError(f"twist index must satisfy 0 <= s < t, got s={s}, t={t}")
    values = macmahon_values(_entries(vec), order)
    return QSeries(tuple(root_power(t, s * n) * v for n, v in enumerate(values)), t)


def symmetric_macmahon_values(multiset: Iterable[int], order: int) -> tuple[int, ...]:
    """Sum of M_a(n) over all distinct orderings a of ``multiset``.

    Equivalent to summing :func:`macmahon_values` over the permutation orbit,
    but the DP tracks only how many of each exponent are still unassigned.
    """
    counts = Counter(multiset)
    exps = sorted(counts)
    N = order
    full = tuple(counts[e] for e in exps)
    empty = tuple(0 for _ in exps)
    start = np.zeros(N + 1, dtype=object)
    start[0] = 1
    states = {full: start}
    for s in range(1, N + 1):
        new = {st: arr.copy() for st, arr in states.items()}
        for st, arr in states.items():
            if not arr[: N + 1 - s].any():
                continue
            for i, e in enumerate(exps):
                if not st[i]:
                    continue
                nxt = st[:i] + (st[i] - 1,) + st[i + 1:]
                target = new.setdefault(nxt, np.zeros(N + 1, dtype=object))
                for m in range(1, N // s + 1):
                    target[m * s:] += arr[: N + 1 - m * s] * m**e
        states = new
    return tuple(int(x) for x in states.get(empty, np.zeros(N + 1, dtype=object)))
