"""Exact linear algebra over Q by fraction-free integer elimination."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence


class InconsistentSystem(ValueError):
    """Raised when A x = b has no exact solution."""


def _integer_row(row: Sequence) -> list[int]:
    fr = [Fraction(x) for x in row]
    m = reduce(lcm, (x.denominator for x in fr), 1)
    return [int(x * m) for x in fr]


def _primitive(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def echelon(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Row echelon form with primitive integer rows, plus the pivot columns."""
    work = [_primitive(_integer_row(r)) for r in rows]
    work = [r for r in work if any(r)]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        candidates = [i for i in range(top, len(work)) if work[i][col]]
        if not candidates:
            continue
        # smallest pivot keeps the intermediate integers small
        best = min(candidates, key=lambda i: abs(work[i][col]))
        work[top], work[best] = work[best], work[top]
        prow = work[top]
        p = prow[col]
        for i in range(top + 1, len(work)):
            c = work[i][col]
            if c:
                g = gcd(p, c)
                a, b = p // g, c // g
                work[i] = _primitive([a * x - b * y for x, y in zip(work[i], prow)])
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows)[1])


def solve(A: Sequence[Sequence], b: Sequence) -> tuple[list[Fraction], int]:
    """One exact solution of A x = b (free variables set to 0) and the nullspace dimension."""
    if len(A) != len(b):
        raise ValueError("row count mismatch")
    ncols = len(A[0]) if A else 0
    ech, pivots = echelon([list(row) + [rhs] for row, rhs in zip(A, b)])
    if pivots and pivots[-1] == ncols:
        raise InconsistentSystem("no exact solution on the fit window")
    x = [Fraction(0)] * ncols
    for row, col in reversed(list(zip(ech, pivots))):
        acc = Fraction(row[ncols])
        for j in range(col + 1, ncols):
            if row[j] and x[j]:
                acc -= row[j] * x[j]
        x[col] = acc / row[col]
    return x, ncols - len(pivots)
