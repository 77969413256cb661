"""Dense-tableau two-phase simplex over the rationals with Bland's rule.

Solves ``min cost.x  s.t.  A x = b, x >= 0``. Only used on the small
convex-combination systems that come out of V-represented polytopes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(T: list[list[Fraction]], obj: list[Fraction], basis: list[int],
           r: int, j: int) -> None:
    pr = T[r]
    pv = pr[j]
    if pv != 1:
        pr = [a / pv for a in pr]
        T[r] = pr
    for i, row in enumerate(T):
        if i != r and row[j]:
            f = row[j]
            T[i] = [a - f * b for a, b in zip(row, pr)]
    if obj[j]:
        f = obj[j]
        obj[:] = [a - f * b for a, b in zip(obj, pr)]
    basis[r] = j


def _run(T, obj, basis, ncols: int) -> str:
    """Pivot until optimal; entering/leaving chosen by smallest index."""
    while True:
        j = next((k for k in range(ncols) if obj[k] < 0), None)
        if j is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(T):
            if row[j] > 0:
                ratio = row[-1] / row[j]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, obj, basis, best[1], j)


def _phase_one(A: Sequence[Sequence], b: Sequence):
    m = len(A)
    k = len(A[0]) if m else 0
    T = []
    for i in range(m):
        row = [Fraction(a) for a in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row, rhs = [-a for a in row], -rhs
        T.append(row + [Fraction(int(i == t)) for t in range(m)] + [rhs])
    basis = [k + i for i in range(m)]
    obj = [-sum((T[i][j] for i in range(m)), Fraction(0)) for j in range(k)]
    obj += [Fraction(0)] * m + [-sum((T[i][-1] for i in range(m)), Fraction(0))]
    _run(T, obj, basis, k + m)
    if obj[-1] != 0:
        return None
    # drive remaining artificials out of the basis; drop redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= k:
            j = next((c for c in range(k) if T[i][c]), None)
            if j is None:
                del T[i], basis[i]
                continue
            _pivot(T, [Fraction(0)] * (k + m + 1), basis, i, j)
        i += 1
    T = [row[:k] + row[-1:] for row in T]
    return T, basis, k


def feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    return _phase_one(A, b) is not None


def solve(A: Sequence[Sequence], b: Sequence, cost: Sequence):
    """Return ``(status, value, x)``; value and x are ``None`` unless optimal."""
    start = _phase_one(A, b)
    if start is None:
        return INFEASIBLE, None, None
    T, basis, k = start
    c = [Fraction(x) for x in cost]
    obj = c + [Fraction(0)]
    for i, j in enumerate(basis):
        if c[j]:
            f = c[j]
            obj = [a - f * r for a, r in zip(obj, T[i])]
    status = _run(T, obj, basis, k)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * k
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return OPTIMAL, -obj[-1], x
