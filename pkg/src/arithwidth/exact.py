"""Exact integer and rational arithmetic helpers.

Rationals are :class:`fractions.Fraction` (always stored in lowest terms with a
positive denominator). Integer vectors are tuples of ``int`` and integer
matrices are lists of such tuples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

IntVector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]
IntMatrix = list[IntVector]


class PreconditionError(ValueError):
    """An operation was called on input violating its precondition."""


def gcd_vector(v: Iterable[int]) -> int:
    """Return the gcd of the absolute values of ``v`` (0 for the zero vector)."""
    return reduce(gcd, v, 0)


def primitive(v: Sequence[int]) -> tuple[IntVector, int]:
    """Split ``v`` as ``mu * c0`` with ``c0`` primitive and ``mu > 0``.

    >>> primitive((2, 4))
    ((1, 2), 2)
    >>> primitive((0, -3))
    ((0, -1), 3)
    """
    g = gcd_vector(v)
    if g == 0:
        raise PreconditionError("primitive: zero vector has no primitive part")
    return tuple(x // g for x in v), g


def canonical_direction(v: Sequence[int]) -> IntVector:
    """Primitive representative of ``v`` with first nonzero entry positive."""
    c0, _ = primitive(v)
    for x in c0:
        if x:
            return c0 if x > 0 else tuple(-y for y in c0)
    raise AssertionError("unreachable")


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def lcm_denominators(values: Iterable[Fraction]) -> int:
    return reduce(lcm, (Fraction(x).denominator for x in values), 1)


def scale_to_integers(v: Sequence[Fraction]) -> IntVector:
    """Multiply a rational vector by the lcm of its denominators."""
    q = lcm_denominators(v)
    return tuple(int(Fraction(x) * q) for x in v)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int. Floats are rejected."""
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"rationals must be given as 'p/q' strings, got {s!r}")
    text = s.strip()
    if not text or any(ch in text for ch in ".eE"):
        raise ValueError(f"not an exact rational: {s!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {s!r}") from exc


# -- integer linear algebra -------------------------------------------------

def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hermite_normal_form(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H = U A``, ``U`` unimodular, and ``H`` in row
    echelon form: positive pivots, entries above each pivot reduced into
    ``[0, pivot)``, zero rows at the bottom.

    >>> hermite_normal_form([(1, 1), (1, -1)])[0]
    [(1, 1), (0, 2)]
    """
    if not A:
        raise PreconditionError("hermite_normal_form: empty matrix")
    m, n = len(A), len(A[0])
    H = [list(map(int, row)) for row in A]
    if any(len(row) != n for row in H):
        raise PreconditionError("hermite_normal_form: ragged matrix")
    U = _identity(m)

    def sub(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k
        if q:
            H[i] = [a - q * b for a, b in zip(H[i], H[k])]
            U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][j]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][j]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, m):
                if H[i][j]:
                    sub(i, r, H[i][j] // H[r][j])
                    clean = clean and H[i][j] == 0
            if clean:
                break
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            sub(i, r, H[i][j] // H[r][j])
        r += 1
    return [tuple(row) for row in H], [tuple(row) for row in U]


def integer_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Basis (as rows) of the lattice ``{x in Z^n : A x = 0}``.

    ``ncols`` is required when ``A`` has no rows.
    """
    n = len(A[0]) if A else ncols
    if n is None:
        raise PreconditionError("integer_kernel: ncols needed for an empty matrix")
    if not A:
        return [tuple(row) for row in _identity(n)]
    At = [tuple(A[i][j] for i in range(len(A))) for j in range(n)]
    H, U = hermite_normal_form(At)
    return [U[i] for i in range(n) if not any(H[i])]


def solve_integer_system(A: Sequence[Sequence[int]], b: Sequence[int],
                         ncols: int | None = None) -> tuple[IntVector | None, IntMatrix]:
    """Integer solutions of ``A x = b``.

    Returns ``(x0, K)``: a particular solution (``None`` if there is none) and
    a basis ``K`` of the integer kernel, so all solutions are ``x0 + Z K``.
    """
    n = len(A[0]) if A else ncols
    if n is None:
        raise PreconditionError("solve_integer_system: ncols needed for an empty matrix")
    if not A:
        return (0,) * n, integer_kernel(A, n)
    m = len(A)
    At = [tuple(A[i][j] for i in range(m)) for j in range(n)]
    H, U = hermite_normal_form(At)
    # A U^T = H^T; solve H^T y = b by forward substitution over pivot columns
    y = [0] * n
    for i, row in enumerate(H):
        piv = next((j for j, a in enumerate(row) if a), None)
        if piv is None:
            break
        acc = b[piv] - sum(y[k] * H[k][piv] for k in range(i))
        q, rem = divmod(acc, row[piv])
        if rem:
            return None, [U[i] for i in range(n) if not any(H[i])]
        y[i] = q
    for j in range(m):
        if sum(y[i] * H[i][j] for i in range(n)) != b[j]:
            return None, [U[i] for i in range(n) if not any(H[i])]
    x0 = tuple(sum(y[i] * U[i][k] for i in range(n)) for k in range(n))
    return x0, [U[i] for i in range(n) if not any(H[i])]


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return 0
    rank, ncols = 0, len(M[0])
    for j in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][j]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][j]:
                f = M[i][j] / M[rank][j]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def kernel_generator(rows: Sequence[Sequence[int]]) -> IntVector:
    """Generator of the kernel of ``d-1`` independent integer rows in ``Z^d``.

    Uses signed maximal minors (the generalized cross product); the result is
    primitive but not sign-normalized. Zero if the rows are dependent.
    """
    d = len(rows) + 1
    out = []
    for j in range(d):
        minor = [[r[k] for k in range(d) if k != j] for r in rows]
        out.append((-1) ** j * determinant(minor))
    g = gcd_vector(out)
    return tuple(x // g for x in out) if g else tuple(out)
