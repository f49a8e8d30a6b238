"""Exact rational linear algebra on plain lists.

Scalars are ``gmpy2.mpq``; anything accepted by :func:`Q` (int, str, Fraction,
mpq) may be passed in. Matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

Scalar = mpq
Vector = tuple  # tuple of mpq

ZERO = mpq(0)
ONE = mpq(1)


def Q(x) -> mpq:
    """Coerce ``x`` to an exact rational. Floats are refused."""
    if isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        x = x.strip()
        if "/" in x:
            p, q = x.split("/")
            if int(q) == 0:
                raise ZeroDivisionError(f"zero denominator in {x!r}")
            return mpq(int(p), int(q))
        return mpq(int(x))
    return mpq(x)


def vec(xs: Iterable) -> Vector:
    return tuple(Q(x) for x in xs)


def dot(a: Sequence, b: Sequence):
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def sub(a: Sequence, b: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def scale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form. Returns ``(nonzero_rows, pivot_columns)``."""
    m = [list(map(Q, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        row = [x * inv for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(x) for x in m[:r]], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : M x = 0}``, one vector per free column."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_affine(rows: Sequence[Sequence], rhs: Sequence, ncols: int):
    """Solve ``M x = rhs``.

    Returns ``(particular, kernel_basis)`` or ``None`` when inconsistent.
    """
    if not rows:
        return tuple([ZERO] * ncols), nullspace([], ncols)
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    coeff_rows = [r[:ncols] for r in red]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        k = [ZERO] * ncols
        k[f] = ONE
        for row, p in zip(coeff_rows, pivots):
            k[p] = -row[f]
        basis.append(tuple(k))
    return tuple(x), basis


def solve_square(rows: Sequence[Sequence], rhs: Sequence):
    """Unique solution of a square system, or ``None`` if singular."""
    n = len(rows)
    res = solve_affine(rows, rhs, n)
    if res is None or res[1]:
        return None
    return res[0]


def orthogonal_complement(basis: Sequence[Sequence], n: int) -> list[Vector]:
    return nullspace(list(basis), n)


def project_out(x: Sequence, basis: Sequence[Sequence]) -> Vector:
    """Orthogonal projection of ``x`` onto the complement of ``span(basis)``."""
    if not basis:
        return tuple(x)
    k = len(basis)
    gram = [[dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    coef = solve_square(gram, [dot(b, x) for b in basis])
    out = list(x)
    for c, b in zip(coef, basis):
        if c:
            out = [o - c * bi for o, bi in zip(out, b)]
    return tuple(out)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, int(Q(x).denominator))
    ints = [int(Q(x) * den) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(a // g for a in ints)


def canonical_subspace(basis: Sequence[Sequence], n: int) -> tuple:
    """Hashable canonical form (RREF) of a linear subspace."""
    if not basis:
        return ()
    red, _ = rref(basis, n)
    return tuple(red)
