"""Integer lattices: Smith normal form, indices, saturation."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .errors import MalformedInputError
from .linalg import Q, dot, solve_affine


@dataclass(frozen=True)
class LatticeBasis:
    """Integer span of ``generators`` (not necessarily independent)."""

    generators: tuple

    def __post_init__(self):
        gens = []
        for g in self.generators:
            row = []
            for x in g:
                q = Q(x)
                if q.denominator != 1:
                    raise MalformedInputError(f"non-integral generator {list(g)}")
                row.append(int(q))
            gens.append(tuple(row))
        object.__setattr__(self, "generators", tuple(gens))


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Sequence[Sequence[int]]):
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` diagonal, ``U, V`` unimodular.

    Diagonal entries are nonnegative and each divides the next.
    """
    A = [list(map(int, r)) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for r in A:
            r[dst] += f * r[src]
        for r in V:
            r[dst] += f * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the rest of the matrix
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return A, U, V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    if not M:
        return []
    D, _, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]


def lattice_index(L1: LatticeBasis, L2: LatticeBasis, ambient: int):
    """Index of ``L1 + L2`` in ``Z^ambient``; ``None`` when the rank is deficient."""
    gens = list(L1.generators) + list(L2.generators)
    if any(len(g) != ambient for g in gens):
        raise MalformedInputError("generator length differs from ambient dimension")
    return sublattice_index(gens, ambient)


def sublattice_index(gens: Sequence[Sequence[int]], ambient: int):
    if not gens:
        return None
    f = invariant_factors(gens)
    if len(f) < ambient:
        return None
    out = 1
    for x in f:
        out *= x
    return out


def _integral_rows(vectors):
    rows = []
    for v in vectors:
        den = 1
        for x in v:
            den = lcm(den, int(Q(x).denominator))
        rows.append([int(Q(x) * den) for x in v])
    return rows


def saturated_basis(vectors: Sequence[Sequence], n: int) -> list[tuple[int, ...]]:
    """Z-basis of ``span(vectors) ∩ Z^n``."""
    rows = [r for r in _integral_rows(vectors) if any(r)]
    if not rows:
        return []
    D, U, V = smith_normal_form(rows)
    k = sum(1 for i in range(min(len(D), n)) if D[i][i])
    # rows = U^-1 D V^-1, so the rational row space is spanned by the first k
    # rows of V^-1, which extend to a Z-basis of Z^n
    Vinv = _unimodular_inverse(V)
    return [tuple(Vinv[i]) for i in range(k)]


def _unimodular_inverse(V):
    n = len(V)
    inv = []
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x, _ = solve_affine(V, e, n)
        cols.append([int(c) for c in x])
    for i in range(n):
        inv.append([cols[j][i] for j in range(n)])
    return inv


def lattice_coordinates(basis: Sequence[Sequence[int]], point: Sequence) -> tuple[int, ...]:
    """Integer coefficients of ``point`` in a lattice basis (``point`` must lie in it)."""
    n = len(point)
    k = len(basis)
    cols = [[basis[j][i] for j in range(k)] for i in range(n)]
    sol = solve_affine(cols, list(point), k)
    if sol is None or sol[1]:
        raise MalformedInputError("point is not in the span of the basis")
    coeffs = sol[0]
    if any(Q(c).denominator != 1 for c in coeffs):
        raise MalformedInputError("point is not in the lattice")
    return tuple(int(c) for c in coeffs)


def quotient_generator(big: Sequence[Sequence[int]], small: Sequence[Sequence],
                       toward: Sequence) -> tuple[int, ...]:
    """Primitive generator of ``big / small`` (rank one quotient) on the side of ``toward``.

    ``big`` is a Z-basis of a saturated lattice, ``small`` spans a saturated
    sublattice of corank one, and ``toward`` is a rational vector in
    ``span(big)`` outside ``span(small)``.
    """
    n = len(toward)
    # a functional vanishing on small, positive on toward, inside span(big)
    from .linalg import nullspace

    normals = nullspace(list(small), n) if small else None
    phi = None
    if normals:
        for cand in normals:
            if dot(cand, toward) != 0:
                phi = cand
                break
    else:
        phi = tuple(Q(x) for x in toward)
    if phi is None:
        raise MalformedInputError("direction lies in the sublattice span")
    if dot(phi, toward) < 0:
        phi = tuple(-x for x in phi)
    vals = [dot(phi, b) for b in big]
    den = 1
    for v in vals:
        den = lcm(den, int(Q(v).denominator))
    ints = [int(v * den) for v in vals]
    # extended gcd combination hitting the positive generator of phi(big)
    g, coeffs = _xgcd_many(ints)
    u = [0] * n
    for c, b in zip(coeffs, big):
        if c:
            u = [ui + c * bi for ui, bi in zip(u, b)]
    return tuple(u)


def _xgcd_many(values):
    g = 0
    coeffs = [0] * len(values)
    for i, a in enumerate(values):
        if a == 0:
            continue
        if g == 0:
            g = abs(a)
            coeffs = [0] * len(values)
            coeffs[i] = 1 if a > 0 else -1
            continue
        d, x, y = _xgcd(g, a)
        coeffs = [c * x for c in coeffs]
        coeffs[i] += y
        g = d
    return g, coeffs


def _xgcd(a, b):
    """``(d, x, y)`` with ``a*x + b*y == d == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lattice_length(a: Sequence[int], b: Sequence[int]) -> int:
    g = 0
    for x, y in zip(a, b):
        g = gcd(g, int(x) - int(y))
    return g
