"""Lattice mixed volumes and the support conditions for generic prime ideals."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from gmpy2 import mpq

from .errors import MalformedInputError
from .hull import vertices, volume
from .lattice import lattice_coordinates, saturated_basis
from .linalg import rank


def _int_points(support) -> list[tuple[int, ...]]:
    pts = []
    for p in support:
        q = [mpq(x) for x in p]
        if any(x.denominator != 1 for x in q):
            raise MalformedInputError(f"non-integral point {list(p)}")
        pts.append(tuple(int(x) for x in q))
    return pts


def _minkowski(a, b):
    return sorted({tuple(x + y for x, y in zip(p, q)) for p in a for q in b})


def mixed_volume(polytopes: Sequence[Sequence[Sequence[int]]]) -> int:
    """Normalized mixed volume; ``n`` unit simplices give 1.

    Inclusion-exclusion over all nonempty subfamilies, each Minkowski sum
    built from vertices only and measured by an exact triangulation.
    """
    n = len(polytopes)
    if n == 0:
        raise MalformedInputError("need at least one polytope")
    verts = []
    for P in polytopes:
        pts = _int_points(P)
        if not pts:
            raise MalformedInputError("empty support")
        if any(len(p) != n for p in pts):
            raise MalformedInputError(
                f"mixed volume needs {n} polytopes in dimension {n}")
        verts.append(vertices(pts))
    total = mpq(0)
    for size in range(1, n + 1):
        sign = -1 if (n - size) % 2 else 1
        for S in combinations(range(n), size):
            acc = verts[S[0]]
            for i in S[1:]:
                acc = vertices(_minkowski(acc, verts[i]))
            total += sign * volume(acc)
    if total.denominator != 1:  # pragma: no cover - integrality is a theorem
        raise ArithmeticError(f"mixed volume {total} is not an integer")
    return int(total)


def _normalized(support):
    pts = _int_points(support)
    base = pts[0]
    return [tuple(x - y for x, y in zip(p, base)) for p in pts]


def span_dim(supports) -> int:
    rows = [p for A in supports for p in _normalized(A) if any(p)]
    return rank(rows) if rows else 0


def sublattice_mixed_volume(supports) -> int:
    """Mixed volume of ``k`` supports whose translates span a rank-``k`` lattice,
    measured in that lattice."""
    normalized = [_normalized(A) for A in supports]
    n = len(normalized[0][0])
    k = len(supports)
    basis = saturated_basis([p for A in normalized for p in A if any(p)], n)
    if len(basis) != k:
        raise MalformedInputError("supports do not span a lattice of the right rank")
    coords = [[lattice_coordinates(basis, p) for p in A] for A in normalized]
    return mixed_volume(coords)


def yu_conditions(supports: Sequence[Sequence[Sequence[int]]], n: int):
    """``(satisfied, witness)`` for the generic-primality conditions on supports.

    Every nonempty ``J`` needs ``dim span(A_J) > |J|``, or equality together
    with ``MV(conv A_j : j in J) = 1``. Each support is translated to contain
    the origin first. Subsets are tried from the largest down, then in
    lexicographic order; the first failing one is returned (1-based, sorted).
    """
    k = len(supports)
    if k > n:
        raise MalformedInputError(f"{k} supports exceed the dimension {n}")
    for A in supports:
        if any(len(p) != n for p in A):
            raise MalformedInputError("support point has the wrong length")
    for size in range(k, 0, -1):
        for J in combinations(range(k), size):
            sub = [supports[j] for j in J]
            d = span_dim(sub)
            if d > size:
                continue
            if d == size and sublattice_mixed_volume(sub) == 1:
                continue
            return False, tuple(j + 1 for j in J)
    return True, None
