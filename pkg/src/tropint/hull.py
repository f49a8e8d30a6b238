"""Convex hulls of small integer point sets via placing triangulations.

Points are inserted one at a time; a new point is coned to every boundary
simplex it sees strictly. Only integer orientation determinants are used, so
degenerate (coplanar, collinear) inputs are handled exactly. Cost is
O(points * boundary simplices) determinants, fine for a few dozen points in
dimension at most four.
"""

from __future__ import annotations

from math import factorial, gcd
from typing import Sequence

from gmpy2 import mpq

from .linalg import nullspace, primitive, rref


def det(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def _orient(simplex_pts, x) -> int:
    base = simplex_pts[0]
    rows = [[a - b for a, b in zip(p, base)] for p in simplex_pts[1:]]
    rows.append([a - b for a, b in zip(x, base)])
    return det(rows)


def affine_basis_indices(points: Sequence[Sequence[int]]) -> list[int]:
    """Greedy indices of a maximal affinely independent subset."""
    if not points:
        return []
    chosen = [0]
    diffs = []
    base = points[0]
    for i in range(1, len(points)):
        d = [a - b for a, b in zip(points[i], base)]
        if not any(d):
            continue
        trial = diffs + [d]
        if len(rref(trial)[1]) == len(trial):
            diffs = trial
            chosen.append(i)
    return chosen


def affine_dim(points: Sequence[Sequence[int]]) -> int:
    return len(affine_basis_indices(points)) - 1 if points else -1


def affine_chart(points: Sequence[Sequence[int]]) -> tuple[list[tuple[int, ...]], list[int]]:
    """Project onto coordinates that are injective on the affine hull.

    Returns the projected points and the kept coordinate indices. Convexity
    and incidence are preserved; volumes change by a constant factor.
    """
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    diffs = [d for d in diffs if any(d)]
    cols = rref(diffs)[1] if diffs else []
    return [tuple(p[c] for c in cols) for p in points], cols


class PlacingTriangulation:
    """Triangulation of a full-dimensional integer point set in Z^d."""

    def __init__(self, points: Sequence[Sequence[int]]):
        self.points = [tuple(int(x) for x in p) for p in points]
        self.d = len(self.points[0])
        start = affine_basis_indices(self.points)
        if len(start) != self.d + 1:
            raise ValueError("point set is not full-dimensional")
        self.simplices = [tuple(start)]
        # boundary facet (sorted index tuple) -> index of the opposite vertex
        self.boundary = {}
        for q in start:
            face = tuple(sorted(set(start) - {q}))
            self.boundary[face] = q
        placed = set(start)
        for i in range(len(self.points)):
            if i not in placed:
                self._place(i)
                placed.add(i)

    def _place(self, i: int) -> None:
        p = self.points[i]
        pts = self.points
        visible = []
        for face, opp in self.boundary.items():
            fp = [pts[j] for j in face]
            s = _orient(fp, p)
            if s == 0:
                continue
            t = _orient(fp, pts[opp])
            if (s > 0) != (t > 0):
                visible.append(face)
        if not visible:
            return
        created = {}
        for face in visible:
            del self.boundary[face]
            self.simplices.append(tuple(sorted(face + (i,))))
            for q in face:
                ridge = tuple(sorted(set(face) - {q} | {i}))
                if ridge in created:
                    del created[ridge]
                else:
                    created[ridge] = q
        for ridge, q in created.items():
            if ridge in self.boundary:
                del self.boundary[ridge]
            else:
                self.boundary[ridge] = q

    def volume(self) -> mpq:
        total = 0
        for s in self.simplices:
            base = self.points[s[0]]
            total += abs(det([[a - b for a, b in zip(self.points[j], base)] for j in s[1:]]))
        return mpq(total, factorial(self.d))

    def facets(self):
        """Facet hyperplanes ``(inner_normal, offset, point_indices)``.

        ``<inner_normal, x> >= offset`` holds for every point, with equality
        exactly on the listed indices.
        """
        seen = {}
        for face, opp in self.boundary.items():
            base = self.points[face[0]]
            rows = [[a - b for a, b in zip(self.points[j], base)] for j in face[1:]]
            (nv,) = nullspace(rows, self.d) if rows else [(1,)]
            normal = primitive(nv)
            off = sum(a * b for a, b in zip(normal, base))
            if sum(a * b for a, b in zip(normal, self.points[opp])) < off:
                normal = tuple(-a for a in normal)
                off = -off
            key = (normal, off)
            if key not in seen:
                seen[key] = tuple(j for j, x in enumerate(self.points)
                                  if sum(a * b for a, b in zip(normal, x)) == off)
        return [(nrm, off, idx) for (nrm, off), idx in sorted(seen.items())]


def volume(points: Sequence[Sequence[int]]) -> mpq:
    """Euclidean volume of ``conv(points)`` in its ambient Z^d (zero if flat)."""
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        return mpq(0)
    d = len(pts[0])
    if affine_dim(pts) < d:
        return mpq(0)
    return PlacingTriangulation(pts).volume()


def vertices(points: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Vertices of ``conv(points)``, sorted."""
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if len(pts) <= 1:
        return pts
    chart, _ = affine_chart(pts)
    m = len(chart[0])
    if m == 1:
        return [pts[min(range(len(pts)), key=lambda i: chart[i])],
                pts[max(range(len(pts)), key=lambda i: chart[i])]]
    facets = PlacingTriangulation(chart).facets()
    out = []
    for j in range(len(pts)):
        normals = [f[0] for f in facets if j in f[2]]
        if normals and len(rref(normals)[1]) == m:
            out.append(pts[j])
    return out


def faces_of_dim(points: Sequence[Sequence[int]], indices: Sequence[int], k: int):
    """All ``k``-dimensional faces of ``conv(points[indices])`` as index tuples."""
    sub = [points[i] for i in indices]
    m = affine_dim(sub)
    if m < k:
        return []
    if m == k:
        return [tuple(sorted(indices))]
    chart, _ = affine_chart(sub)
    if m == 1:
        return [(indices[min(range(len(sub)), key=lambda i: chart[i])],),
                (indices[max(range(len(sub)), key=lambda i: chart[i])],)] if k == 0 else []
    out = set()
    for _, _, idx in PlacingTriangulation(chart).facets():
        for f in faces_of_dim(points, [indices[i] for i in idx], k):
            out.add(f)
    return sorted(out)


def lattice_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g
