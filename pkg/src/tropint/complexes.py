"""Weighted polyhedral complexes and set-level operations on their supports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import MalformedInputError, NotPureError
from .lattice import quotient_generator, saturated_basis
from .linalg import ZERO, Q, nullspace, rank, sub, vec
from .polyhedron import Polyhedron, intersect, lp_feasible

if TYPE_CHECKING:
    from .surfaces import TropicalHypersurface


@dataclass(frozen=True)
class WeightedComplex:
    """Pure ``pure_dim``-dimensional cells with positive integer weights."""

    ambient_dim: int
    pure_dim: int
    cells: tuple = ()

    def __post_init__(self):
        cells = tuple((P, int(w)) for P, w in self.cells)
        for P, w in cells:
            if P.ambient_dim != self.ambient_dim:
                raise MalformedInputError("cell lives in a different ambient space")
            if w <= 0:
                raise MalformedInputError("weights must be positive")
        object.__setattr__(self, "cells", cells)

    @property
    def is_empty(self) -> bool:
        return not self.cells

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.pure_dim

    def check_pure(self) -> None:
        for P, _ in self.cells:
            if P.dim != self.pure_dim:
                raise NotPureError(f"cell of dimension {P.dim} in a pure "
                                   f"{self.pure_dim}-dimensional complex")

    def total_weight(self) -> int:
        return sum(w for _, w in self.cells)

    def contains_point(self, x: Sequence) -> bool:
        return any(P.contains_point(x) for P, _ in self.cells)


def _dedupe(polys):
    seen = {}
    for P in polys:
        key = (tuple(sorted(P.equalities)), tuple(sorted(P.inequalities)))
        seen.setdefault(key, P)
    return list(seen.values())


def support_intersection(surfaces: Sequence["TropicalHypersurface"]) -> list[Polyhedron]:
    """Cover of the intersection of the supports by products of maximal cells."""
    if not surfaces:
        raise MalformedInputError("need at least one hypersurface")
    n = surfaces[0].ambient_dim
    if any(s.ambient_dim != n for s in surfaces):
        raise MalformedInputError("hypersurfaces live in different ambient spaces")
    current = [c.polyhedron for c in surfaces[0].cells]
    for s in surfaces[1:]:
        nxt = []
        for P in current:
            for c in s.cells:
                R = intersect(P, c.polyhedron)
                if lp_feasible(R):
                    nxt.append(R)
        current = nxt
        if not current:
            break
    return _dedupe(current)


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class ComponentPartition:
    """``groups[i]`` are indices into ``cells`` of one connected component."""

    cells: tuple
    groups: tuple

    def __len__(self) -> int:
        return len(self.groups)

    def component_cells(self, i: int) -> list:
        return [self.cells[j] for j in self.groups[i]]

    def component_of(self, j: int) -> int:
        return next(i for i, g in enumerate(self.groups) if j in g)


def _bounding_box(P: Polyhedron):
    n = P.ambient_dim
    box = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        hi = P.maximize(e)
        lo = P.minimize(e)
        box.append((lo.value if lo.status == "optimal" else None,
                    hi.value if hi.status == "optimal" else None))
    return box


def _boxes_meet(a, b) -> bool:
    for (alo, ahi), (blo, bhi) in zip(a, b):
        if ahi is not None and blo is not None and ahi < blo:
            return False
        if bhi is not None and alo is not None and bhi < alo:
            return False
    return True


def connected_components(cells: Sequence[Polyhedron]) -> ComponentPartition:
    """Components of the union of closed cells, via pairwise intersection tests.

    Bounding boxes prune pairs that cannot meet before any LP is run.
    """
    cells = list(cells)
    order = sorted(range(len(cells)),
                   key=lambda i: (cells[i].equalities, cells[i].inequalities))
    boxes = {i: _bounding_box(cells[i]) for i in order}
    uf = UnionFind(len(cells))
    for a_pos, i in enumerate(order):
        for j in order[a_pos + 1:]:
            if uf.find(i) == uf.find(j):
                continue
            if _boxes_meet(boxes[i], boxes[j]) and lp_feasible(intersect(cells[i], cells[j])):
                uf.union(i, j)
    groups = {}
    for i in range(len(cells)):
        groups.setdefault(uf.find(i), []).append(i)
    ordered = sorted(tuple(g) for g in groups.values())
    return ComponentPartition(tuple(cells), tuple(ordered))


def _lattice(P: Polyhedron) -> list:
    return saturated_basis(P.direction_space, P.ambient_dim)


def codim_one_faces(S: WeightedComplex) -> list[Polyhedron]:
    """Distinct (dim - 1)-dimensional pairwise intersections of maximal cells."""
    faces = {}
    cells = [P for P, _ in S.cells]
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            tau = intersect(cells[i], cells[j])
            if tau.dim == S.pure_dim - 1:
                faces.setdefault(tau.canonical_key, tau)
    return [faces[k] for k in sorted(faces)]


def is_balanced(S: WeightedComplex):
    """``(balanced, violations)`` where violations lists offending faces.

    At each codimension-one face shared by at least two maximal cells, the
    weighted primitive generators pointing into the cells must sum into the
    face's direction space.
    """
    S.check_pure()
    if S.pure_dim <= 0:
        return True, []
    n = S.ambient_dim
    violations = []
    for tau in codim_one_faces(S):
        w = tau.relative_interior_point
        tau_lat = _lattice(tau)
        total = [0] * n
        count = 0
        for P, weight in S.cells:
            if not P.contains_point(w):
                continue
            count += 1
            toward = sub(P.relative_interior_point, w)
            u = quotient_generator(_lattice(P), tau_lat, toward)
            total = [t + weight * x for t, x in zip(total, u)]
        if count < 2:
            continue
        if any(total) and rank(list(tau.direction_space) + [tuple(map(Q, total))]) \
                != len(tau.direction_space):
            violations.append((tau, tuple(total)))
    return not violations, violations


def project_to_complement(S: WeightedComplex, L_directions) -> list[Polyhedron]:
    """Images of the cells under ``x -> <u, x>`` where ``u`` spans ``L^perp``.

    Returned as polyhedra in R^1 (points, segments, rays or the whole line).
    """
    gens = [vec(g) for g in getattr(L_directions, "generators", L_directions)]
    n = S.ambient_dim
    perp = nullspace(gens, n) if gens else []
    if len(perp) != 1:
        raise MalformedInputError("orthogonal complement is not one-dimensional")
    (u,) = perp
    out = []
    for P, _ in S.cells:
        hi = P.maximize(u)
        lo = P.minimize(u)
        ineqs = []
        if hi.status == "optimal":
            ineqs.append(((-1,), -hi.value))
        if lo.status == "optimal":
            ineqs.append(((1,), lo.value))
        out.append(Polyhedron(1, (), tuple(ineqs)))
    return out


def classify_projection(images: Sequence[Polyhedron]) -> str:
    """``"points"`` (finitely many), ``"line"`` (all of R) or ``"other"``."""
    if all(I.dim == 0 for I in images):
        return "points"
    intervals = []
    for I in images:
        lo = I.minimize((1,))
        hi = I.maximize((1,))
        intervals.append((lo.value if lo.status == "optimal" else None,
                          hi.value if hi.status == "optimal" else None))
    if not any(lo is None for lo, _ in intervals) or not any(hi is None for _, hi in intervals):
        return "other"
    # sweep from -inf: the union must stay connected to reach +inf
    reach = None
    for lo, hi in sorted(intervals, key=lambda t: (t[0] is not None, t[0] or ZERO)):
        if lo is None:
            reach = hi if reach is None or hi is None else max(reach, hi)
            if hi is None:
                return "line"
            continue
        if reach is None or lo > reach:
            return "other"
        if hi is None:
            return "line"
        reach = max(reach, hi)
    return "other"
