"""Exact H-representation polyhedra.

A :class:`Polyhedron` is ``{x : <a,x> = b for equalities, <a,x> >= b for
inequalities}``. Everything is decided by exact rational LP; the first time a
polyhedron is queried its explicit equalities are eliminated and the result is
cached, so repeated queries on the same object are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import lp
from .errors import EmptyPolyhedronError, MalformedInputError
from .linalg import (
    ONE,
    ZERO,
    Q,
    Vector,
    canonical_subspace,
    dot,
    nullspace,
    primitive,
    project_out,
    rank,
    rref,
    solve_affine,
    solve_square,
    vec,
)

Constraint = tuple  # (normal: Vector, offset: mpq)


def _constraint(n: int, c) -> Constraint:
    normal, offset = c
    normal = vec(normal)
    if len(normal) != n:
        raise MalformedInputError(
            f"constraint normal has length {len(normal)}, ambient dimension is {n}")
    return normal, Q(offset)


@dataclass(frozen=True)
class _Hull:
    """Affine hull ``x0 + span(basis)`` with the remaining inequalities in
    the coordinates of ``basis``; every one of them is strictly satisfiable."""

    x0: Vector
    basis: list
    rows: list          # [(g, h)] meaning g.z >= h
    interior: tuple     # z-coordinates of a relative interior point

    @property
    def dim(self) -> int:
        return len(self.basis)

    def lift(self, z) -> Vector:
        x = list(self.x0)
        for c, b in zip(z, self.basis):
            if c:
                x = [xi + c * bi for xi, bi in zip(x, b)]
        return tuple(x)

    def lift_direction(self, z) -> Vector:
        x = [ZERO] * len(self.x0)
        for c, b in zip(z, self.basis):
            if c:
                x = [xi + c * bi for xi, bi in zip(x, b)]
        return tuple(x)


@dataclass(frozen=True)
class Polyhedron:
    ambient_dim: int
    equalities: tuple = ()
    inequalities: tuple = ()

    def __post_init__(self):
        n = self.ambient_dim
        if n < 1:
            raise MalformedInputError("ambient dimension must be at least 1")
        object.__setattr__(self, "equalities",
                           tuple(_constraint(n, c) for c in self.equalities))
        object.__setattr__(self, "inequalities",
                           tuple(_constraint(n, c) for c in self.inequalities))

    # -- constructors -----------------------------------------------------

    @classmethod
    def whole(cls, n: int) -> "Polyhedron":
        return cls(n)

    @classmethod
    def point(cls, x: Sequence) -> "Polyhedron":
        x = vec(x)
        n = len(x)
        eqs = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            eqs.append((e, x[i]))
        return cls(n, tuple(eqs))

    @classmethod
    def affine(cls, rows: Sequence[Sequence], v: Sequence) -> "Polyhedron":
        """The affine subspace ``Ker(A) + v``."""
        v = vec(v)
        return cls(len(v), tuple((r, dot(vec(r), v)) for r in rows))

    # -- cached analysis --------------------------------------------------

    @cached_property
    def _affine(self):
        """Explicit equalities eliminated: ``(x0, basis, rows)`` or ``None``."""
        n = self.ambient_dim
        if self.equalities:
            sol = solve_affine([a for a, _ in self.equalities],
                               [b for _, b in self.equalities], n)
            if sol is None:
                return None
            x0, basis = sol
        else:
            x0 = tuple([ZERO] * n)
            basis = [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
        rows = []
        for a, b in self.inequalities:
            g = tuple(dot(a, col) for col in basis)
            h = b - dot(a, x0)
            if any(g):
                rows.append((g, h))
            elif h > 0:
                return None
        return x0, basis, rows

    @cached_property
    def _hull(self) -> _Hull | None:
        aff = self._affine
        if aff is None:
            return None
        x0, basis, rows = aff
        while True:
            r = len(basis)
            if r == 0:
                return _Hull(x0, [], [], ())
            # maximize t subject to g.z - t >= h, t <= 1
            G = [tuple(g) + (Q(-1),) for g, _ in rows] + [tuple([ZERO] * r) + (Q(-1),)]
            H = [h for _, h in rows] + [Q(-1)]
            res = _solve(G, H, [ZERO] * r + [ONE])
            if res.value < 0:
                return None
            if res.value > 0:
                return _Hull(x0, basis, rows, res.point[:r])
            # some inequalities are implicit equalities: g.z = h on all of P
            implicit = [i for i, (g, h) in enumerate(rows)
                        if _solve([gg for gg, _ in rows], [hh for _, hh in rows],
                                  g).value == h]
            eq_rows = [rows[i][0] for i in implicit]
            eq_rhs = [rows[i][1] for i in implicit]
            sol = solve_affine(eq_rows, eq_rhs, r)
            if sol is None:  # pragma: no cover - implicit equalities are consistent
                return None
            z0, kern = sol
            x0 = _combine(x0, basis, z0)
            basis = [_combine(tuple([ZERO] * len(x0)), basis, k) for k in kern]
            new_rows = []
            for i, (g, h) in enumerate(rows):
                if i in implicit:
                    continue
                gg = tuple(dot(g, k) for k in kern)
                hh = h - dot(g, z0)
                if any(gg):
                    new_rows.append((gg, hh))
            rows = new_rows

    # -- queries ----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self._hull is None

    @property
    def dim(self) -> int:
        hull = self._hull
        return -1 if hull is None else hull.dim

    def maximize(self, c: Sequence) -> lp.LPResult:
        aff = self._affine
        if aff is None:
            return lp.LPResult(lp.INFEASIBLE)
        x0, basis, rows = aff
        c = vec(c)
        cz = [dot(c, b) for b in basis]
        res = _solve([g for g, _ in rows], [h for _, h in rows], cz)
        if res.status != lp.OPTIMAL:
            return res
        x = _combine(x0, basis, res.point)
        return lp.LPResult(lp.OPTIMAL, dot(c, x), x)

    def minimize(self, c: Sequence) -> lp.LPResult:
        res = self.maximize([-Q(x) for x in c])
        if res.status == lp.OPTIMAL:
            return lp.LPResult(lp.OPTIMAL, -res.value, res.point)
        return res

    def contains_point(self, x: Sequence) -> bool:
        x = vec(x)
        return (all(dot(a, x) == b for a, b in self.equalities)
                and all(dot(a, x) >= b for a, b in self.inequalities))

    def contains(self, other: "Polyhedron") -> bool:
        """``other`` is a subset of ``self``."""
        if other.is_empty:
            return True
        for a, b in self.equalities:
            lo = other.minimize(a)
            hi = other.maximize(a)
            if lo.status != lp.OPTIMAL or hi.status != lp.OPTIMAL:
                return False
            if lo.value != b or hi.value != b:
                return False
        for a, b in self.inequalities:
            lo = other.minimize(a)
            if lo.status != lp.OPTIMAL or lo.value < b:
                return False
        return True

    @cached_property
    def direction_space(self) -> list:
        """Basis of the linear space parallel to the affine hull."""
        hull = self._hull
        if hull is None:
            raise EmptyPolyhedronError("empty polyhedron has no direction space")
        return list(hull.basis)

    @cached_property
    def relative_interior_point(self) -> Vector:
        hull = self._hull
        if hull is None:
            raise EmptyPolyhedronError("empty polyhedron has no interior point")
        return hull.lift(hull.interior)

    @cached_property
    def affine_hull_key(self) -> tuple:
        """Canonical RREF of the equation system of the affine hull."""
        hull = self._hull
        n = self.ambient_dim
        normals = nullspace(hull.basis, n) if hull.basis else [
            tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
        if not normals:
            return ()
        aug = [tuple(a) + (dot(a, hull.x0),) for a in normals]
        red, _ = rref(aug, n + 1)
        return tuple(red)

    @cached_property
    def vrep(self):
        """``(vertices, rays, lineality)`` in ambient coordinates.

        Enumerates all bases of the pointed part; fine for the handful of
        constraints cells carry here.
        """
        hull = self._hull
        if hull is None:
            raise EmptyPolyhedronError("empty polyhedron has no V-representation")
        d = hull.dim
        G = [g for g, _ in hull.rows]
        H = [h for _, h in hull.rows]
        lin_z = nullspace(G, d) if G else [
            tuple(ONE if i == j else ZERO for i in range(d)) for j in range(d)]
        comp = nullspace(lin_z, d) if lin_z else [
            tuple(ONE if i == j else ZERO for i in range(d)) for j in range(d)]
        k = len(comp)
        GM = [tuple(dot(g, c) for c in comp) for g in G]

        def to_z(w):
            z = [ZERO] * d
            for c, b in zip(w, comp):
                if c:
                    z = [zi + c * bi for zi, bi in zip(z, b)]
            return z

        verts = set()
        if k == 0:
            verts.add(hull.x0)
        else:
            for idx in combinations(range(len(GM)), k):
                w = solve_square([GM[i] for i in idx], [H[i] for i in idx])
                if w is None:
                    continue
                if all(dot(g, w) >= h for g, h in zip(GM, H)):
                    verts.add(hull.lift(to_z(w)))
        rays = set()
        if k >= 1:
            for idx in combinations(range(len(GM)), k - 1):
                sub_rows = [GM[i] for i in idx]
                if sub_rows and rank(sub_rows) != k - 1:
                    continue
                ker = nullspace(sub_rows, k)
                if len(ker) != 1:
                    continue
                u = ker[0]
                for s in (1, -1):
                    us = tuple(s * x for x in u)
                    if all(dot(g, us) >= 0 for g in GM):
                        rays.add(primitive(hull.lift_direction(to_z(us))))
        lineality = [hull.lift_direction(z) for z in lin_z]
        return sorted(verts), sorted(rays), lineality

    @cached_property
    def canonical_key(self) -> tuple:
        """Hashable key; two polyhedra have equal keys iff they are equal sets."""
        if self.is_empty:
            return (-1,)
        n = self.ambient_dim
        verts, rays, lin = self.vrep
        lin_key = canonical_subspace(lin, n)
        lin_basis = list(lin_key)
        cverts = sorted({project_out(v, lin_basis) for v in verts})
        crays = sorted({primitive(project_out(r, lin_basis)) for r in rays})
        return (self.dim, self.affine_hull_key, lin_key, tuple(cverts), tuple(crays))

    def __repr__(self) -> str:
        def fmt(cs, op):
            return [f"{list(map(str, a))}{op}{b}" for a, b in cs]
        parts = fmt(self.equalities, "=") + fmt(self.inequalities, ">=")
        return f"Polyhedron(n={self.ambient_dim}, {', '.join(parts) or 'R^n'})"


def _combine(x0, basis, coeffs) -> Vector:
    x = list(x0)
    for c, b in zip(coeffs, basis):
        if c:
            x = [xi + c * bi for xi, bi in zip(x, b)]
    return tuple(x)


def _solve(G, H, c) -> lp.LPResult:
    """LP dispatch with closed forms in dimension zero and one."""
    r = len(c)
    if r == 0:
        if all(h <= 0 for h in H):
            return lp.LPResult(lp.OPTIMAL, ZERO, ())
        return lp.LPResult(lp.INFEASIBLE)
    if r == 1:
        lo = hi = None
        for (g,), h in zip(G, H):
            if g > 0:
                b = h / g
                if lo is None or b > lo:
                    lo = b
            elif g < 0:
                b = h / g
                if hi is None or b < hi:
                    hi = b
            elif h > 0:
                return lp.LPResult(lp.INFEASIBLE)
        if lo is not None and hi is not None and lo > hi:
            return lp.LPResult(lp.INFEASIBLE)
        (cc,) = c
        if cc > 0:
            if hi is None:
                return lp.LPResult(lp.UNBOUNDED)
            y = hi
        elif cc < 0:
            if lo is None:
                return lp.LPResult(lp.UNBOUNDED)
            y = lo
        else:
            y = lo if lo is not None else (hi if hi is not None else ZERO)
        return lp.LPResult(lp.OPTIMAL, cc * y, (y,))
    return lp.maximize(G, H, c)


# -- module-level operations ----------------------------------------------


def lp_feasible(P: Polyhedron) -> bool:
    aff = P._affine
    if aff is None:
        return False
    x0, basis, rows = aff
    return _solve([g for g, _ in rows], [h for _, h in rows],
                  [ZERO] * len(basis)).status != lp.INFEASIBLE


def dim(P: Polyhedron) -> int:
    return P.dim


def intersect(P: Polyhedron, R: Polyhedron) -> Polyhedron:
    if P.ambient_dim != R.ambient_dim:
        raise MalformedInputError(
            f"ambient dimensions differ: {P.ambient_dim} vs {R.ambient_dim}")
    return Polyhedron(P.ambient_dim, P.equalities + R.equalities,
                      P.inequalities + R.inequalities)


def intersect_all(polys: Iterable[Polyhedron]) -> Polyhedron:
    polys = list(polys)
    n = polys[0].ambient_dim
    if any(p.ambient_dim != n for p in polys):
        raise MalformedInputError("ambient dimensions differ")
    return Polyhedron(n, sum((p.equalities for p in polys), ()),
                      sum((p.inequalities for p in polys), ()))


def translate(P: Polyhedron, v: Sequence) -> Polyhedron:
    v = vec(v)
    if len(v) != P.ambient_dim:
        raise MalformedInputError("translation vector has the wrong length")
    return Polyhedron(P.ambient_dim,
                      tuple((a, b + dot(a, v)) for a, b in P.equalities),
                      tuple((a, b + dot(a, v)) for a, b in P.inequalities))


def relative_interior_point(P: Polyhedron) -> Vector:
    return P.relative_interior_point


def minkowski_sum_dim(P: Polyhedron, R: Polyhedron) -> int:
    if P.ambient_dim != R.ambient_dim:
        raise MalformedInputError("ambient dimensions differ")
    if P.is_empty or R.is_empty:
        raise EmptyPolyhedronError("Minkowski sum with an empty polyhedron")
    # aff(P + R) = aff(P) + aff(R), whose direction space is L_P + L_R
    gens = list(P.direction_space) + list(R.direction_space)
    return rank(gens) if gens else 0


def same_set(P: Polyhedron, R: Polyhedron) -> bool:
    return P.contains(R) and R.contains(P)


def is_implicit_equality(P: Polyhedron, i: int) -> bool:
    """Inequality ``i`` of ``P`` holds with equality on all of ``P``."""
    a, b = P.inequalities[i]
    res = P.maximize(a)
    return res.status == lp.OPTIMAL and res.value == b
