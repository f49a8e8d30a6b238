"""Tropical polynomials, regular subdivisions and tropical hypersurfaces.

Min-plus throughout: ``f(w) = min_a (c_a + <a, w>)``. There is no max mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Mapping, Sequence

from .complexes import WeightedComplex
from .errors import MalformedInputError
from .hull import PlacingTriangulation, affine_chart, affine_dim, faces_of_dim
from .lattice import lattice_length
from .linalg import Q, dot, vec
from .polyhedron import Polyhedron

Exponent = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class TropicalPolynomial:
    """Finite support in Z^n with one rational coefficient per exponent."""

    support: tuple
    coeffs: tuple

    def __post_init__(self):
        support = []
        for a in self.support:
            row = []
            for x in a:
                q = Q(x)
                if q.denominator != 1:
                    raise MalformedInputError(f"exponent {list(a)} is not integral")
                row.append(int(q))
            support.append(tuple(row))
        coeffs = [Q(c) for c in self.coeffs]
        if not support:
            raise MalformedInputError("empty support")
        if len(coeffs) != len(support):
            raise MalformedInputError("one coefficient per support point is required")
        n = len(support[0])
        if n < 1 or any(len(a) != n for a in support):
            raise MalformedInputError("exponent vectors have inconsistent lengths")
        if len(set(support)) != len(support):
            raise MalformedInputError("support points must be distinct")
        order = sorted(range(len(support)), key=lambda i: support[i])
        object.__setattr__(self, "support", tuple(support[i] for i in order))
        object.__setattr__(self, "coeffs", tuple(coeffs[i] for i in order))

    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], object]) -> "TropicalPolynomial":
        items = list(terms.items())
        return cls(tuple(tuple(a) for a, _ in items), tuple(c for _, c in items))

    @property
    def n(self) -> int:
        return len(self.support[0])

    def coefficient(self, a: Sequence[int]):
        return self.coeffs[self.support.index(tuple(a))]

    def __str__(self) -> str:
        terms = []
        for a, c in zip(self.support, self.coeffs):
            mono = "+".join(f"{e}*x{i + 1}" if e != 1 else f"x{i + 1}"
                            for i, e in enumerate(a) if e)
            terms.append(f"{c}" + (f"+{mono}" if mono else ""))
        return "min(" + ", ".join(terms) + ")"


def eval_trop(f: TropicalPolynomial, w: Sequence) -> tuple:
    """``(value, argmin)`` of ``f`` at ``w``; argmin is a sorted tuple of exponents."""
    w = vec(w)
    if len(w) != f.n:
        raise MalformedInputError("evaluation point has the wrong length")
    vals = [c + dot(a, w) for a, c in zip(f.support, f.coeffs)]
    m = min(vals)
    return m, tuple(a for a, v in zip(f.support, vals) if v == m)


@dataclass(frozen=True)
class DualSubdivision:
    """Maximal cells of the regular subdivision induced by lifting ``a -> c_a``.

    Each cell lists every support point lying on the corresponding lower face
    (marked points included), so a cell is exactly an argmin set.
    """

    cells: tuple

    def __len__(self) -> int:
        return len(self.cells)


def _lifted(f: TropicalPolynomial):
    """Integer lifted points in an injective chart of the affine hull of the support."""
    pts = list(f.support)
    chart, _ = affine_chart(pts)
    den = 1
    for c in f.coeffs:
        den = lcm(den, int(c.denominator))
    return [tuple(p) + (int(c * den),) for p, c in zip(chart, f.coeffs)]


def _lower_facets(f: TropicalPolynomial) -> list[tuple[int, ...]]:
    """Index sets of the lower faces of maximal dimension."""
    k = len(f.support)
    if k == 1:
        return [(0,)]
    lifted = _lifted(f)
    m = len(lifted[0]) - 1
    if affine_dim(lifted) == m:
        return [tuple(range(k))]
    tri = PlacingTriangulation(lifted)
    return sorted(idx for normal, _, idx in tri.facets() if normal[-1] > 0)


def regular_subdivision(f: TropicalPolynomial) -> DualSubdivision:
    cells = [tuple(f.support[i] for i in idx) for idx in _lower_facets(f)]
    return DualSubdivision(tuple(sorted(cells)))


@dataclass(frozen=True)
class HypersurfaceCell:
    polyhedron: Polyhedron
    weight: int
    dual_edge: tuple  # (alpha, beta) with alpha < beta


@dataclass(frozen=True)
class TropicalHypersurface:
    ambient_dim: int
    cells: tuple
    source: TropicalPolynomial

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def as_complex(self) -> WeightedComplex:
        return WeightedComplex(self.ambient_dim, self.ambient_dim - 1,
                               tuple((c.polyhedron, c.weight) for c in self.cells))

    def contains_point(self, w: Sequence) -> bool:
        return len(eval_trop(self.source, w)[1]) >= 2


def edge_cell(f: TropicalPolynomial, alpha: Exponent, beta: Exponent,
              others=None) -> Polyhedron:
    """``{w : c_alpha + <alpha,w> = c_beta + <beta,w> <= c_g + <g,w>}``.

    ``others`` restricts the inequalities to the given exponents; by default
    every support point contributes one.
    """
    ca, cb = f.coefficient(alpha), f.coefficient(beta)
    normal = tuple(a - b for a, b in zip(alpha, beta))
    eqs = ((normal, cb - ca),)
    ineqs = []
    for g, cg in zip(f.support, f.coeffs):
        if g in (alpha, beta) or (others is not None and g not in others):
            continue
        ineqs.append((tuple(x - a for x, a in zip(g, alpha)), ca - cg))
    return Polyhedron(f.n, eqs, tuple(ineqs))


def hypersurface(f: TropicalPolynomial) -> TropicalHypersurface:
    """Tropical hypersurface of ``f``, one maximal cell per edge of the subdivision.

    The inequalities of a cell come only from points of the lower faces that
    contain its dual edge; by convexity of the lifting those are enough.
    """
    k = len(f.support)
    if k == 1:
        return TropicalHypersurface(f.n, (), f)
    lifted = _lifted(f)
    star = {}
    for facet in _lower_facets(f):
        for edge in faces_of_dim(lifted, list(facet), 1):
            star.setdefault(edge, set()).update(facet)
    cells = []
    for edge, nbrs in star.items():
        ends = sorted(f.support[i] for i in _edge_ends(lifted, edge))
        alpha, beta = ends
        on_edge = {f.support[i] for i in edge}
        others = {f.support[i] for i in nbrs} - on_edge
        cells.append(HypersurfaceCell(edge_cell(f, alpha, beta, others),
                                      lattice_length(alpha, beta), (alpha, beta)))
    cells.sort(key=lambda c: c.dual_edge)
    return TropicalHypersurface(f.n, tuple(cells), f)


def _edge_ends(points, edge):
    pts = [points[i] for i in edge]
    chart, _ = affine_chart(pts)
    lo = min(range(len(pts)), key=lambda i: chart[i])
    hi = max(range(len(pts)), key=lambda i: chart[i])
    return edge[lo], edge[hi]


def tropical_linear_form(coeffs: Sequence, n: int | None = None) -> TropicalPolynomial:
    """``min(c0, c1 + x1, ..., cn + xn)``."""
    n = len(coeffs) - 1 if n is None else n
    support = [tuple([0] * n)] + [tuple(int(i == j) for i in range(n)) for j in range(n)]
    return TropicalPolynomial(tuple(support), tuple(coeffs))
