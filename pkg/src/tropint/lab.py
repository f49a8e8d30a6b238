"""Mechanical checks of the seed theorem and its supporting lemmas on instances.

Every check here returns a verdict instead of raising on a mathematical
failure: a ``fail`` or ``False`` is a counterexample to a proved statement and
therefore points at a bug somewhere below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .complexes import (ComponentPartition, WeightedComplex, classify_projection,
                        connected_components, project_to_complement, support_intersection)
from .errors import MalformedInputError
from .linalg import nullspace, vec
from .polyhedron import Polyhedron, intersect, lp_feasible
from .stable import StableCell, stable_intersection, stable_intersection_many
from .surfaces import TropicalHypersurface, TropicalPolynomial, hypersurface

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"
INCONCLUSIVE = None


@dataclass(frozen=True)
class Instance:
    n: int
    polynomials: tuple
    seed: int = 0

    def __post_init__(self):
        polys = tuple(self.polynomials)
        if not polys:
            raise MalformedInputError("an instance needs at least one polynomial")
        if any(f.n != self.n for f in polys):
            raise MalformedInputError("polynomials live in different ambient spaces")
        object.__setattr__(self, "polynomials", polys)

    @property
    def k(self) -> int:
        return len(self.polynomials)

    def hypersurfaces(self) -> list[TropicalHypersurface]:
        return [hypersurface(f) for f in self.polynomials]


@dataclass(frozen=True)
class VerificationReport:
    components: ComponentPartition
    stable_points: tuple
    assignment: tuple  # component index -> stable cell index or None
    verdict: str
    diagnostics: tuple = field(default=())  # per component: shared point or None

    @property
    def witnesses(self) -> int:
        return sum(a is not None for a in self.assignment)


def _simplex_points(n: int, d: int) -> list[tuple[int, ...]]:
    return [a for a in product(range(d + 1), repeat=n) if sum(a) <= d]


def _check_params(n, k, max_degree, coeff_bound):
    if not 1 <= k <= n <= 3:
        raise MalformedInputError("need 1 <= k <= n <= 3")
    if not 1 <= max_degree <= 4:
        raise MalformedInputError("need 1 <= max_degree <= 4")
    if coeff_bound < 1:
        raise MalformedInputError("coeff_bound must be positive")


def _coefficient(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_instance(n: int, k: int, max_degree: int, coeff_bound: int = 20,
                    seed: int = 0) -> Instance:
    """``k`` polynomials on random subsets of the dilated simplex ``d * Delta``.

    The vertices ``0, d e_1, ..., d e_n`` are always kept, so every Newton
    polytope is the full simplex of degree ``d = max_degree``. Coefficients are
    ``p / q`` with ``|p| <= coeff_bound`` and ``1 <= q <= coeff_bound``.
    """
    _check_params(n, k, max_degree, coeff_bound)
    rng = random.Random(f"dense:{n}:{k}:{max_degree}:{coeff_bound}:{seed}")
    d = max_degree
    pts = _simplex_points(n, d)
    corners = {tuple([0] * n)} | {tuple(d * (i == j) for i in range(n)) for j in range(n)}
    polys = []
    for _ in range(k):
        support = [a for a in pts if a in corners or rng.random() < 0.5]
        coeffs = [_coefficient(rng, coeff_bound) for _ in support]
        polys.append(TropicalPolynomial(tuple(support), tuple(coeffs)))
    return Instance(n, tuple(polys), seed)


def random_sparse_instance(n: int, k: int, max_degree: int, coeff_bound: int = 20,
                           seed: int = 0) -> Instance:
    """Like :func:`random_instance` but with no forced vertices: supports are
    random subsets of size at least two, so Newton polytopes may be flat."""
    _check_params(n, k, max_degree, coeff_bound)
    rng = random.Random(f"sparse:{n}:{k}:{max_degree}:{coeff_bound}:{seed}")
    pts = _simplex_points(n, max_degree)
    polys = []
    for _ in range(k):
        size = rng.randint(2, min(len(pts), n + 3))
        support = sorted(rng.sample(pts, size))
        coeffs = [_coefficient(rng, coeff_bound) for _ in support]
        polys.append(TropicalPolynomial(tuple(support), tuple(coeffs)))
    return Instance(n, tuple(polys), seed)


def _stable_cells(S: WeightedComplex) -> tuple:
    return tuple(StableCell(P, w) for P, w in S.cells)


def _shared_point(a: Polyhedron, b: Polyhedron):
    meet = intersect(a, b)
    if not lp_feasible(meet):
        return None
    return meet.relative_interior_point


def check_seed_theorem(inst: Instance, seeds: Sequence[int] = (0,)) -> VerificationReport:
    """Every component of the set intersection must meet the stable intersection.

    A witness for a component is a stable cell sharing a point with one of the
    component's cells; the shared point is extracted and confirmed to lie on
    every hypersurface by direct evaluation.
    """
    surfaces = inst.hypersurfaces()
    cover = support_intersection(surfaces)
    comps = connected_components(cover)
    stable = _stable_cells(stable_intersection_many(surfaces, seeds))
    if not stable:
        return VerificationReport(comps, stable, tuple(None for _ in comps.groups),
                                  VACUOUS, tuple(None for _ in comps.groups))
    assignment, diagnostics = [], []
    for g in range(len(comps)):
        found = None
        for s, sc in enumerate(stable):
            for P in comps.component_cells(g):
                x = _shared_point(sc.cell, P)
                if x is not None and all(h.contains_point(x) for h in surfaces):
                    found = (s, x)
                    break
            if found:
                break
        assignment.append(found[0] if found else None)
        diagnostics.append(found[1] if found else None)
    verdict = PASS if all(a is not None for a in assignment) else FAIL
    return VerificationReport(comps, stable, tuple(assignment), verdict, tuple(diagnostics))


def _as_complex(S) -> WeightedComplex:
    return S.as_complex() if hasattr(S, "as_complex") else S


def affine_complex(A_rows: Sequence[Sequence], v: Sequence) -> WeightedComplex:
    """``Ker(A) + v`` as a weight-one single-cell complex."""
    L = Polyhedron.affine(A_rows, v)
    return WeightedComplex(L.ambient_dim, L.dim, ((L, 1),))


def check_translate_lemma(S, A_rows: Sequence[Sequence], v: Sequence, v_prime: Sequence,
                          seed: int = 0) -> bool:
    """Emptiness of ``L ^ S`` and ``L' ^ S`` agree for parallel ``L, L'``."""
    S = _as_complex(S)
    a = stable_intersection(affine_complex(A_rows, v), S, seed=seed).is_empty
    b = stable_intersection(affine_complex(A_rows, v_prime), S, seed=seed).is_empty
    return a == b


def projection_branch(S, normal: Sequence) -> str:
    """Which side of the projection dichotomy ``S`` falls on for hyperplanes with
    the given normal: ``"points"``, ``"line"`` or ``"other"``."""
    S = _as_complex(S)
    n = S.ambient_dim
    directions = nullspace([vec(normal)], n)
    return classify_projection(project_to_complement(S, directions))


def stable_components(S: WeightedComplex) -> list[WeightedComplex]:
    """Connected components of a complex, each keeping its cells' weights."""
    parts = connected_components([P for P, _ in S.cells])
    return [WeightedComplex(S.ambient_dim, S.pure_dim, tuple(S.cells[i] for i in g))
            for g in parts.groups]


def check_component_conspiracy(inst: Instance, extra: TropicalPolynomial,
                               seeds: Sequence[int] = (0,)):
    """All components ``G`` of the stable intersection agree on whether
    ``G ^ extra`` is empty. ``None`` when there are fewer than two components."""
    S = stable_intersection_many(inst.hypersurfaces(), seeds)
    comps = stable_components(S)
    if len(comps) < 2:
        return INCONCLUSIVE
    E = hypersurface(extra).as_complex()
    flags = {stable_intersection(G, E, seed=seeds[0]).is_empty for G in comps}
    return len(flags) == 1


@dataclass(frozen=True)
class SubsetPoint:
    subset: tuple  # 1-based indices
    cell: Polyhedron
    multiplicity: int
    on_all: bool
    component: int | None


@dataclass(frozen=True)
class SubsetReport:
    components: ComponentPartition
    points: tuple
    witnesses: tuple  # per component: tuple of witnessing subsets
    verdict: str  # "yes", "candidate" or "vacuous"
    empty_subsets: tuple = ()


def experiment_subset_seeding(inst: Instance, seeds: Sequence[int] = (0,)) -> SubsetReport:
    """Stable points of every ``n``-subset, classified against the components
    of the full intersection. A component without a witness is reported as a
    candidate for manual audit, never as a counterexample."""
    if inst.k <= inst.n:
        raise MalformedInputError("the subset experiment needs more polynomials than the dimension")
    surfaces = inst.hypersurfaces()
    comps = connected_components(support_intersection(surfaces))
    points, empty = [], []
    for J in combinations(range(inst.k), inst.n):
        S = stable_intersection_many([surfaces[j] for j in J], seeds)
        label = tuple(j + 1 for j in J)
        if S.is_empty:
            empty.append(label)
        for P, w in S.cells:
            x = P.relative_interior_point
            on_all = all(h.contains_point(x) for h in surfaces)
            comp = None
            for g in range(len(comps)):
                if any(_shared_point(P, C) is not None for C in comps.component_cells(g)):
                    comp = g
                    break
            points.append(SubsetPoint(label, P, w, on_all, comp))
    witnesses = tuple(tuple(sorted({p.subset for p in points if p.component == g}))
                      for g in range(len(comps)))
    if len(comps) == 0:
        verdict = "vacuous"
    else:
        verdict = "yes" if all(witnesses) else "candidate"
    return SubsetReport(comps, tuple(points), witnesses, verdict, tuple(empty))


@dataclass(frozen=True)
class CorpusSummary:
    reports: tuple  # (seed, VerificationReport) sorted by seed
    passed: int
    failed: int
    vacuous: int


def run_corpus(count: int, n: int, k: int, d: int, start_seed: int = 0,
               seeds: Sequence[int] = (0,), sparse: bool = False) -> CorpusSummary:
    make = random_sparse_instance if sparse else random_instance
    reports = []
    for s in range(start_seed, start_seed + count):
        reports.append((s, check_seed_theorem(make(n, k, d, seed=s), seeds)))
    verdicts = [r.verdict for _, r in reports]
    return CorpusSummary(tuple(reports), verdicts.count(PASS), verdicts.count(FAIL),
                         verdicts.count(VACUOUS))
