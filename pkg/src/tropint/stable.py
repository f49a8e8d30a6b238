"""Stable intersections of weighted complexes by generic displacement.

``S1 ^ S2`` consists of the cells ``s1 ∩ s2`` of transverse pairs that still
meet after displacing ``s2`` by ``eps * v`` for all small ``eps > 0``. The
multiplicity of a cell sums ``m(s1) m(s2) [Z^n : L(s1) + L(s2)]`` over the
surviving pairs producing it. Genericity of ``v`` is certified, not assumed:
no non-transverse pair may survive the displacement.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from . import lp
from .complexes import WeightedComplex
from .errors import GenericityError, MalformedInputError
from .lattice import saturated_basis, sublattice_index
from .linalg import ZERO, Q, Vector, dot, rank, vec
from .polyhedron import Polyhedron, intersect, lp_feasible

log = logging.getLogger(__name__)

DENOMINATOR = 1009
MAX_RETRIES = 16


@dataclass(frozen=True)
class PerturbationVector:
    v: Vector
    seed: int


def draw_perturbation(n: int, seed: int, attempt: int = 0) -> PerturbationVector:
    """Pseudo-random ``k / DENOMINATOR`` coordinates, deterministic in ``(seed, attempt)``."""
    rng = random.Random(f"{seed}:{attempt}")
    coords = []
    for _ in range(n):
        k = 0
        while k == 0:
            k = rng.randint(-DENOMINATOR, DENOMINATOR)
        coords.append(Q(k) / DENOMINATOR)
    return PerturbationVector(tuple(coords), seed)


@dataclass(frozen=True)
class StableCell:
    cell: Polyhedron
    multiplicity: int
    contributors: tuple = field(default=())  # ((i, j), local multiplicity)


def _lifted(s1: Polyhedron, s2: Polyhedron, v: Vector) -> Polyhedron:
    """``{(x, eps) : x in s1, x - eps v in s2, eps >= 0}``."""
    n = s1.ambient_dim
    eqs = [(a + (ZERO,), b) for a, b in s1.equalities]
    eqs += [(a + (-dot(a, v),), b) for a, b in s2.equalities]
    ineqs = [(a + (ZERO,), b) for a, b in s1.inequalities]
    ineqs += [(a + (-dot(a, v),), b) for a, b in s2.inequalities]
    ineqs.append((tuple([ZERO] * n) + (Q(1),), ZERO))
    return Polyhedron(n + 1, tuple(eqs), tuple(ineqs))


def epsilon_feasible(s1: Polyhedron, s2: Polyhedron, v: Sequence) -> bool:
    """``s1 ∩ (s2 + eps v)`` is nonempty for every sufficiently small ``eps > 0``."""
    if s1.ambient_dim != s2.ambient_dim:
        raise MalformedInputError("ambient dimensions differ")
    v = vec(v)
    n = s1.ambient_dim
    lifted = _lifted(s1, s2, v)
    e = [0] * n + [1]
    hi = lifted.maximize(e)
    if hi.status == lp.INFEASIBLE:
        return False
    if hi.status == lp.OPTIMAL and hi.value <= 0:
        return False
    lo = lifted.minimize(e)
    return lo.status == lp.OPTIMAL and lo.value == 0


def _directions(S: WeightedComplex):
    return [list(P.direction_space) for P, _ in S.cells]


def verify_genericity(S1: WeightedComplex, S2: WeightedComplex, v: Sequence) -> bool:
    """No pair with ``dim(s1 + s2) < n`` survives the displacement by ``v``."""
    v = vec(v)
    n = S1.ambient_dim
    d1, d2 = _directions(S1), _directions(S2)
    for i, (P1, _) in enumerate(S1.cells):
        for j, (P2, _) in enumerate(S2.cells):
            if rank(d1[i] + d2[j]) == n:
                continue
            if lp_feasible(intersect(P1, P2)) and epsilon_feasible(P1, P2, v):
                return False
    return True


def stable_cells(S1: WeightedComplex, S2: WeightedComplex,
                 v: PerturbationVector) -> list[StableCell]:
    """Merged stable cells with their contributing pairs.

    Raises :class:`GenericityError` when a non-transverse pair survives.
    """
    n = S1.ambient_dim
    if S2.ambient_dim != n:
        raise MalformedInputError("ambient dimensions differ")
    target = S1.pure_dim + S2.pure_dim - n
    if target < 0 or S1.is_empty or S2.is_empty:
        return []
    vv = vec(v.v)
    d1, d2 = _directions(S1), _directions(S2)
    lat1 = [saturated_basis(d, n) for d in d1]
    lat2 = [saturated_basis(d, n) for d in d2]
    survivors = []
    for i, (P1, m1) in enumerate(S1.cells):
        for j, (P2, m2) in enumerate(S2.cells):
            tau = intersect(P1, P2)
            transverse = rank(d1[i] + d2[j]) == n
            if not lp_feasible(tau):
                continue
            if not transverse:
                if epsilon_feasible(P1, P2, vv):
                    raise GenericityError(
                        f"perturbation {list(map(str, vv))} (seed {v.seed}) is not generic")
                continue
            if tau.dim != target or not epsilon_feasible(P1, P2, vv):
                continue
            local = m1 * m2 * sublattice_index(lat1[i] + lat2[j], n)
            survivors.append((tau, (i, j), local))
    return _merge(survivors)


def _merge(survivors) -> list[StableCell]:
    """Merge equal cells, keep inclusion-maximal ones, and credit each kept cell
    with every surviving pair whose intersection holds its interior point."""
    groups = {}
    for tau, _, _ in survivors:
        groups.setdefault(tau.canonical_key, tau)
    keys = sorted(groups)
    interior = {k: groups[k].relative_interior_point for k in keys}
    maximal = []
    for k in keys:
        inner = any(h != k and groups[h].contains_point(interior[k])
                    and groups[h].contains(groups[k]) for h in keys)
        if not inner:
            maximal.append(k)
    out = []
    for k in maximal:
        p = interior[k]
        contrib = tuple((pair, local) for tau, pair, local in survivors
                        if tau.contains_point(p))
        out.append(StableCell(groups[k], sum(x for _, x in contrib), contrib))
    return out


def stable_intersection(S1: WeightedComplex, S2: WeightedComplex,
                        v: PerturbationVector | None = None, seed: int = 0) -> WeightedComplex:
    """``S1 ^ S2``. Without ``v`` a perturbation is drawn from ``seed`` and
    redrawn until it verifies (at most ``MAX_RETRIES`` times)."""
    target = S1.pure_dim + S2.pure_dim - S1.ambient_dim
    if v is not None:
        cells = stable_cells(S1, S2, v)
    else:
        cells = _with_retries(S1, S2, seed)
    return WeightedComplex(S1.ambient_dim, target,
                           tuple((c.cell, c.multiplicity) for c in cells))


def _with_retries(S1, S2, seed):
    for attempt in range(MAX_RETRIES):
        v = draw_perturbation(S1.ambient_dim, seed, attempt)
        try:
            return stable_cells(S1, S2, v)
        except GenericityError:
            log.debug("perturbation seed %s attempt %s rejected", seed, attempt)
    raise GenericityError(f"no generic perturbation after {MAX_RETRIES} draws (seed {seed})")


def stable_intersection_many(surfaces: Sequence, seeds: Sequence[int] = (0,)) -> WeightedComplex:
    """Left fold of :func:`stable_intersection`; step ``i`` uses ``seeds[i % len(seeds)]``."""
    if not surfaces:
        raise MalformedInputError("need at least one complex")
    complexes = [s.as_complex() if hasattr(s, "as_complex") else s for s in surfaces]
    seeds = list(seeds) or [0]
    acc = complexes[0]
    for i, S in enumerate(complexes[1:]):
        acc = stable_intersection(acc, S, seed=seeds[i % len(seeds)])
    return acc


def total_multiplicity(S: WeightedComplex) -> int:
    return S.total_weight()
