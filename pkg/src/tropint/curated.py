"""Hand-built instances, mostly non-transverse.

The two plane-curve figures in the literature on this problem are drawn in
the max convention. Negating every coefficient turns a max-plus curve into
the min-plus curve reflected through the origin, so the instances below are
those figures reflected by ``w -> -w``.
"""

from __future__ import annotations

from fractions import Fraction

from .lab import Instance
from .surfaces import TropicalPolynomial


def _poly(terms: dict) -> TropicalPolynomial:
    return TropicalPolynomial.from_terms({a: Fraction(c) for a, c in terms.items()})


def _negated(terms: dict) -> TropicalPolynomial:
    return _poly({a: -Fraction(c) for a, c in terms.items()})


def overlap_pair() -> Instance:
    """A conic and a degenerate curve sharing a segment and a ray; the set
    intersection has a point, a segment and a ray as components."""
    conic = _negated({(0, 0): 0, (1, 0): 0, (2, 0): -1, (0, 1): -1, (0, 2): -3, (1, 1): 0})
    other = _negated({(0, 0): 0, (2, 0): -1, (1, 1): 0})
    return Instance(2, (conic, other), seed=0)


def three_curves() -> Instance:
    """A cubic, a conic and a pair of lines with shared edges and rays."""
    cubic = _negated({(0, 0): 0, (1, 0): 0, (0, 1): 0, (2, 0): -3, (1, 1): -1,
                      (0, 2): -2, (3, 0): -8, (2, 1): -5, (1, 2): -4, (0, 3): -6})
    conic = _negated({(0, 0): 0, (1, 0): 0, (0, 1): 0, (2, 0): -5, (1, 1): -2, (0, 2): -4})
    lines = _negated({(1, 1): 0, (1, 0): 0, (0, 1): 2, (0, 0): 2})
    return Instance(2, (cubic, conic, lines), seed=0)


def identical_lines() -> Instance:
    f = _poly({(0, 0): 0, (1, 0): 0, (0, 1): 0})
    return Instance(2, (f, f), seed=0)


def lines_sharing_ray() -> Instance:
    """Vertices at the origin and at (1, 1): the diagonal ray is shared."""
    return Instance(2, (_poly({(0, 0): 0, (1, 0): 0, (0, 1): 0}),
                        _poly({(0, 0): 2, (1, 0): 1, (0, 1): 1})), seed=0)


def conic_containing_line_ray() -> Instance:
    """A line whose horizontal ray runs along a conic's bounded edge and ray."""
    conic = _poly({(0, 0): 0, (1, 0): 0, (0, 1): 0, (2, 0): 3, (1, 1): 1, (0, 2): 3})
    line = _poly({(0, 0): 0, (1, 0): 1, (0, 1): 0})
    return Instance(2, (conic, line), seed=0)


def planes_sharing_cells() -> Instance:
    """Two tropical planes in R^3 with vertices on a common wall."""
    p1 = _poly({(0, 0, 0): 0, (1, 0, 0): 0, (0, 1, 0): 0, (0, 0, 1): 0})
    p2 = _poly({(0, 0, 0): 0, (1, 0, 0): 0, (0, 1, 0): 0, (0, 0, 1): 1})
    return Instance(3, (p1, p2), seed=0)


def three_planes_degenerate() -> Instance:
    p1 = _poly({(0, 0, 0): 0, (1, 0, 0): 0, (0, 1, 0): 0, (0, 0, 1): 0})
    p2 = _poly({(0, 0, 0): 0, (1, 0, 0): 0, (0, 1, 0): 0, (0, 0, 1): 1})
    p3 = _poly({(0, 0, 0): 0, (1, 0, 0): 1, (0, 1, 0): 0, (0, 0, 1): 0})
    return Instance(3, (p1, p2, p3), seed=0)


def non_transverse() -> dict:
    return {
        "overlap_pair": overlap_pair(),
        "identical_lines": identical_lines(),
        "lines_sharing_ray": lines_sharing_ray(),
        "conic_containing_line_ray": conic_containing_line_ray(),
        "planes_sharing_cells": planes_sharing_cells(),
        "three_planes_degenerate": three_planes_degenerate(),
    }
