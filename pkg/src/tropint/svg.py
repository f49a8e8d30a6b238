"""Deterministic SVG pictures of plane tropical curves and their stable points.

Coordinates are exact rationals up to the last step, where they are rounded
to two decimals of a pixel with integer arithmetic, so identical input always
gives identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .complexes import support_intersection
from .errors import MalformedInputError
from .lab import Instance, experiment_subset_seeding
from .polyhedron import Polyhedron, intersect
from .stable import stable_intersection_many

CANVAS = 480
PALETTE = ("#2b4c8c", "#a8322d", "#e08a1e", "#3d8c40", "#7b4ea3", "#4a4a4a")


@dataclass(frozen=True)
class PlotPoint:
    coords: tuple
    on_all: bool
    label: str = ""


def _dec(q) -> str:
    """``q`` rounded half away from zero to two decimals."""
    q = mpq(q)
    sign = "-" if q < 0 else ""
    scaled = abs(q) * 100
    whole = int(scaled)
    if scaled - whole >= mpq(1, 2):
        whole += 1
    if whole == 0:
        sign = ""
    s = f"{whole // 100}.{whole % 100:02d}".rstrip("0").rstrip(".")
    return sign + s


def stable_plot_points(inst: Instance, seeds: Sequence[int] = (0,)) -> list[PlotPoint]:
    """Stable points of the whole instance (``k <= 2``) or of every pair (``k > 2``),
    each flagged by whether it lies on all curves."""
    surfaces = inst.hypersurfaces()
    if inst.k == 1:
        return []
    if inst.k <= inst.n:
        S = stable_intersection_many(surfaces, seeds)
        return [PlotPoint(P.relative_interior_point, True, "") for P, _ in S.cells]
    rep = experiment_subset_seeding(inst, seeds)
    return [PlotPoint(p.cell.relative_interior_point, p.on_all,
                      ",".join(map(str, p.subset))) for p in rep.points]


def _anchors(surfaces, points):
    pts = [p.coords for p in points]
    for h in surfaces:
        for c in h.cells:
            verts = c.polyhedron.vrep[0]
            pts.extend(verts if verts else [c.polyhedron.relative_interior_point])
    return pts


def _box(anchors):
    if not anchors:
        return mpq(-1), mpq(1), mpq(-1), mpq(1)
    xs = [mpq(p[0]) for p in anchors]
    ys = [mpq(p[1]) for p in anchors]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, mpq(1))
    # degenerate extents borrow the larger span so rays remain visible
    if x1 - x0 < span / 4:
        cx = (x0 + x1) / 2
        x0, x1 = cx - span / 2, cx + span / 2
    if y1 - y0 < span / 4:
        cy = (y0 + y1) / 2
        y0, y1 = cy - span / 2, cy + span / 2
    px, py = (x1 - x0) / 4, (y1 - y0) / 4
    return x0 - px, x1 + px, y0 - py, y1 + py


def _clip(P: Polyhedron, box):
    x0, x1, y0, y1 = box
    frame = Polyhedron(2, (), (((1, 0), x0), ((-1, 0), -x1), ((0, 1), y0), ((0, -1), -y1)))
    R = intersect(P, frame)
    if R.dim < 1:
        return None
    verts = R.vrep[0]
    if len(verts) != 2:
        return None
    return verts


def render(inst: Instance, points: Sequence[PlotPoint]) -> str:
    if inst.n != 2:
        raise MalformedInputError("plots need n = 2")
    surfaces = inst.hypersurfaces()
    box = _box(_anchors(surfaces, points))
    x0, x1, y0, y1 = box
    scale = mpq(CANVAS) / max(x1 - x0, y1 - y0)
    width, height = (x1 - x0) * scale, (y1 - y0) * scale

    def xy(p):
        return _dec((mpq(p[0]) - x0) * scale), _dec((y1 - mpq(p[1])) * scale)

    def line(seg, extra=""):
        (ax, ay), (bx, by) = xy(seg[0]), xy(seg[1])
        return f'    <line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"{extra}/>'

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" width="{_dec(width)}" '
           f'height="{_dec(height)}" viewBox="0 0 {_dec(width)} {_dec(height)}">',
           '  <rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>']
    if inst.k > 1:
        out.append('  <g id="intersection" stroke="#c8c8c8" stroke-width="10" '
                   'stroke-linecap="round">')
        for P in support_intersection(surfaces):
            seg = _clip(P, box)
            if seg:
                out.append(line(seg))
        out.append("  </g>")
    for i, h in enumerate(surfaces):
        color = PALETTE[i % len(PALETTE)]
        out.append(f'  <g id="curve-{i + 1}" stroke="{color}" stroke-width="2.5">')
        for c in h.cells:
            seg = _clip(c.polyhedron, box)
            if not seg:
                continue
            extra = ""
            if c.weight > 1:  # heavier stroke for higher weight
                extra = f' stroke-width="{_dec(mpq(5, 2) + mpq(3, 2) * (c.weight - 1))}"'
            out.append(line(seg, extra))
        out.append("  </g>")
    out.append('  <g id="stable-points" stroke="#000000" stroke-width="1.5">')
    for p in sorted(points, key=lambda q: (tuple(q.coords), q.label)):
        cx, cy = xy(p.coords)
        fill = "#ffffff" if p.on_all else "#000000"
        cls = "on-all" if p.on_all else "partial"
        label = f' data-subset="{p.label}"' if p.label else ""
        out.append(f'    <circle class="{cls}" cx="{cx}" cy="{cy}" r="5" fill="{fill}"{label}/>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_instance(inst: Instance, seeds: Sequence[int] = (0,)) -> str:
    return render(inst, stable_plot_points(inst, seeds))
