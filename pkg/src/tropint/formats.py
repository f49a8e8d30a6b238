"""Instance files and report serialization.

Rationals cross the file boundary as ``"p/q"`` or ``"p"`` strings only, so
nothing is ever rounded. All documents are JSON with a fixed key order.
"""

from __future__ import annotations

import json
import re
from typing import Any

from gmpy2 import mpq

from .errors import MalformedInputError
from .lab import Instance, SubsetReport, VerificationReport
from .polyhedron import Polyhedron
from .surfaces import TropicalHypersurface, TropicalPolynomial

VERSION = 1
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def format_rational(q) -> str:
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> mpq:
    if isinstance(s, bool):
        raise MalformedInputError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return mpq(s)
    if not isinstance(s, str) or not _RATIONAL.match(s.strip()):
        raise MalformedInputError(f"not a rational string: {s!r}")
    num, _, den = s.strip().partition("/")
    if den and int(den) == 0:
        raise MalformedInputError(f"zero denominator in {s!r}")
    return mpq(int(num), int(den) if den else 1)


def _exponent(a, n) -> tuple:
    if not isinstance(a, list) or len(a) != n:
        raise MalformedInputError(f"exponent {a!r} must be a list of {n} integers")
    if any(isinstance(x, bool) or not isinstance(x, int) for x in a):
        raise MalformedInputError(f"exponent {a!r} must be integral")
    return tuple(a)


def instance_from_dict(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise MalformedInputError("instance file must hold an object")
    if doc.get("version") != VERSION:
        raise MalformedInputError(f"unsupported version {doc.get('version')!r}")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MalformedInputError("n must be a positive integer")
    polys = doc.get("polynomials")
    if not isinstance(polys, list) or not polys:
        raise MalformedInputError("polynomials must be a nonempty list")
    out = []
    for p in polys:
        if not isinstance(p, dict) or "support" not in p or "coeffs" not in p:
            raise MalformedInputError("each polynomial needs support and coeffs")
        support = p["support"]
        coeffs = p["coeffs"]
        if not isinstance(support, list) or not isinstance(coeffs, list):
            raise MalformedInputError("support and coeffs must be lists")
        if len(support) != len(coeffs):
            raise MalformedInputError("coeffs length differs from support length")
        out.append(TropicalPolynomial(tuple(_exponent(a, n) for a in support),
                                      tuple(parse_rational(c) for c in coeffs)))
    seed = doc.get("seed", 0)
    return Instance(n, tuple(out), seed if isinstance(seed, int) else 0)


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc}") from exc
    return instance_from_dict(doc)


def instance_to_dict(inst: Instance) -> dict:
    return {
        "version": VERSION,
        "n": inst.n,
        "polynomials": [
            {"support": [list(a) for a in f.support],
             "coeffs": [format_rational(c) for c in f.coeffs]}
            for f in inst.polynomials
        ],
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def serialize_instance(inst: Instance) -> str:
    return dumps(instance_to_dict(inst))


def _vector(v) -> list:
    return [format_rational(x) for x in v]


def polyhedron_to_dict(P: Polyhedron) -> dict:
    verts, rays, lin = P.vrep
    return {
        "dim": P.dim,
        "equalities": [{"normal": _vector(a), "offset": format_rational(b)}
                       for a, b in P.equalities],
        "inequalities": [{"normal": _vector(a), "offset": format_rational(b)}
                         for a, b in P.inequalities],
        "vertices": [_vector(v) for v in verts],
        "rays": [_vector(r) for r in rays],
        "lineality": [_vector(r) for r in lin],
    }


def hypersurface_to_dict(h: TropicalHypersurface) -> dict:
    return {
        "version": VERSION,
        "n": h.ambient_dim,
        "cells": [
            {"dual_edge": [list(c.dual_edge[0]), list(c.dual_edge[1])],
             "weight": c.weight,
             **polyhedron_to_dict(c.polyhedron)}
            for c in h.cells
        ],
    }


def report_to_dict(report: VerificationReport) -> dict:
    comps = report.components
    return {
        "version": VERSION,
        "verdict": report.verdict,
        "components": [
            {"index": g,
             "cells": len(comps.groups[g]),
             "witness": None if report.assignment[g] is None else {
                 "stable_cell": report.assignment[g],
                 "point": _vector(report.diagnostics[g])}}
            for g in range(len(comps))
        ],
        "stable_cells": [
            {"multiplicity": sc.multiplicity, **_shape(sc.cell)}
            for sc in report.stable_points
        ],
    }


def _shape(P: Polyhedron) -> dict:
    verts, rays, lin = P.vrep
    return {"dim": P.dim, "vertices": [_vector(v) for v in verts],
            "rays": [_vector(r) for r in rays], "lineality": [_vector(r) for r in lin]}


def subset_report_to_dict(report: SubsetReport) -> dict:
    return {
        "version": VERSION,
        "verdict": report.verdict,
        "components": [
            {"index": g, "witness_subsets": [list(J) for J in report.witnesses[g]]}
            for g in range(len(report.components))
        ],
        "points": [
            {"subset": list(p.subset), "multiplicity": p.multiplicity,
             "on_all": p.on_all, "component": p.component, **_shape(p.cell)}
            for p in report.points
        ],
        "empty_subsets": [list(J) for J in report.empty_subsets],
    }
