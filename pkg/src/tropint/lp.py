"""Exact simplex method for ``max c.y  s.t.  G y >= h`` with ``y`` free.

Dictionary form (Chvatal) with Bland's rule in both phases, so it terminates
on degenerate problems. Free variables are pivoted into the basis first and
never leave it; phase one then relaxes the remaining (sign constrained) rows
by a single auxiliary variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import ZERO, Q

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: object = None
    point: tuple | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Dictionary:
    """Rows ``basic = const + sum coef[k] * nonbasic[k]``."""

    def __init__(self, nonbasic, basic, consts, coefs):
        self.nonbasic = nonbasic
        self.basic = basic
        self.consts = consts
        self.coefs = coefs
        self.obj_const = ZERO
        self.obj = [ZERO] * len(nonbasic)

    def pivot(self, row: int, col: int) -> None:
        coefs, consts = self.coefs, self.consts
        prow = coefs[row]
        a = prow[col]
        inv = 1 / a
        new = [-x * inv for x in prow]
        new[col] = inv
        nconst = -consts[row] * inv
        for i in range(len(coefs)):
            if i == row:
                continue
            r = coefs[i]
            f = r[col]
            if not f:
                continue
            for k in range(len(r)):
                if k == col:
                    r[k] = f * inv
                elif new[k]:
                    r[k] += f * new[k]
            consts[i] += f * nconst
        f = self.obj[col]
        if f:
            o = self.obj
            for k in range(len(o)):
                if k == col:
                    o[k] = f * inv
                elif new[k]:
                    o[k] += f * new[k]
            self.obj_const += f * nconst
        coefs[row] = new
        consts[row] = nconst
        self.basic[row], self.nonbasic[col] = self.nonbasic[col], self.basic[row]

    def drop_column(self, col: int) -> None:
        del self.nonbasic[col]
        for r in self.coefs:
            del r[col]
        del self.obj[col]

    def optimize(self, bounded_rows) -> bool:
        """Bland's rule ascent. Returns False when unbounded."""
        while True:
            entering = None
            best_id = None
            for k, c in enumerate(self.obj):
                if c > 0 and (best_id is None or self.nonbasic[k] < best_id):
                    entering, best_id = k, self.nonbasic[k]
            if entering is None:
                return True
            leave = None
            best = None
            for i in bounded_rows(self):
                a = self.coefs[i][entering]
                if a < 0:
                    ratio = self.consts[i] / -a
                    if (best is None or ratio < best
                            or (ratio == best and self.basic[i] < self.basic[leave])):
                        leave, best = i, ratio
            if leave is None:
                return False
            self.pivot(leave, entering)


def maximize(G: Sequence[Sequence], h: Sequence, c: Sequence) -> LPResult:
    """Maximize ``c.y`` over ``{y : G y >= h}``; ``y`` has ``len(c)`` free coordinates."""
    r = len(c)
    m = len(G)
    aux = r + m
    # variable ids: y_j -> j, slack_i -> r + i, auxiliary -> r + m
    nonbasic = list(range(r))
    basic = [r + i for i in range(m)]
    consts = [-Q(x) for x in h]
    coefs = [[Q(x) for x in row] for row in G]
    d = _Dictionary(nonbasic, basic, consts, coefs)

    # pivot the free variables into the basis
    free_rows = set()
    lineality = []
    for j in range(r):
        col = d.nonbasic.index(j)
        row = next((i for i in range(m) if i not in free_rows and d.coefs[i][col]), None)
        if row is None:
            lineality.append(j)
            continue
        d.pivot(row, col)
        free_rows.add(row)
    # lineality columns stay zero in every bounded row from here on

    def bounded_rows(dd):
        return [i for i in range(len(dd.basic)) if i not in free_rows]

    rows = bounded_rows(d)
    worst = min(rows, key=lambda i: (d.consts[i], d.basic[i]), default=None)
    if worst is not None and d.consts[worst] < 0:
        # phase one: relax every bounded row by the auxiliary variable
        d.nonbasic.append(aux)
        for i, row in enumerate(d.coefs):
            row.append(ZERO if i in free_rows else Q(1))
        col = len(d.nonbasic) - 1
        d.obj = [ZERO] * len(d.nonbasic)
        d.obj[col] = Q(-1)
        d.obj_const = ZERO
        d.pivot(worst, col)
        d.optimize(bounded_rows)
        if d.obj_const < 0:
            return LPResult(INFEASIBLE)
        if aux in d.basic:
            row = d.basic.index(aux)
            col = next((k for k, a in enumerate(d.coefs[row]) if a), None)
            if col is not None:
                d.pivot(row, col)
        if aux in d.nonbasic:
            d.drop_column(d.nonbasic.index(aux))
        else:
            # aux is stuck at zero in a row with no other dependence
            free_rows.add(d.basic.index(aux))

    # phase two objective in terms of the current nonbasic variables
    cq = [Q(x) for x in c]
    obj = [ZERO] * len(d.nonbasic)
    oc = ZERO
    for k, j in enumerate(d.nonbasic):
        if j < r:
            obj[k] += cq[j]
    for i, b in enumerate(d.basic):
        if b < r and cq[b]:
            oc += cq[b] * d.consts[i]
            for k, a in enumerate(d.coefs[i]):
                if a:
                    obj[k] += cq[b] * a
    d.obj, d.obj_const = obj, oc
    for j in lineality:
        k = d.nonbasic.index(j)
        if d.obj[k]:
            return LPResult(UNBOUNDED)
        d.drop_column(k)
    if not d.optimize(bounded_rows):
        return LPResult(UNBOUNDED)
    y = [ZERO] * r
    for i, b in enumerate(d.basic):
        if b < r:
            y[b] = d.consts[i]
    return LPResult(OPTIMAL, d.obj_const, tuple(y))


def feasible_point(G: Sequence[Sequence], h: Sequence, r: int):
    """Some point of ``{y : G y >= h}`` or ``None``."""
    res = maximize(G, h, [0] * r)
    return res.point if res.status == OPTIMAL else None
