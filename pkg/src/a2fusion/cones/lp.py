"""Exact rational linear programming on small inequality systems.

Systems are lists of integer rows ``(g_1, ..., g_n, h)`` standing for
``g . z + h >= 0``.  All variables ``z`` are free.  The solver is a
dictionary-form primal simplex with Bland's rule over ``gmpy2.mpq``; free
variables enter the basis and never leave it, so no splitting is needed.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)
_MAX_PIVOTS = 100000


class Unbounded(Exception):
    pass


def _simplex(D, obj, basic, nonbasic, free):
    """Maximize ``obj`` over the dictionary ``D`` in place.

    ``D[r] = [const, coef_1, ..., coef_N]`` expresses basic variable
    ``basic[r]`` in terms of the nonbasic columns; ``obj`` has the same shape.
    """
    ncols = len(nonbasic)
    for _ in range(_MAX_PIVOTS):
        # Bland's rule: smallest variable id among improving columns.
        enter = -1
        best = None
        for j in range(ncols):
            d = obj[j + 1]
            var = nonbasic[j]
            if d > 0 or (d < 0 and free[var]):
                if best is None or var < best:
                    best, enter = var, j
        if enter < 0:
            return
        direction = 1 if obj[enter + 1] > 0 else -1
        col = enter + 1
        leave = -1
        ratio = None
        leave_var = None
        for r, row in enumerate(D):
            if free[basic[r]]:
                continue
            a = row[col] if direction > 0 else -row[col]
            if a < 0:
                q = row[0] / -a
                if ratio is None or q < ratio or (q == ratio and basic[r] < leave_var):
                    ratio, leave, leave_var = q, r, basic[r]
        if leave < 0:
            raise Unbounded()
        _pivot(D, obj, leave, col)
        basic[leave], nonbasic[enter] = nonbasic[enter], basic[leave]
    raise RuntimeError("simplex did not terminate")


def _pivot(D, obj, r, col):
    row = D[r]
    a = row[col]
    inv = -1 / a
    new = [v * inv for v in row]
    new[col] = 1 / a
    D[r] = new
    for s, other in enumerate(D):
        if s == r:
            continue
        v = other[col]
        if v:
            other2 = [o + v * w for o, w in zip(other, new)]
            other2[col] = v * new[col]
            D[s] = other2
    v = obj[col]
    if v:
        obj2 = [o + v * w for o, w in zip(obj, new)]
        obj2[col] = v * new[col]
        obj[:] = obj2


def _solution(D, basic, nonbasic, n):
    values = [_ZERO] * n
    for r, var in enumerate(basic):
        if var < n:
            values[var] = D[r][0]
    return values


@lru_cache(maxsize=1 << 16)
def max_slack(rows, n):
    """Maximize ``t <= 1`` subject to ``g . z + h >= t`` for every row.

    Returns ``(t, z)`` as mpq values.  The strict system ``g . z + h > 0``
    is feasible exactly when ``t > 0``; ``z`` is then a strict witness.
    """
    if not rows:
        return _ONE, tuple([_ZERO] * n)
    t0 = min(min(r[n] for r in rows), 1)
    t0 = mpq(t0)
    # Variables: z_0..z_{n-1} and u (t = t0 + u) are free, slacks follow.
    nv = n + 1
    free = [True] * nv + [False] * (len(rows) + 1)
    D = []
    for row in rows:
        D.append([mpq(row[n]) - t0] + [mpq(g) for g in row[:n]] + [-_ONE])
    D.append([_ONE - t0] + [_ZERO] * n + [-_ONE])
    obj = [t0] + [_ZERO] * n + [_ONE]
    basic = list(range(nv, nv + len(rows) + 1))
    nonbasic = list(range(nv))
    _simplex(D, obj, basic, nonbasic, free)
    values = _solution(D, basic, nonbasic, nv)
    return obj[0], tuple(values[:n])


def maximize(rows, n, objective, start):
    """Maximize the affine ``objective`` over ``{g . z + h >= 0}``.

    ``start`` must be a feasible point.  Returns ``(value, point)``, or
    ``(None, None)`` when the objective is unbounded above.
    """
    start = [mpq(s) for s in start]

    def at(row):
        return sum((mpq(g) * s for g, s in zip(row[:n], start)), mpq(row[n]))

    free = [True] * n + [False] * len(rows)
    D = []
    for row in rows:
        c = at(row)
        if c < 0:
            raise ValueError("start point is not feasible")
        D.append([c] + [mpq(g) for g in row[:n]])
    obj = [at(objective)] + [mpq(g) for g in objective[:n]]
    basic = list(range(n, n + len(rows)))
    nonbasic = list(range(n))
    try:
        _simplex(D, obj, basic, nonbasic, free)
    except Unbounded:
        return None, None
    shift = _solution(D, basic, nonbasic, n)
    return obj[0], tuple(s + v for s, v in zip(start, shift))
