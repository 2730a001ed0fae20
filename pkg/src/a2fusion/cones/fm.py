"""Fourier-Motzkin elimination on exact integer inequality systems.

A system is a list of ``(row, strict)`` pairs with ``row = (g_1..g_n, h)``
meaning ``g . z + h >= 0`` (or ``> 0`` when ``strict``).  Chernikov's rule
prunes combinations whose ancestor set is too large.
"""

from __future__ import annotations

from .dd import primitive


def eliminate(system, k, step=None):
    """Eliminate variable ``k``.  ``system`` items are ``(row, strict, ancestors)``."""
    pos, neg, out = [], [], []
    for item in system:
        c = item[0][k]
        if c > 0:
            pos.append(item)
        elif c < 0:
            neg.append(item)
        else:
            out.append(item)
    for p, ps, pa in pos:
        for q, qs, qa in neg:
            anc = pa | qa
            if step is not None and len(anc) > step + 1:
                continue
            cp, cq = p[k], -q[k]
            row = primitive(tuple(cq * x + cp * y for x, y in zip(p, q)))
            out.append((row, ps or qs, anc))
    # Drop duplicates, keeping the stricter copy.
    best = {}
    for row, strict, anc in out:
        old = best.get(row)
        if old is None or (strict and not old[1]) or (strict == old[1] and len(anc) < len(old[2])):
            best[row] = (row, strict, anc)
    return list(best.values())


def project(rows, n, keep, strict=False):
    """Project ``{rows >= 0}`` (or ``> 0``) onto the variables in ``keep``."""
    system = [(tuple(r), strict, frozenset([i])) for i, r in enumerate(rows)]
    for step, k in enumerate(v for v in range(n) if v not in keep):
        system = eliminate(system, k, step + 1)
    return system


def is_feasible(rows, n, strict=False):
    """Decide whether ``{g . z + h >= 0}`` (``> 0`` if ``strict``) has a solution."""
    system = project(rows, n, keep=(), strict=strict)
    for row, is_strict, _ in system:
        h = row[n]
        if h < 0 or (is_strict and h == 0):
            return False
    return True
