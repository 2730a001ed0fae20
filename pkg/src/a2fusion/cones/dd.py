"""Double description method over the integers.

``extreme_rays(rows, d)`` converts ``{v in R^d : row . v >= 0}`` into a
lineality basis and a list of extreme rays (modulo lineality), all as
primitive integer vectors.  Adjacency uses the combinatorial test on zero
sets, kept as integer bitmasks.
"""

from __future__ import annotations

from math import gcd


def primitive(v):
    g = 0
    for c in v:
        g = gcd(g, c)
    if g > 1:
        return tuple(c // g for c in v)
    return tuple(v)


def _dot(a, v):
    return sum(x * y for x, y in zip(a, v))


def extreme_rays(rows, d):
    """Return ``(lines, rays)`` for the homogeneous cone ``{A v >= 0}``."""
    lines = [tuple(1 if i == j else 0 for j in range(d)) for i in range(d)]
    rays = []  # list of (vector, zero-set bitmask)
    rows = [a for a in rows if any(a)]
    for k, a in enumerate(rows):
        bit = 1 << k
        pivot = next((i for i, line in enumerate(lines) if _dot(a, line)), None)
        if pivot is not None:
            line = lines.pop(pivot)
            al = _dot(a, line)
            if al < 0:
                line = tuple(-c for c in line)
                al = -al
            lines = [
                primitive(tuple(al * c - _dot(a, other) * l for c, l in zip(other, line)))
                for other in lines
            ]
            rays = [
                (primitive(tuple(al * c - _dot(a, r) * l for c, l in zip(r, line))), mask | bit)
                for r, mask in rays
            ]
            # A former line is tight on every earlier row.
            rays.append((primitive(line), (1 << k) - 1))
            continue
        values = [_dot(a, r) for r, _ in rays]
        pos = [i for i, v in enumerate(values) if v > 0]
        neg = [i for i, v in enumerate(values) if v < 0]
        if not neg:
            rays = [(r, mask | bit) if values[i] == 0 else (r, mask) for i, (r, mask) in enumerate(rays)]
            continue
        need = d - len(lines) - 2
        masks = [mask for _, mask in rays]
        new = []
        for i in pos:
            ri, mi = rays[i]
            for j in neg:
                rj, mj = rays[j]
                common = mi & mj
                if bin(common).count("1") < need:
                    continue
                if any(
                    (m & common) == common for t, m in enumerate(masks) if t != i and t != j
                ):
                    continue
                vi, vj = values[i], values[j]
                vec = primitive(tuple(vi * y - vj * x for x, y in zip(ri, rj)))
                new.append((vec, common | bit))
        kept = [(r, mask | bit) if values[i] == 0 else (r, mask) for i, (r, mask) in enumerate(rays) if values[i] >= 0]
        rays = kept + new
    return lines, [r for r, _ in rays]
