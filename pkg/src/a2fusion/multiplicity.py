"""Weight multiplicities of irreducible A2 modules.

Three independent routes are provided: the closed hexagonal-shell formula
(:func:`mult`), Freudenthal's recursion (:func:`mult_freudenthal`, used as an
oracle), and the 14-piece piecewise-linear table (:func:`mult_piecewise_table`)
that seeds the symbolic Kac-Walton computation.
"""

from __future__ import annotations

from fractions import Fraction

from .rootsystem import (
    ALPHA1,
    ALPHA2,
    POSITIVE_ROOTS,
    RHO,
    Weight,
    is_dominant,
    killing_form,
)


def same_class(lam, phi):
    """True when ``lam - phi`` lies in the root lattice."""
    return (lam[0] + 2 * lam[1] - phi[0] - 2 * phi[1]) % 3 == 0


def mult_dominant(lam, phi):
    """Multiplicity of the dominant weight ``phi`` in ``V(lam)``.

    ``max(0, min((a+2b-x-2y)/3 + 1, (2a+b-2x-y)/3 + 1, a+1, b+1))``.
    Returns 0 when ``lam - phi`` is not in the root lattice.
    """
    a, b = lam
    x, y = phi
    u = a + 2 * b - x - 2 * y
    if u % 3:
        return 0
    v = 2 * a + b - 2 * x - y
    return max(0, min(u // 3 + 1, v // 3 + 1, a + 1, b + 1))


def to_dominant(phi):
    """Plain Weyl-group image of ``phi`` in the dominant chamber."""
    x, y = phi
    while x < 0 or y < 0:
        if x < 0:
            x, y = -x, x + y
        else:
            x, y = x + y, -y
    return Weight(x, y)


def mult(lam, phi):
    """Multiplicity of an arbitrary weight ``phi`` in ``V(lam)``."""
    if not is_dominant(lam):
        raise ValueError(f"highest weight must be dominant, got {tuple(lam)}")
    x, y = phi
    # Fold with the plain Weyl action; multiplicities are W-invariant.
    while x < 0 or y < 0:
        if x < 0:
            x, y = -x, x + y
        else:
            x, y = x + y, -y
    return mult_dominant(lam, (x, y))


def _parallelogram(lam):
    a, b = lam
    n = a + b
    for i in range(n + 1):
        for j in range(n + 1):
            yield i, j, Weight(a - 2 * i + j, b + i - 2 * j)


def weight_diagram(lam):
    """The weight diagram of ``V(lam)`` as a dict ``{weight: multiplicity}``.

    >>> sorted(weight_diagram((1, 0)).items())
    [(Weight(x=-1, y=1), 1), (Weight(x=0, y=-1), 1), (Weight(x=1, y=0), 1)]
    """
    if not is_dominant(lam):
        raise ValueError(f"highest weight must be dominant, got {tuple(lam)}")
    diagram = {}
    for _, _, phi in _parallelogram(lam):
        m = mult(lam, phi)
        if m:
            diagram[phi] = m
    return diagram


def freudenthal_diagram(lam):
    """Weight diagram of ``V(lam)`` computed by Freudenthal's recursion."""
    lam = Weight(*lam)
    if not is_dominant(lam):
        raise ValueError(f"highest weight must be dominant, got {tuple(lam)}")
    top = killing_form(lam + RHO, lam + RHO)
    # m is indexed by (i, j) with phi = lam - i*alpha1 - j*alpha2.
    m = {}
    n = lam.x + lam.y
    for depth in range(2 * n + 1):
        for i in range(max(0, depth - n), min(depth, n) + 1):
            j = depth - i
            phi = lam - ALPHA1.scale(i) - ALPHA2.scale(j)
            if depth == 0:
                m[i, j] = 1
                continue
            denom = top - killing_form(phi + RHO, phi + RHO)
            if denom == 0:
                m[i, j] = 0
                continue
            total = Fraction(0)
            for root, (di, dj) in zip(POSITIVE_ROOTS, ((1, 0), (0, 1), (1, 1))):
                k = 1
                while i - k * di >= 0 and j - k * dj >= 0:
                    mk = m[i - k * di, j - k * dj]
                    if mk:
                        total += killing_form(phi + root.scale(k), root) * mk
                    k += 1
            value = 2 * total / denom
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(f"Freudenthal produced {value} at {phi}")
            m[i, j] = int(value)
    return {
        lam - ALPHA1.scale(i) - ALPHA2.scale(j): v for (i, j), v in m.items() if v
    }


def mult_freudenthal(lam, phi):
    """Multiplicity of ``phi`` in ``V(lam)`` by Freudenthal's formula."""
    return freudenthal_diagram(lam).get(Weight(*phi), 0)


def diagram_to_json(diagram):
    """Serialize a weight diagram as ``[{"weight": [x, y], "mult": m}, ...]``."""
    return [{"weight": [w[0], w[1]], "mult": m} for w, m in sorted(diagram.items())]


def diagram_from_json(data):
    return {Weight(*item["weight"]): item["mult"] for item in data}


# Rows of the 14-piece table: (inequalities F >= 0, multiplicity expression).
# Each linear form is given by its coefficients on (x, y, a, b) and a constant.
_T = Fraction(1, 3)
MULTIPLICITY_TABLE = (
    ([(1, -1, -1, 1, 0), (1, 2, -1, 1, 0), (2, 1, -2, -1, -3)], (0, 0, 0, 0, 0)),
    ([(-1, 1, 1, -1, 0), (2, 1, 1, -1, 0), (1, 2, -1, -2, -3)], (0, 0, 0, 0, 0)),
    ([(-2, -1, -1, 1, 0), (1, 2, -1, 1, 0), (-1, 1, -2, -1, -3)], (0, 0, 0, 0, 0)),
    ([(-1, 1, 1, -1, 0), (-1, -2, 1, -1, 0), (-2, -1, -1, -2, -3)], (0, 0, 0, 0, 0)),
    ([(1, -1, -1, 1, 0), (-2, -1, -1, 1, 0), (-1, -2, -2, -1, -3)], (0, 0, 0, 0, 0)),
    ([(2, 1, 1, -1, 0), (-1, -2, 1, -1, 0), (1, -1, -1, -2, -3)], (0, 0, 0, 0, 0)),
    (
        [(1, -1, -1, 1, 0), (1, 2, -1, 1, 0), (-2, -1, 2, 1, 3), (2, 1, 1, -1, 0)],
        (-2 * _T, -_T, 2 * _T, _T, 1),
    ),
    (
        [(-1, 1, 1, -1, 0), (2, 1, 1, -1, 0), (1, 2, -1, 1, 0), (-1, -2, 1, 2, 3)],
        (-_T, -2 * _T, _T, 2 * _T, 1),
    ),
    (
        [(-2, -1, -1, 1, 0), (1, 2, -1, 1, 0), (1, -1, 2, 1, 3), (-1, 1, 1, -1, 0)],
        (_T, -_T, 2 * _T, _T, 1),
    ),
    (
        [(-1, 1, 1, -1, 0), (-2, -1, -1, 1, 0), (-1, -2, 1, -1, 0), (2, 1, 1, 2, 3)],
        (2 * _T, _T, _T, 2 * _T, 1),
    ),
    (
        [(1, -1, -1, 1, 0), (-2, -1, -1, 1, 0), (1, 2, 2, 1, 3), (-1, -2, 1, -1, 0)],
        (_T, 2 * _T, 2 * _T, _T, 1),
    ),
    (
        [(1, -1, -1, 1, 0), (2, 1, 1, -1, 0), (-1, -2, 1, -1, 0), (-1, 1, 1, 2, 3)],
        (-_T, _T, _T, 2 * _T, 1),
    ),
    (
        [(-1, 1, 1, -1, 0), (2, 1, 1, -1, 0), (-1, -2, 1, -1, 0), (0, 0, 1, -1, 0)],
        (0, 0, 0, 1, 1),
    ),
    (
        [(1, -1, -1, 1, 0), (1, 2, -1, 1, 0), (-2, -1, -1, 1, 0), (0, 0, -1, 1, 0)],
        (0, 0, 1, 0, 1),
    ),
)

TABLE_VARIABLES = ("x", "y", "a", "b")


def mult_piecewise_table():
    """The 14-piece multiplicity formula as a cone-supported expression set.

    Variables are ``(x, y, a, b)``: the weight ``(x, y)`` and the highest
    weight ``(a, b)``.  The domain is ``a, b >= 0``.  Valid on the sublattice
    where ``(a, b) - (x, y)`` is in the root lattice.  Each piece keeps the
    table's inequalities verbatim, followed by the two domain rows.
    """
    from .cones import Cone, ConeSupportedExpression, ConeSupportedExpressionSet, LinearForm

    v = TABLE_VARIABLES
    domain = Cone(v, [(0, 0, 1, 0, 0), (0, 0, 0, 1, 0)])
    pieces = []
    for rows, expr in MULTIPLICITY_TABLE:
        cone = Cone(v, rows).intersect(domain)
        pieces.append(ConeSupportedExpression(cone, LinearForm(v, expr[:4], expr[4])))
    return ConeSupportedExpressionSet(v, domain, pieces)
