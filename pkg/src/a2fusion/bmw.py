"""Closed formulas of Begin, Mathieu and Walton for A2 tensor and fusion rules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsystem import in_alcove, is_dominant


@dataclass(frozen=True)
class BmwIntermediates:
    A: Fraction
    B: Fraction
    k0min: Fraction
    k0max: Fraction
    l0max: Fraction | None  # None stands for an unbounded level
    delta: int

    @property
    def integral(self):
        return self.A.denominator == 1 and self.B.denominator == 1

    def to_json(self, n=None):
        """JSON-ready dict; rationals become ``"p/q"`` strings, integers stay ints."""
        out = {
            "A": _rational_json(self.A),
            "B": _rational_json(self.B),
            "k0min": _rational_json(self.k0min),
            "k0max": _rational_json(self.k0max),
            "l0max": None if self.l0max is None else _rational_json(self.l0max),
            "delta": self.delta,
        }
        if n is not None:
            out["N"] = n
        return out


def _rational_json(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def bmw_intermediates(lam, mu, nu, level=None):
    """Compute ``A, B, k0min, k0max, l0max`` and ``delta``.

    >>> bmw_intermediates((4, 2), (3, 1), (2, 4), 7)
    BmwIntermediates(A=Fraction(9, 1), B=Fraction(7, 1), k0min=Fraction(6, 1), k0max=Fraction(7, 1), l0max=Fraction(7, 1), delta=1)
    """
    for w in (lam, mu, nu):
        if not is_dominant(w):
            raise ValueError(f"weight {tuple(w)} is not dominant")
    a, b = lam
    c, d = mu
    e, f = nu
    A = Fraction(2 * (a + c + f) + (b + d + e), 3)
    B = Fraction((a + c + f) + 2 * (b + d + e), 3)
    k0min = max(Fraction(a + b), Fraction(c + d), Fraction(e + f), A - min(a, c, f), B - min(b, d, e))
    k0max = min(A, B)
    l0max = None if level is None else min(A, B, Fraction(level))
    integral = A.denominator == 1 and B.denominator == 1
    delta = int(k0max >= k0min and integral and A >= 0 and B >= 0)
    return BmwIntermediates(A, B, k0min, k0max, l0max, delta)


def _as_int(q):
    if q.denominator != 1:
        raise ArithmeticError(f"non-integral coefficient {q}")
    return int(q)


def bmw_tensor(lam, mu, nu):
    """Tensor coefficient ``(k0max - k0min + 1) * delta``."""
    im = bmw_intermediates(lam, mu, nu)
    return _as_int((im.k0max - im.k0min + 1) * im.delta)


def bmw_g(lam, mu, nu, level=None):
    """The piecewise form ``G``: ``max(0, l0max - k0min + 1)``.

    ``k0min`` is taken over the nine terms ``a+b, c+d, e+f, A-a, A-c, A-f,
    B-b, B-d, B-e``.  ``level=None`` means an unbounded level, so ``l0max``
    is ``min(A, B)``.  Returns 0 when ``A`` or ``B`` is not an integer.
    """
    a, b = lam
    c, d = mu
    e, f = nu
    A = Fraction(2 * (a + c + f) + (b + d + e), 3)
    B = Fraction((a + c + f) + 2 * (b + d + e), 3)
    if A.denominator != 1 or B.denominator != 1:
        return 0
    k0min = max(a + b, c + d, e + f, A - a, A - c, A - f, B - b, B - d, B - e)
    l0max = min(A, B) if level is None else min(A, B, level)
    value = l0max - k0min + 1
    return _as_int(value) if value >= 0 else 0


def bmw_fusion(lam, mu, nu, level):
    """Fusion coefficient from the closed formula.

    ``lam`` and ``mu`` must lie in ``P_level``; ``nu`` must be dominant (the
    formula already gives 0 when ``nu`` is outside ``P_level``).

    >>> bmw_fusion((4, 2), (3, 1), (2, 4), 7)
    2
    """
    if level < 0:
        raise ValueError(f"level must be nonnegative, got {level}")
    for w in (lam, mu):
        if not in_alcove(w, level):
            raise ValueError(f"weight {tuple(w)} is not in the level-{level} alcove")
    if not is_dominant(nu):
        raise ValueError(f"weight {tuple(nu)} is not dominant")
    return bmw_g(lam, mu, nu, level)


def bmw_fusion_theorem(lam, mu, nu, level):
    """Fusion coefficient in the ``min(k0max, l) - k0min + 1`` form."""
    im = bmw_intermediates(lam, mu, nu, level)
    if level < im.k0min or im.delta == 0:
        return 0
    return _as_int(min(im.k0max, level) - im.k0min + 1)
