"""Exact lattice arithmetic for the root system of type A2.

Weights are written in the basis of fundamental weights, so ``Weight(x, y)``
stands for ``x*w1 + y*w2``.  The simple roots are ``alpha1 = (2, -1)`` and
``alpha2 = (-1, 2)``, the highest root is ``theta = (1, 1)`` and the Weyl
vector is ``rho = (1, 1)``.

The affine Weyl group acts through the dot action ``w . phi = w(phi + rho) - rho``.
In shifted coordinates ``p = phi + rho`` the level-``l`` action is the plain
affine action whose extra generator reflects across ``(p, theta) = l + 3``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple


class Weight(NamedTuple):
    """An integral weight ``x*w1 + y*w2``.

    Addition and subtraction are componentwise (not tuple concatenation).
    """

    x: int
    y: int

    def __add__(self, other):
        return Weight(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Weight(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Weight(-self.x, -self.y)

    def scale(self, k):
        return Weight(k * self.x, k * self.y)

    def conjugate(self):
        """The involution ``-w0``, which swaps the two coordinates."""
        return Weight(self.y, self.x)


RHO = Weight(1, 1)
THETA = Weight(1, 1)
ALPHA1 = Weight(2, -1)
ALPHA2 = Weight(-1, 2)
POSITIVE_ROOTS = (ALPHA1, ALPHA2, THETA)


def killing_form(v, w):
    """Killing form on weights in fundamental-weight coordinates.

    Normalized so that ``(theta, theta) = 2``.  Entries may be ints or
    Fractions; the result is always a Fraction.

    >>> killing_form((1, 0), (1, 0))
    Fraction(2, 3)
    >>> killing_form(THETA, THETA)
    Fraction(2, 1)
    """
    return Fraction(2 * v[0] * w[0] + v[0] * w[1] + v[1] * w[0] + 2 * v[1] * w[1], 3)


def apply_simple_reflection(i, phi):
    """Plain (unshifted) action of ``s1`` or ``s2``."""
    x, y = phi
    if i == 1:
        return Weight(-x, x + y)
    if i == 2:
        return Weight(x + y, -y)
    raise ValueError(f"simple reflection index must be 1 or 2, got {i!r}")


def apply_affine_reflection(i, phi, level):
    """Plain action of the affine Weyl group at ``level``.

    Generator 0 is the reflection across ``(beta, theta) = level``.
    """
    if i == 0:
        x, y = phi
        t = level - x - y
        return Weight(x + t, y + t)
    return apply_simple_reflection(i, phi)


def dot_generator(i, x, y, level=None):
    """Dot action of a single generator on the pair ``(x, y)``.

    Written with plain arithmetic so it also works on symbolic coordinates
    (anything supporting ``+``, ``-`` and integer offsets).  ``level`` is only
    needed for ``s0``.
    """
    if i == 1:
        return -x - 2, x + y + 1
    if i == 2:
        return x + y + 1, -y - 2
    if i == 0:
        if level is None:
            raise ValueError("s0 needs a level")
        t = level + 1 - x - y
        return x + t, y + t
    raise ValueError(f"generator index must be 0, 1 or 2, got {i!r}")


_WORD_RE = re.compile(r"s([012])")


class AffineWeylWord(NamedTuple):
    """A word in the generators ``s0, s1, s2``, read right to left.

    ``AffineWeylWord((0, 2, 0))`` is ``s0 s2 s0``; acting on a weight it
    applies ``s0`` first.
    """

    letters: tuple

    @classmethod
    def parse(cls, text):
        text = text.replace(" ", "").replace("*", "")
        if text in ("", "Id", "id", "e", "1"):
            return cls(())
        letters = _WORD_RE.findall(text)
        if "".join(f"s{i}" for i in letters) != text:
            raise ValueError(f"cannot parse affine Weyl word {text!r}")
        return cls(tuple(int(i) for i in letters))

    @property
    def sign(self):
        return -1 if len(self.letters) % 2 else 1

    @property
    def is_finite(self):
        return 0 not in self.letters

    def __str__(self):
        return "".join(f"s{i}" for i in self.letters) or "Id"


IDENTITY = AffineWeylWord(())

# The six elements of the finite Weyl group.
FINITE_WEYL_GROUP = tuple(
    AffineWeylWord(w) for w in [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]
)


def dot_action(word, phi, level=None):
    """Apply ``word`` to ``phi`` with the shifted action at ``level``.

    >>> dot_action(AffineWeylWord.parse("s0"), Weight(5, 4), 7)
    Weight(x=4, y=3)
    """
    if not isinstance(word, AffineWeylWord):
        word = AffineWeylWord(tuple(word))
    x, y = phi
    for i in reversed(word.letters):
        x, y = dot_generator(i, x, y, level)
    return Weight(x, y)


def dot_action_via_shift(word, phi, level=None):
    """Same as :func:`dot_action`, computed as ``w(phi + rho) - rho``.

    The unshifted affine group acts at level ``level + 3``.
    """
    if not isinstance(word, AffineWeylWord):
        word = AffineWeylWord(tuple(word))
    if level is None and not word.is_finite:
        raise ValueError("s0 needs a level")
    p = Weight(*phi) + RHO
    for i in reversed(word.letters):
        p = apply_affine_reflection(i, p, None if level is None else level + 3)
    return p - RHO


def is_dominant(phi):
    return phi[0] >= 0 and phi[1] >= 0


def in_alcove(phi, level):
    """Membership in the level-``level`` fundamental alcove ``P_level``."""
    return phi[0] >= 0 and phi[1] >= 0 and phi[0] + phi[1] <= level


class Folded(NamedTuple):
    """Result of folding a weight that is not fixed by any reflection."""

    weight: Weight
    sign: int


def fold_to_chamber(phi, policy="s1-first"):
    """Fold ``phi`` into the dominant chamber with the dot action.

    Returns ``Folded(nu, sign)`` with ``w . phi = nu`` dominant and
    ``sign = sgn(w)``, or ``None`` when ``phi + rho`` lies on a wall (then
    ``phi`` is fixed by a shifted reflection and contributes nothing).

    ``policy`` picks which violated wall is reflected first; the result
    does not depend on it.
    """
    p, q = phi[0] + 1, phi[1] + 1
    sign = 1
    first_two = policy == "s2-first"
    while True:
        if first_two and q < 0:
            p, q = p + q, -q
        elif p < 0:
            p, q = -p, p + q
        elif q < 0:
            p, q = p + q, -q
        else:
            break
        sign = -sign
    if p == 0 or q == 0:
        return None
    return Folded(Weight(p - 1, q - 1), sign)


def fold_to_alcove(phi, level, policy="s1-first"):
    """Fold ``phi`` into ``P_level`` with the affine dot action.

    Returns ``Folded(nu, sign)`` or ``None`` when ``phi + rho`` lies on an
    affine wall.  Policies: ``"s1-first"`` tries ``s1, s2, s0`` in that order,
    ``"s0-first"`` tries ``s0`` before the finite walls, ``"s2-first"`` tries
    ``s2, s1, s0``.
    """
    if level < 0:
        raise ValueError(f"level must be nonnegative, got {level}")
    n = level + 3
    p, q = phi[0] + 1, phi[1] + 1
    sign = 1
    while True:
        if policy == "s0-first" and p + q > n:
            t = n - p - q
            p, q = p + t, q + t
        elif policy == "s2-first" and q < 0:
            p, q = p + q, -q
        elif p < 0:
            p, q = -p, p + q
        elif q < 0:
            p, q = p + q, -q
        elif p + q > n:
            t = n - p - q
            p, q = p + t, q + t
        else:
            break
        sign = -sign
    if p == 0 or q == 0 or p + q == n:
        return None
    return Folded(Weight(p - 1, q - 1), sign)


def alcove_weights(level):
    """All weights of ``P_level``, sorted lexicographically."""
    return [Weight(x, y) for x in range(level + 1) for y in range(level + 1 - x)]


def dimension(lam):
    """Weyl dimension formula for ``V(lam)``."""
    a, b = lam
    return (a + 1) * (b + 1) * (a + b + 2) // 2
