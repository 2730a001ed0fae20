"""Tensor product decomposition of A2 modules (Racah-Speiser)."""

from __future__ import annotations

from collections import defaultdict

from .multiplicity import mult, weight_diagram
from .rootsystem import FINITE_WEYL_GROUP, Weight, dot_action, fold_to_chamber, is_dominant


def _check_dominant(*weights):
    for w in weights:
        if not is_dominant(w):
            raise ValueError(f"weight {tuple(w)} is not dominant")


def tensor_coefficient(lam, mu, nu):
    """Multiplicity of ``V(nu)`` in ``V(lam) (x) V(mu)``.

    Uses the alternating sum over the finite Weyl group,
    ``sum_w sgn(w) m_lam(w . nu - mu)``.
    """
    _check_dominant(lam, mu, nu)
    total = 0
    for w in FINITE_WEYL_GROUP:
        phi = dot_action(w, nu)
        total += w.sign * mult(lam, (phi[0] - mu[0], phi[1] - mu[1]))
    if total < 0:
        raise ArithmeticError(f"negative tensor coefficient at {lam}, {mu}, {nu}")
    return total


def tensor_decomposition(lam, mu):
    """Racah-Speiser algorithm: ``{nu: N}`` with only nonzero entries.

    >>> tensor_decomposition((1, 0), (0, 1))
    {Weight(x=0, y=0): 1, Weight(x=1, y=1): 1}
    """
    _check_dominant(lam, mu)
    table = defaultdict(int)
    for phi, m in weight_diagram(lam).items():
        folded = fold_to_chamber((phi[0] + mu[0], phi[1] + mu[1]))
        if folded is not None:
            table[folded.weight] += folded.sign * m
    return _finalize(table)


def _finalize(table):
    out = {}
    for nu in sorted(table):
        n = table[nu]
        if n < 0:
            raise ArithmeticError(f"negative coefficient {n} at {nu}")
        if n:
            out[Weight(*nu)] = n
    return out


def table_to_json(table):
    """Serialize ``{nu: N}`` as a sorted list of ``{"nu": [e, f], "N": n}``."""
    return [{"nu": [nu[0], nu[1]], "N": n} for nu, n in sorted(table.items())]


def table_from_json(data):
    return {Weight(*item["nu"]): item["N"] for item in data}
