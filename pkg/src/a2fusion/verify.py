"""Exhaustive checks of Kac-Walton against the closed formula.

For every level ``l`` and every triple ``(lam, mu, nu)`` in ``P_l``, three
numbers are compared: the fold-mode Kac-Walton coefficient, the 13-alcove
coefficient, and the closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from multiprocessing import Pool

from .bmw import bmw_fusion
from .fusion import fusion_decomposition
from .rootsystem import alcove_weights


@dataclass
class SweepResult:
    triples: int = 0
    fold_vs_alcoves: list = field(default_factory=list)
    fold_vs_bmw: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.fold_vs_alcoves and not self.fold_vs_bmw

    def merge(self, other):
        self.triples += other.triples
        self.fold_vs_alcoves.extend(other.fold_vs_alcoves)
        self.fold_vs_bmw.extend(other.fold_vs_bmw)
        return self


def sweep_task(task):
    """Check all ``(mu, nu)`` for one ``(level, lam)``."""
    level, lam = task
    out = SweepResult()
    weights = alcove_weights(level)
    for mu in weights:
        fold = fusion_decomposition(lam, mu, level, mode="fold")
        alcoves = fusion_decomposition(lam, mu, level, mode="alcoves")
        for nu in weights:
            kw = fold.get(nu, 0)
            alc = alcoves.get(nu, 0)
            g = bmw_fusion(lam, mu, nu, level)
            out.triples += 1
            case = (level, tuple(lam), tuple(mu), tuple(nu))
            if kw != alc:
                out.fold_vs_alcoves.append(case + (kw, alc))
            if kw != g:
                out.fold_vs_bmw.append(case + (kw, g))
    return out


def tasks(max_level, min_level=0):
    return [(level, lam) for level in range(min_level, max_level + 1) for lam in alcove_weights(level)]


def sweep(max_level, jobs=1, min_level=0):
    """Run the sweep for levels ``min_level..max_level``; results are order-stable."""
    work = tasks(max_level, min_level)
    result = SweepResult()
    if jobs > 1:
        with Pool(jobs) as pool:
            parts = pool.map(sweep_task, work, chunksize=4)
    else:
        parts = map(sweep_task, work)
    for part in parts:
        result.merge(part)
    result.fold_vs_alcoves.sort()
    result.fold_vs_bmw.sort()
    return result
