"""Symbolic evaluation of the Kac-Walton sum over the 13 contributing alcoves.

Everything lives in the seven variables ``(a, b, c, d, e, f, l)`` for
``lam = (a, b)``, ``mu = (c, d)``, ``nu = (e, f)`` and the level ``l``, on
the domain where all three weights lie in the level-``l`` alcove.  The sum
``sum_w sgn(w) m_lam(w . nu - mu)`` is built by pulling the 14-piece
multiplicity table back along each alcove substitution and accumulating
with simplification after every step.  The result is then compared piece
by piece with the closed formula ``max(0, l0max - k0min + 1)``.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cones import (
    Cone,
    ConeSupportedExpression,
    ConeSupportedExpressionSet,
    LinearForm,
    cses_add,
    cses_scale,
    cses_simplify,
    pullback,
)
from .cones.core import _full_dim, _overlap_cone, _split_off, _witness, negate
from .fusion import CONTRIBUTING_ALCOVES
from .multiplicity import mult_piecewise_table
from .rootsystem import AffineWeylWord, dot_generator

log = logging.getLogger(__name__)

VARIABLES = ("a", "b", "c", "d", "e", "f", "l")


def var(name):
    return LinearForm.variable(VARIABLES, name)


def fusion_domain():
    """``a..f >= 0`` and ``a+b, c+d, e+f <= l`` (so ``l >= 0``), irredundant."""
    a, b, c, d, e, f, l = (var(v) for v in VARIABLES)
    rows = [a, b, c, d, e, f, l - a - b, l - c - d, l - e - f, l]
    return Cone(VARIABLES, rows).reduce()


def alcove_substitution(word):
    """Affine map ``(x, y, a, b) <- (w . (e, f) - (c, d), a, b)`` for a contributing word."""
    if not isinstance(word, AffineWeylWord):
        word = AffineWeylWord.parse(word) if isinstance(word, str) else AffineWeylWord(tuple(word))
    if word not in CONTRIBUTING_ALCOVES:
        raise ValueError(f"{word} is not one of the 13 contributing words")
    x, y = var("e"), var("f")
    for i in reversed(word.letters):
        x, y = dot_generator(i, x, y, var("l"))
    return {"x": x - var("c"), "y": y - var("d"), "a": var("a"), "b": var("b")}


@dataclass
class SymbolicFusionResult:
    pieces: ConeSupportedExpressionSet
    nonzero_count: int
    zero_count: int
    provenance: list = field(default_factory=list)
    elapsed: float = 0.0

    def evaluate(self, point):
        return self.pieces.evaluate(point)


def alcove_term(word, table=None, domain=None):
    """``sgn(w) m_lam(w . nu - mu)`` as a cone-supported expression set."""
    table = mult_piecewise_table() if table is None else table
    domain = fusion_domain() if domain is None else domain
    term = pullback(table, alcove_substitution(word), domain)
    return cses_scale(term, word.sign) if word.sign < 0 else term


def symbolic_kac_walton(progress=None):
    """Accumulate the 13 alcove terms in the listed order, simplifying after each."""
    start = time.perf_counter()
    table = mult_piecewise_table()
    domain = fusion_domain()
    acc = ConeSupportedExpressionSet.constant(domain, 0)
    provenance = []
    for word in CONTRIBUTING_ALCOVES:
        t0 = time.perf_counter()
        term = alcove_term(word, table, domain)
        raw = cses_add(acc, term)
        acc = cses_simplify(raw)
        entry = {
            "word": str(word),
            "sign": word.sign,
            "substitution": {k: str(v) for k, v in alcove_substitution(word).items() if k in "xy"},
            "term_pieces": len(term),
            "refined_pieces": len(raw),
            "pieces": len(acc),
            "nonzero": len(acc.nonzero_pieces()),
            "seconds": round(time.perf_counter() - t0, 3),
        }
        provenance.append(entry)
        log.info("%(word)s: %(term_pieces)d term pieces, %(pieces)d after simplify", entry)
        if progress is not None:
            progress(entry)
    acc = acc.sorted()
    return SymbolicFusionResult(
        acc,
        len(acc.nonzero_pieces()),
        len(acc.zero_pieces()),
        provenance,
        time.perf_counter() - start,
    )


def bmw_terms():
    """The nine ``k0min`` candidates and three ``l0max`` candidates as forms."""
    a, b, c, d, e, f, l = (var(v) for v in VARIABLES)
    A = (2 * (a + c + f) + (b + d + e)) * Fraction(1, 3)
    B = ((a + c + f) + 2 * (b + d + e)) * Fraction(1, 3)
    k_terms = [
        ("a+b", a + b), ("c+d", c + d), ("e+f", e + f),
        ("A-a", A - a), ("A-c", A - c), ("A-f", A - f),
        ("B-b", B - b), ("B-d", B - d), ("B-e", B - e),
    ]
    l_terms = [("A", A), ("B", B), ("l", l)]
    return k_terms, l_terms


def complement_cells(region, cones):
    """Full-dimensional cells partitioning ``region`` minus the union of ``cones``."""
    n = region.dim
    cells = [region.rows]
    for cone in cones:
        nxt = []
        for cell in cells:
            if _overlap_cone(Cone(region.variables, cell), cone) is None:
                nxt.append(cell)
            else:
                nxt.extend(_split_off(cell, cone.rows, n))
        cells = nxt
    return [Cone(region.variables, cell).reduce() for cell in cells]


def bmw_symbolic(simplify=True):
    """The closed formula as a cone-supported expression set.

    One nonzero piece per choice of binding ``k0min`` term and binding
    ``l0max`` term, cut down by ``l0max - k0min + 1 >= 0``; the rest of the
    domain is tiled by zero pieces.
    """
    domain = fusion_domain()
    k_terms, l_terms = bmw_terms()
    pieces = []
    labels = []
    for kname, k in k_terms:
        for lname, lv in l_terms:
            rows = list(domain.inequalities)
            rows += [k - other for _, other in k_terms if other is not k]
            rows += [other - lv for _, other in l_terms if other is not lv]
            expr = lv - k + 1
            rows.append(expr)
            cone = Cone(VARIABLES, rows)
            if cone.is_full_dimensional():
                pieces.append(ConeSupportedExpression(cone.reduce(), expr))
                labels.append((kname, lname))
    zero = LinearForm.const(VARIABLES, 0)
    for cell in complement_cells(domain, [p.cone for p in pieces]):
        pieces.append(ConeSupportedExpression(cell, zero))
    result = ConeSupportedExpressionSet(VARIABLES, domain, pieces)
    if simplify:
        result = cses_simplify(result)
    return result.sorted()


@dataclass
class ComparisonReport:
    equivalent: bool
    witness: tuple | None = None
    mismatch: tuple | None = None
    matching: list = field(default_factory=list)
    cones_match: bool = False

    def summary(self):
        if self.equivalent:
            return (
                f"equivalent; {len(self.matching)} nonzero pieces matched, "
                f"cones {'identical' if self.cones_match else 'differ'}"
            )
        return f"NOT equivalent; witness {tuple(str(c) for c in self.witness)}"


def compare_piecewise(f, g):
    """Check that two piecewise functions agree on every full-dimensional overlap.

    Also reports, for each nonzero piece of ``f``, the pieces of ``g`` it
    overlaps, and whether the nonzero pieces coincide one-to-one as cones.
    """
    f._check(g)
    n = f.dim
    overlaps = {}
    for i, p in enumerate(f.pieces):
        neg = {negate(r) for r in p.cone.rows}
        for j, q in enumerate(g.pieces):
            same = p.expression == q.expression
            if same and p.expression.is_zero():
                continue
            if neg.intersection(q.cone.rows):
                continue
            rows = p.cone.rows + q.cone.rows
            if not _full_dim(rows, n):
                continue
            if not same:
                w = _witness(rows, n)
                return ComparisonReport(False, witness=w, mismatch=(i, j))
            overlaps.setdefault(i, []).append(j)
    matching = [(i, overlaps.get(i, [])) for i, p in enumerate(f.pieces) if not p.expression.is_zero()]
    g_nonzero = [j for j, q in enumerate(g.pieces) if not q.expression.is_zero()]
    cones_match = (
        len(matching) == len(g_nonzero)
        and all(len(js) == 1 for _, js in matching)
        and sorted(js[0] for _, js in matching) == g_nonzero
        and all(f.pieces[i].cone.rows == g.pieces[js[0]].cone.rows for i, js in matching)
    )
    return ComparisonReport(True, matching=matching, cones_match=cones_match)


def certificate(kw, bmw, report):
    """Plain-text proof certificate listing every matched nonzero piece."""
    lines = [
        "Symbolic Kac-Walton vs closed formula",
        f"variables: {', '.join(VARIABLES)}",
        f"domain: {kw.domain}",
        f"result: {report.summary()}",
        f"Kac-Walton pieces: {len(kw.nonzero_pieces())} nonzero, {len(kw.zero_pieces())} zero",
        f"closed-formula pieces: {len(bmw.nonzero_pieces())} nonzero, {len(bmw.zero_pieces())} zero",
        "",
    ]
    for k, (i, js) in enumerate(report.matching, 1):
        p = kw.pieces[i]
        lines.append(f"[{k}] expression: {p.expression}")
        for form in p.cone.inequalities:
            lines.append(f"      {form} >= 0")
        for j in js:
            same = "identical cone" if bmw.pieces[j].cone.rows == p.cone.rows else "overlapping cone"
            lines.append(f"      matched closed-formula piece {j}: {bmw.pieces[j].expression} ({same})")
        lines.append("")
    return "\n".join(lines)
