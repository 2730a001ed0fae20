import random
import pytest

from a2fusion.bmw import bmw_g
from a2fusion.cones import LinearForm, cses_add
from a2fusion.fusion import CONTRIBUTING_ALCOVES, fusion_decomposition
from a2fusion.multiplicity import mult
from a2fusion.rootsystem import AffineWeylWord, alcove_weights, dot_action
from a2fusion.symbolic import (
    VARIABLES,
    alcove_substitution,
    alcove_term,
    certificate,
    compare_piecewise,
    fusion_domain,
    var,
)

EXAMPLE = (4, 2, 3, 1, 2, 4, 7)


def test_domain():
    d = fusion_domain()
    assert d.contains(EXAMPLE)
    assert not d.contains((4, 2, 3, 1, 3, 5, 7))
    assert len(d.rows) == 9


def test_substitution_examples():
    a, b, c, d, e, f, l = (var(v) for v in VARIABLES)
    s = alcove_substitution(AffineWeylWord.parse("Id"))
    assert (s["x"], s["y"]) == (e - c, f - d)
    s = alcove_substitution("s0")
    assert (s["x"], s["y"]) == (l + 1 - f - c, l + 1 - e - d)
    s = alcove_substitution("s1")
    assert (s["x"], s["y"]) == (-e - 2 - c, e + f + 1 - d)
    with pytest.raises(ValueError):
        alcove_substitution("s0s1s2s0")


@pytest.mark.parametrize("word", CONTRIBUTING_ALCOVES, ids=str)
def test_substitution_matches_dot_action(word):
    rng = random.Random(str(word))
    sub = alcove_substitution(word)
    for _ in range(100):
        point = [rng.randint(-20, 20) for _ in VARIABLES]
        c, d, e, f, l = point[2:]
        x, y = dot_action(word, (e, f), l)
        assert (sub["x"](point), sub["y"](point)) == (x - c, y - d)


def test_identity_term_is_the_multiplicity():
    term = alcove_term(AffineWeylWord(()))
    assert term.evaluate(EXAMPLE) == mult((4, 2), (-1, 3))


@pytest.mark.parametrize("word", CONTRIBUTING_ALCOVES, ids=str)
def test_alcove_terms_pointwise(word):
    term = alcove_term(word)
    rng = random.Random(str(word) + "term")
    for _ in range(40):
        l = rng.randint(0, 9)
        ws = alcove_weights(l)
        (a, b), (c, d), (e, f) = rng.choice(ws), rng.choice(ws), rng.choice(ws)
        x, y = dot_action(word, (e, f), l)
        if (a + 2 * b - (x - c) - 2 * (y - d)) % 3:
            continue
        assert term.evaluate((a, b, c, d, e, f, l)) == word.sign * mult((a, b), (x - c, y - d))


def test_kac_walton_piece_count(kac_walton_result):
    assert kac_walton_result.nonzero_count == 27
    assert kac_walton_result.zero_count == len(kac_walton_result.pieces.zero_pieces())
    assert len(kac_walton_result.provenance) == 13


def test_kac_walton_examples(kac_walton_result):
    assert kac_walton_result.evaluate(EXAMPLE) == 2
    # nu = (3, 5) is outside the level-7 alcove, hence outside the domain.
    with pytest.raises(ValueError):
        kac_walton_result.evaluate((4, 2, 3, 1, 3, 5, 7))


def test_bmw_pieces(bmw_pieces):
    assert len(bmw_pieces.nonzero_pieces()) == 27
    assert bmw_pieces.evaluate(EXAMPLE) == 2


def anchor_points(max_level):
    pts = []
    for l in range(max_level + 1):
        ws = alcove_weights(l)
        for lam in ws:
            for mu in ws:
                for nu in ws:
                    if (lam[0] + mu[0] + nu[1] - lam[1] - mu[1] - nu[0]) % 3 == 0:
                        pts.append((*lam, *mu, *nu, l))
    return pts


@pytest.mark.parametrize("which", ["kac_walton", "bmw"])
def test_anchor_against_numeric_fusion(which, kac_walton_result, bmw_pieces):
    s = kac_walton_result.pieces if which == "kac_walton" else bmw_pieces
    pts = anchor_points(8)
    values = s.evaluate_many(pts)
    tables = {}
    for p, v in zip(pts, values):
        key = (p[0:2], p[2:4], p[6])
        if key not in tables:
            tables[key] = fusion_decomposition(p[0:2], p[2:4], p[6])
        assert v == tables[key].get(p[4:6], 0)
        assert v == bmw_g(p[0:2], p[2:4], p[4:6], p[6])


def test_results_are_partitions(kac_walton_result, bmw_pieces):
    assert kac_walton_result.pieces.check_partition().ok
    assert bmw_pieces.check_partition().ok


def test_comparison(kac_walton_result, bmw_pieces):
    report = compare_piecewise(kac_walton_result.pieces, bmw_pieces)
    assert report.equivalent and report.cones_match
    assert len(report.matching) == 27
    text = certificate(kac_walton_result.pieces, bmw_pieces, report)
    assert text.count("matched closed-formula piece") == 27


def test_comparison_finds_a_witness(bmw_pieces):
    one = LinearForm.const(VARIABLES, 1)
    from a2fusion.cones import ConeSupportedExpressionSet

    shifted = cses_add(bmw_pieces, ConeSupportedExpressionSet.constant(bmw_pieces.domain, 1))
    assert compare_piecewise(bmw_pieces, bmw_pieces).equivalent
    report = compare_piecewise(bmw_pieces, shifted)
    assert not report.equivalent
    w = report.witness
    assert shifted.evaluate(w) == bmw_pieces.evaluate(w) + one(w)
