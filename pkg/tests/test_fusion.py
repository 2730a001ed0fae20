import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a2fusion.fusion import (
    CONTRIBUTING_ALCOVES,
    contributing_alcoves,
    fusion_coefficient,
    fusion_decomposition,
)
from a2fusion.multiplicity import weight_diagram
from a2fusion.rootsystem import AffineWeylWord, Weight, alcove_weights, dot_action
from a2fusion.tensor import tensor_decomposition


@st.composite
def level_pair(draw, max_level=9):
    level = draw(st.integers(0, max_level))
    weights = alcove_weights(level)
    return level, draw(st.sampled_from(weights)), draw(st.sampled_from(weights))


def test_worked_example():
    expected = {w: 1 for w in [(0, 5), (1, 3), (1, 6), (2, 1), (4, 0), (4, 3), (5, 1)]}
    expected.update({(2, 4): 2, (3, 2): 2})
    for mode in ("fold", "alcoves"):
        assert fusion_decomposition((4, 2), (3, 1), 7, mode=mode) == expected
    assert fusion_coefficient((4, 2), (3, 1), (2, 4), 7) == 2


def test_nu_outside_the_alcove_gives_zero():
    assert fusion_coefficient((4, 2), (3, 1), (3, 5), 7) == 0
    assert fusion_coefficient((4, 2), (3, 1), (3, 5), 7, mode="fold") == 0


def test_input_errors():
    with pytest.raises(ValueError):
        fusion_decomposition((5, 3), (0, 0), 7)
    with pytest.raises(ValueError):
        fusion_coefficient((1, 0), (0, 0), (-1, 2), 3)
    with pytest.raises(ValueError):
        fusion_decomposition((0, 0), (0, 0), 0, mode="bogus")


def test_level_one():
    assert fusion_decomposition((1, 0), (1, 0), 1) == {(0, 1): 1}


def test_large_level_is_tensor():
    assert fusion_decomposition((4, 2), (3, 1), 100) == tensor_decomposition((4, 2), (3, 1))


def test_contributing_words():
    words = contributing_alcoves()
    assert len(words) == 13 == len(set(words))
    assert AffineWeylWord.parse("s0s2s0").sign == -1
    assert AffineWeylWord.parse("Id") in words
    assert sum(w.sign for w in words) == 1


def test_other_alcoves_never_see_the_diagram():
    # Every shifted word of length <= 4 outside the list misses the translated
    # diagram for all (lam, mu, nu) at small levels.
    words = {AffineWeylWord(())}
    frontier = set(words)
    for _ in range(4):
        frontier = {AffineWeylWord((i,) + w.letters) for w in frontier for i in (0, 1, 2)}
        words |= frontier
    rng = random.Random(7)
    for _ in range(300):
        level = rng.randint(0, 8)
        ws = alcove_weights(level)
        lam, mu, nu = rng.choice(ws), rng.choice(ws), rng.choice(ws)
        diagram = weight_diagram(lam)
        hit = {
            dot_action(w, nu, level)
            for w in words
            if (dot_action(w, nu, level) - mu) in diagram
        }
        allowed = {dot_action(w, nu, level) for w in CONTRIBUTING_ALCOVES}
        assert hit <= allowed


@given(level_pair())
def test_modes_agree(args):
    level, lam, mu = args
    assert fusion_decomposition(lam, mu, level, "fold") == fusion_decomposition(lam, mu, level, "alcoves")


@given(level_pair())
def test_fusion_bounded_by_tensor(args):
    level, lam, mu = args
    tensor = tensor_decomposition(lam, mu)
    for nu, n in fusion_decomposition(lam, mu, level).items():
        assert n <= tensor.get(nu, 0)


@given(st.tuples(st.integers(0, 5), st.integers(0, 5)), st.tuples(st.integers(0, 5), st.integers(0, 5)))
def test_stabilization(lam, mu):
    level = sum(lam) + sum(mu)
    assert fusion_decomposition(lam, mu, level) == tensor_decomposition(lam, mu)


@given(level_pair())
def test_symmetry_and_conjugation(args):
    level, lam, mu = args
    table = fusion_decomposition(lam, mu, level)
    assert fusion_decomposition(mu, lam, level) == table
    conj = fusion_decomposition(lam[::-1], mu[::-1], level)
    assert conj == {Weight(f, e): n for (e, f), n in table.items()}


@given(level_pair())
def test_vacuum(args):
    level, lam, _ = args
    assert fusion_decomposition(lam, (0, 0), level) == {Weight(*lam): 1}
    assert fusion_coefficient(lam, (0, 0), lam, level) == 1


@given(level_pair(6))
def test_coefficient_matches_decomposition(args):
    level, lam, mu = args
    table = fusion_decomposition(lam, mu, level)
    for nu in alcove_weights(level):
        assert fusion_coefficient(lam, mu, nu, level) == table.get(nu, 0)
