import pytest
from hypothesis import given
from hypothesis import strategies as st

from a2fusion.rootsystem import Weight, dimension
from a2fusion.tensor import table_from_json, table_to_json, tensor_coefficient, tensor_decomposition

dominant = st.tuples(st.integers(0, 7), st.integers(0, 7))

EXAMPLE_ONES = {(0, 5), (1, 3), (1, 6), (2, 1), (3, 5), (4, 0), (5, 4), (7, 0), (7, 3), (8, 1)}
EXAMPLE_TWOS = {(2, 4), (3, 2), (4, 3), (5, 1), (6, 2)}


def test_worked_example():
    table = tensor_decomposition((4, 2), (3, 1))
    assert table == {**{w: 1 for w in EXAMPLE_ONES}, **{w: 2 for w in EXAMPLE_TWOS}}
    assert tensor_coefficient((4, 2), (3, 1), (2, 4)) == 2
    assert tensor_coefficient((4, 2), (3, 1), (3, 5)) == 1
    assert tensor_coefficient((4, 2), (3, 1), (6, 6)) == 0


def test_small_examples():
    assert tensor_decomposition((1, 0), (0, 1)) == {(0, 0): 1, (1, 1): 1}
    assert tensor_decomposition((0, 0), (0, 0)) == {(0, 0): 1}
    assert tensor_decomposition((1, 0), (1, 0)) == {(0, 1): 1, (2, 0): 1}
    assert tensor_decomposition((1, 1), (1, 1)) == {(0, 0): 1, (1, 1): 2, (3, 0): 1, (0, 3): 1, (2, 2): 1}


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        tensor_decomposition((1, -1), (0, 0))
    with pytest.raises(ValueError):
        tensor_coefficient((1, 0), (0, 0), (-1, 0))


@given(dominant)
def test_trivial_module_is_unit(lam):
    assert tensor_decomposition(lam, (0, 0)) == {Weight(*lam): 1}


@given(dominant, dominant)
def test_coefficient_matches_decomposition(lam, mu):
    table = tensor_decomposition(lam, mu)
    n = lam[0] + lam[1] + mu[0] + mu[1]
    for e in range(n + 1):
        for f in range(n + 1 - e):
            assert tensor_coefficient(lam, mu, (e, f)) == table.get((e, f), 0)


@given(dominant, dominant)
def test_symmetry(lam, mu):
    assert tensor_decomposition(lam, mu) == tensor_decomposition(mu, lam)


@given(dominant, dominant)
def test_conjugation(lam, mu):
    table = tensor_decomposition(lam, mu)
    conj = tensor_decomposition(lam[::-1], mu[::-1])
    assert conj == {Weight(f, e): n for (e, f), n in table.items()}


@given(dominant, dominant)
def test_support_lattice(lam, mu):
    # Every nu differs from lam + mu by an element of the root lattice.
    s = lam[0] + mu[0] + 2 * (lam[1] + mu[1])
    for e, f in tensor_decomposition(lam, mu):
        assert (s - e - 2 * f) % 3 == 0


def weights_up_to(n):
    return [(a, s - a) for s in range(n + 1) for a in range(s + 1)]


@pytest.mark.parametrize("lam", weights_up_to(10))
def test_dimension_conservation(lam):
    for mu in weights_up_to(10):
        table = tensor_decomposition(lam, mu)
        assert sum(n * dimension(nu) for nu, n in table.items()) == dimension(lam) * dimension(mu)


def test_json_round_trip():
    table = tensor_decomposition((4, 2), (3, 1))
    data = table_to_json(table)
    assert data[0] == {"nu": [0, 5], "N": 1}
    assert table_from_json(data) == table
