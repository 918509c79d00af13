import pytest
from hypothesis import given, settings, strategies as st

from listhom.brute_oracle import brute_force, count_homomorphisms
from listhom.errors import SizeLimitExceeded
from listhom.graph_core import build_graph, complete_graph, full_lists, is_homomorphism, obeys_lists
from listhom.instance_gen import random_instance


def test_first_witness_is_lexicographic(cycle_graph, k2):
    assert brute_force(cycle_graph(4), full_lists(4, 2), k2) == (0, 1, 0, 1)


def test_no_witness(cycle_graph, k2):
    assert brute_force(cycle_graph(3), full_lists(3, 2), k2) is None
    assert brute_force(build_graph(1, [(0, 0)]), [[0]], complete_graph(1)) is None


def test_lists_are_respected(path_graph, k3):
    assert brute_force(path_graph(3), [[1], [1, 2], [0, 1]], k3) == (1, 2, 0)


@pytest.mark.parametrize(
    "g, h, expected",
    [
        (build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), complete_graph(2), 2),
        (build_graph(1, []), complete_graph(3), 3),
        (build_graph(2, [(0, 1)]), complete_graph(3), 6),
    ],
)
def test_count(g, h, expected):
    assert count_homomorphisms(g, full_lists(g.n, h.n), h) == expected


def test_size_cap(path_graph, k2):
    with pytest.raises(SizeLimitExceeded):
        brute_force(path_graph(21), full_lists(21, 2), k2)
    with pytest.raises(SizeLimitExceeded):
        count_homomorphisms(path_graph(5), full_lists(5, 2), k2, max_n=4)


@settings(deadline=None, max_examples=100)
@given(
    seed=st.integers(min_value=0, max_value=2**40),
    n=st.integers(min_value=1, max_value=7),
    density=st.sampled_from([0.3, 0.6, 1.0]),
)
def test_witness_exists_iff_count_positive(seed, n, density):
    instance = random_instance(seed, n, 3, density, "arbitrary_small", target="random", graph_loops=0.2, target_loops=0.3)
    g, lists, h = instance.graph, instance.lists, instance.target
    witness = brute_force(g, lists, h)
    total = count_homomorphisms(g, lists, h)
    assert (witness is not None) == (total > 0)
    if witness is not None:
        assert is_homomorphism(g, h, witness)
        assert obeys_lists(witness, lists)
