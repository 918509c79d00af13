import pytest
from hypothesis import given, settings, strategies as st

from listhom.brute_oracle import brute_force
from listhom.errors import InvalidInput
from listhom.graph_core import complete_graph, full_lists
from listhom.homomorphism_solver import lh_solve
from listhom.instance_gen import (
    IntervalSpec,
    PermutationSpec,
    SplitMix64,
    counterexample,
    interval_graph,
    permutation_graph,
    random_instance,
    random_intervals,
    random_permutation,
)


def test_splitmix_reference_value():
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_splitmix_ranges():
    rng = SplitMix64(42)
    draws = [rng.below(7) for _ in range(200)]
    assert min(draws) >= 0 and max(draws) < 7
    assert all(0.0 <= rng.random() < 1.0 for _ in range(200))
    items = list(range(10))
    rng.shuffle(items)
    assert sorted(items) == list(range(10))


def test_permutation_graphs():
    assert permutation_graph(PermutationSpec((0, 1, 2))) == complete_graph(3)
    assert not permutation_graph(PermutationSpec((2, 1, 0))).edges
    g = permutation_graph(PermutationSpec.from_one_based([2, 1, 4, 3]))
    assert g.edges == frozenset({(0, 2), (0, 3), (1, 2), (1, 3)})


def test_permutation_spec_validation():
    with pytest.raises(InvalidInput):
        PermutationSpec((0, 0, 1))
    assert PermutationSpec.from_one_based([3, 1, 2]).one_based() == [3, 1, 2]


def test_interval_graphs():
    assert interval_graph(IntervalSpec(((0, 3), (1, 2)))).edges == frozenset({(0, 1)})
    assert not interval_graph(IntervalSpec(((0, 1), (2, 3)))).edges
    assert interval_graph(IntervalSpec(((0, 2), (1, 4), (3, 5)))).edges == frozenset({(0, 1), (1, 2)})


@pytest.mark.parametrize("intervals", [((1, 1),), ((0, 2), (2, 3)), ((3, 1),)])
def test_interval_spec_validation(intervals):
    with pytest.raises(InvalidInput):
        IntervalSpec(intervals)


def test_counterexamples():
    c5 = counterexample("cycle", 5)
    assert c5.n == 5 and len(c5.edges) == 5
    claw = counterexample("subdivided_claw")
    assert claw.n == 7 and len(claw.edges) == 6
    assert sorted((len(claw.neighbours(v)) for v in claw.vertices), reverse=True) == [3, 2, 2, 2, 1, 1, 1]
    co6 = counterexample("co_cycle", 6)
    assert all(len(co6.neighbours(v)) == 3 for v in co6.vertices)
    co_claw = counterexample("co_subdivided_claw")
    assert len(co_claw.edges) == 21 - 6


@pytest.mark.parametrize("name, n", [("cycle", 2), ("cycle", None), ("wheel", 5)])
def test_counterexample_errors(name, n):
    with pytest.raises(InvalidInput):
        counterexample(name, n)


def test_random_instance_full_lists():
    instance = random_instance(1, 6, 3, 1.0, "permutation")
    assert instance.lists == full_lists(6, 3)
    assert instance.target == complete_graph(3)
    assert instance.start_hint == "last"
    assert instance.family == "permutation"


def test_random_instance_is_deterministic():
    first = random_instance(11, 9, 4, 0.5, "interval", target="random", graph_loops=0.2, target_loops=0.3)
    second = random_instance(11, 9, 4, 0.5, "interval", target="random", graph_loops=0.2, target_loops=0.3)
    assert first == second
    assert first.start_hint == "first"


def test_random_interval_instance_agrees_with_oracle():
    instance = random_instance(2, 8, 3, 0.5, "interval")
    result = lh_solve(instance.graph, instance.lists, instance.target, start_hint=instance.start_hint)
    assert result.answer == (brute_force(instance.graph, instance.lists, instance.target) is not None)


@pytest.mark.parametrize(
    "args",
    [
        (1, 5, 3, 0.0, "permutation"),
        (1, 5, 3, 1.5, "permutation"),
        (1, 0, 3, 1.0, "permutation"),
        (1, 5, 3, 1.0, "chordal"),
        (1, 50, 3, 1.0, "arbitrary_small"),
    ],
)
def test_random_instance_errors(args):
    with pytest.raises(InvalidInput):
        random_instance(*args)


def test_random_intervals_numbered_by_left_endpoint():
    layout = random_intervals(SplitMix64(5), 12)
    lefts = [left for left, _ in layout.intervals]
    assert lefts == sorted(lefts)


@settings(deadline=None, max_examples=100)
@given(seed=st.integers(min_value=0, max_value=2**40), n=st.integers(min_value=1, max_value=25))
def test_permutation_edges_are_non_inversions(seed, n):
    layout = random_permutation(SplitMix64(seed), n)
    g = permutation_graph(layout)
    non_inversions = sum(1 for i in range(n) for j in range(i + 1, n) if layout.pi[i] < layout.pi[j])
    assert len(g.edges) == non_inversions
    assert not g.loops


@settings(deadline=None, max_examples=100)
@given(seed=st.integers(min_value=0, max_value=2**40), n=st.integers(min_value=1, max_value=25))
def test_interval_graphs_are_simple(seed, n):
    g = interval_graph(random_intervals(SplitMix64(seed), n))
    assert not g.loops
    assert g.n == n
