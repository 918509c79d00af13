"""
Shared fixtures for the Suites tests: small named graphs and validators that
check solver output without going through the solver's own helpers.
"""

import math

import pytest

import config
from listhom.graph_core import build_graph, complete_graph


def _path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def path_graph():
    """Factory: path 0-1-...-(n-1)."""
    return _path


@pytest.fixture
def cycle_graph():
    """Factory: cycle 0-1-...-(n-1)-0."""
    return _cycle


@pytest.fixture
def triangle():
    return _cycle(3)


@pytest.fixture
def two_k2():
    return build_graph(4, [(0, 1), (2, 3)])


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def scaled():
    """Scale an acceptance trial count by ACCEPTANCE_SCALE, keeping at least one trial."""

    def scale(count: int) -> int:
        return max(1, math.ceil(count * config.ACCEPTANCE_SCALE))

    return scale


@pytest.fixture
def check_witness():
    """Assert that f is a total map into V(h) that obeys lists and preserves every edge and loop."""

    def check(g, lists, h, f):
        assert f is not None
        assert len(f) == g.n
        for x, c in enumerate(f):
            assert 0 <= c < h.n
            assert c in lists[x], f"vertex {x} mapped to {c} outside its list"
        for u, v in g.edges:
            assert h.adjacent(f[u], f[v]), f"edge {u}-{v} not preserved"

    return check


@pytest.fixture
def check_provides():
    """
    Assert that chi (by layer position) provides for the edge s -> s2 of the
    configuration graph: it obeys the lists, avoids colour c on the first
    B(c) positions, and every colour not adjacent to chi(x) has B'(c) >= d+(x).
    """

    def check(g, lists, h, ordering, s, s2, chi):
        layer = ordering.order[s.i]
        assert len(chi) == len(layer)
        for j, (x, c) in enumerate(zip(layer, chi)):
            assert c in lists[x]
            assert s.bound[c] <= j
            for c2 in range(h.n):
                if (min(c, c2), max(c, c2)) not in h.edges:
                    assert s2.bound[c2] >= ordering.d_plus[x]
        for a, x in enumerate(layer):
            for b, y in enumerate(layer):
                if y in g.adjacency[x]:
                    assert h.adjacent(chi[a], chi[b])

    return check
