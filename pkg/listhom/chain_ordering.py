"""
Multi-chain orderings: BFS distance layers in which every pair of consecutive
layers induces a chain graph across the boundary.

Within a layer, vertices are ordered by decreasing d- (neighbours in the
previous layer), ties by increasing index. In a chain graph this makes the
neighbours in L_{i+1} of any x in L_i exactly the first d+(x) vertices of
L_{i+1}, which is the property checked here and used by the solver.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from listhom.errors import InvalidInput, NotConnected
from listhom.graph_core import DistanceLayers, Graph, bfs_layers, is_connected

logger = logging.getLogger(__name__)

START_HINTS = ("first", "last")


@dataclass(frozen=True)
class MultiChainOrdering:
    """
    A verified multi-chain ordering of a connected graph.

    Attributes:
        layers: the BFS distance layers from the start vertex
        order: per layer, vertices by decreasing d_minus (ties by index)
        d_minus: neighbours of x in the previous layer (0 on L_0)
        d_plus: neighbours of x in the next layer (0 on L_z)
        position: 0-based position of x within its ordered layer
    """

    layers: DistanceLayers
    order: Tuple[Tuple[int, ...], ...]
    d_minus: Tuple[int, ...]
    d_plus: Tuple[int, ...]
    position: Tuple[int, ...]

    @property
    def start(self) -> int:
        return self.layers.start

    @property
    def z(self) -> int:
        return self.layers.z

    def layer_sizes(self) -> List[int]:
        return [len(layer) for layer in self.order]


def _sort_by_degree(vertices: Sequence[int], degree: Sequence[int]) -> Tuple[int, ...]:
    """Counting sort by decreasing degree; ties keep increasing vertex index."""
    if not vertices:
        return ()
    top = max(degree[x] for x in vertices)
    buckets: List[List[int]] = [[] for _ in range(top + 1)]
    for x in sorted(vertices):
        buckets[degree[x]].append(x)
    return tuple(x for bucket in reversed(buckets) for x in bucket)


def is_chain_between(g: Graph, a: Sequence[int], b: Sequence[int]) -> bool:
    """
    True iff the cross edges between the disjoint sets a and b form a chain
    graph, i.e. the neighbourhoods in b of the vertices of a are nested.

    Uses the degree-sorted prefix test: after sorting b by decreasing number
    of neighbours in a, every N(x) ∩ b must be a prefix.
    """
    a_set = set(a)
    b_set = set(b)
    degree = {y: sum(1 for x in g.adjacency[y] if x in a_set) for y in b_set}
    ranked = _sort_by_degree(list(b_set), degree)
    rank = {y: i for i, y in enumerate(ranked)}
    for x in a_set:
        across = [y for y in g.adjacency[x] if y in b_set]
        if any(rank[y] >= len(across) for y in across):
            return False
    return True


def ordering_from(g: Graph, v0: int) -> Optional[MultiChainOrdering]:
    """
    Check whether the distance layers from v0 form a multi-chain ordering.
    Runs in O(n + m).

    Returns:
        MultiChainOrdering or None

    Raises:
        NotConnected: g is disconnected
    """
    layers = bfs_layers(g, v0)
    layer_of = layers.layer_of
    d_minus = [0] * g.n
    d_plus = [0] * g.n
    for u in range(g.n):
        lu = layer_of[u]
        for v in g.adjacency[u]:
            lv = layer_of[v]
            if lv == lu - 1:
                d_minus[u] += 1
            elif lv == lu + 1:
                d_plus[u] += 1

    order = tuple(_sort_by_degree(layer, d_minus) for layer in layers.layers)
    position = [0] * g.n
    for layer in order:
        for j, x in enumerate(layer):
            position[x] = j

    # neighbours in the next layer must come before the non-neighbours
    for i in range(layers.z):
        for x in order[i]:
            limit = d_plus[x]
            for y in g.adjacency[x]:
                if layer_of[y] == i + 1 and position[y] >= limit:
                    logger.debug("[ORDER] start %d fails at layer %d, vertex %d", v0, i, x)
                    return None

    return MultiChainOrdering(layers, order, tuple(d_minus), tuple(d_plus), tuple(position))


def find_ordering(g: Graph, hint: Optional[int] = None) -> Optional[MultiChainOrdering]:
    """
    Search for a multi-chain ordering by trying BFS from every vertex.
    The hint is tried first, then every vertex in increasing index order.

    Raises:
        NotConnected: g is empty or disconnected
    """
    if not is_connected(g):
        raise NotConnected(f"Graph on {g.n} vertices is not connected")

    if hint is not None:
        ordering = ordering_from(g, hint)
        if ordering is not None:
            return ordering
        logger.debug("[ORDER] hint %d rejected, falling back to full search", hint)

    for v in range(g.n):
        if v == hint:
            continue
        ordering = ordering_from(g, v)
        if ordering is not None:
            return ordering
    return None


def hint_vertex(g: Graph, start_hint: Optional[str]) -> Optional[int]:
    """Translate a start hint ("first", "last" or None) into a vertex of g."""
    if start_hint is None or g.n == 0:
        return None
    if start_hint == "first":
        return 0
    if start_hint == "last":
        return g.n - 1
    raise InvalidInput(f"Unknown start hint {start_hint!r}; expected one of {START_HINTS}")


def permutation_start_vertex(n: int) -> int:
    """
    Start vertex for a graph built by permutation_graph: x_n (index n-1).

    With edges {i<j, pi(i)<pi(j)} oriented i->j and non-edges
    {i<j, pi(i)>pi(j)} oriented i->j, both orientations are transitive and
    the largest index is a sink in both.
    """
    if n < 1:
        raise InvalidInput("Permutation graph must have at least one vertex")
    return n - 1


def interval_start_vertex(intervals: Iterable[Sequence[float]]) -> int:
    """
    Index of the interval with the leftmost left endpoint.

    Raises:
        InvalidInput: empty input or repeated endpoints
    """
    intervals = [tuple(interval) for interval in intervals]
    if not intervals:
        raise InvalidInput("No intervals given")
    endpoints = [point for interval in intervals for point in interval]
    if len(set(endpoints)) != len(endpoints):
        raise InvalidInput("Interval endpoints must be pairwise distinct")
    return min(range(len(intervals)), key=lambda i: intervals[i][0])


def verify_ordering(g: Graph, ordering: MultiChainOrdering) -> List[str]:
    """
    Check every MultiChainOrdering invariant independently of ordering_from.

    Returns:
        list[str]: human-readable violations, empty when the ordering is sound
    """
    problems = []
    expected = bfs_layers(g, ordering.start)
    if [set(layer) for layer in expected.layers] != [set(layer) for layer in ordering.order]:
        problems.append("layers differ from BFS distance layers")
        return problems

    layer_of = expected.layer_of
    for i, layer in enumerate(ordering.order):
        for x in layer:
            before = sum(1 for y in g.adjacency[x] if layer_of[y] == i - 1)
            after = sum(1 for y in g.adjacency[x] if layer_of[y] == i + 1)
            if before != ordering.d_minus[x] or after != ordering.d_plus[x]:
                problems.append(f"degree table wrong at vertex {x}")
        degrees = [ordering.d_minus[x] for x in layer]
        if any(a < b for a, b in zip(degrees, degrees[1:])):
            problems.append(f"layer {i} is not sorted by decreasing d-")

    for i in range(ordering.z):
        current, following = ordering.order[i], ordering.order[i + 1]
        prefix_of = {y: j for j, y in enumerate(following)}
        for x in current:
            across = sorted(prefix_of[y] for y in g.adjacency[x] if y in prefix_of)
            if across != list(range(ordering.d_plus[x])):
                problems.append(f"neighbours of {x} are not a prefix of layer {i + 1}")
        if not is_chain_between(g, current, following):
            problems.append(f"layers {i} and {i + 1} do not form a chain graph")
        if not any(ordering.d_plus[x] == len(following) for x in current):
            problems.append(f"no vertex of layer {i} sees all of layer {i + 1}")

    return problems
