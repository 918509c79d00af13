"""
Undirected graphs with loops on the dense vertex set 0..n-1, plus the basic
queries the solver is built from: components, BFS distance layers, induced
subgraphs and homomorphism checks.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from listhom.errors import InvalidInput, NotConnected

Edge = Tuple[int, int]
Homomorphism = Tuple[int, ...]
ListMapping = Tuple[FrozenSet[int], ...]
IndexMap = Tuple[int, ...]  # new index -> old index


@dataclass(frozen=True)
class Graph:
    """
    Immutable undirected graph. Edges are stored as (u, v) with u <= v,
    so a loop is (u, u).
    """

    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[FrozenSet[int], ...] = field(compare=False, repr=False)

    def neighbours(self, u: int) -> FrozenSet[int]:
        return self.adjacency[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def has_loop(self, u: int) -> bool:
        return u in self.adjacency[u]

    @property
    def loops(self) -> FrozenSet[int]:
        return frozenset(u for u, v in self.edges if u == v)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """
    Build a normalized graph, collapsing duplicate pairs.

    Args:
        n (int): vertex count
        edge_list: pairs (u, v); u == v is a loop

    Returns:
        Graph: the normalized graph

    Raises:
        InvalidInput: negative n, a malformed pair, or an endpoint outside [0, n)
    """
    if n < 0:
        raise InvalidInput(f"Vertex count must be non-negative, got {n}")

    edges = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise InvalidInput(f"Edge {list(pair)} is not a pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput(f"Edge ({u}, {v}) has an endpoint outside [0, {n})")
        edges.add((u, v) if u <= v else (v, u))

    adjacency: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    return Graph(n, frozenset(edges), tuple(frozenset(nbrs) for nbrs in adjacency))


def complete_graph(k: int, loops: bool = False) -> Graph:
    """The complete graph K_k, with a loop on every vertex when loops is set."""
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    if loops:
        pairs.extend((a, a) for a in range(k))
    return build_graph(k, pairs)


def complement(g: Graph) -> Graph:
    """Simple complement: every non-loop pair not in g. Loops are dropped."""
    return build_graph(
        g.n,
        [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.adjacent(u, v)],
    )


def add_loops(g: Graph, vertices: Iterable[int]) -> Graph:
    """Return g with a loop added at each of the given vertices."""
    return build_graph(g.n, list(g.edges) + [(v, v) for v in vertices])


def connected_components(g: Graph) -> List[FrozenSet[int]]:
    """
    Partition the vertices into maximal connected sets.
    Components are listed by their smallest vertex. Loops do not matter.
    """
    seen = [False] * g.n
    components = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        component = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    component.append(v)
                    queue.append(v)
        components.append(frozenset(component))
    return components


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


@dataclass(frozen=True)
class DistanceLayers:
    """
    Distance layers L_0..L_z from start. Each layer is sorted by vertex index;
    layer_of[x] is the layer index of x.
    """

    start: int
    layers: Tuple[Tuple[int, ...], ...]
    layer_of: Tuple[int, ...]

    @property
    def z(self) -> int:
        return len(self.layers) - 1


def bfs_layers(g: Graph, v0: int) -> DistanceLayers:
    """
    Split the vertices of a connected graph by their distance from v0.

    Raises:
        InvalidInput: v0 out of range
        NotConnected: some vertex is unreachable from v0
    """
    if not 0 <= v0 < g.n:
        raise InvalidInput(f"Start vertex {v0} outside [0, {g.n})")

    layer_of = [-1] * g.n
    layer_of[v0] = 0
    layers = [[v0]]
    frontier = [v0]
    reached = 1
    while frontier:
        nxt = []
        depth = len(layers)
        for u in frontier:
            for v in g.adjacency[u]:
                if layer_of[v] < 0:
                    layer_of[v] = depth
                    nxt.append(v)
        if nxt:
            layers.append(nxt)
            reached += len(nxt)
        frontier = nxt

    if reached != g.n:
        missing = [x for x in range(g.n) if layer_of[x] < 0]
        raise NotConnected(f"Vertices {missing} are unreachable from {v0}")

    return DistanceLayers(v0, tuple(tuple(sorted(layer)) for layer in layers), tuple(layer_of))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, IndexMap]:
    """
    Subgraph of g induced by s, re-indexed to 0..|s|-1 in increasing order
    of the original indices.

    Returns:
        (Graph, IndexMap): the subgraph and old_vertex[new_index]
    """
    old = tuple(sorted(set(s)))
    new_of = {v: i for i, v in enumerate(old)}
    pairs = [
        (new_of[u], new_of[v])
        for u, v in g.edges
        if u in new_of and v in new_of
    ]
    return build_graph(len(old), pairs), old


def is_homomorphism(g: Graph, h: Graph, f: Sequence[int]) -> bool:
    """True iff f maps every edge of g (loops included) onto an edge of h."""
    if len(f) != g.n or any(not 0 <= c < h.n for c in f):
        return False
    return all(h.adjacent(f[u], f[v]) for u, v in g.edges)


def obeys_lists(f: Sequence[int], lists: Sequence[Iterable[int]]) -> bool:
    """Pointwise list membership."""
    return len(f) == len(lists) and all(c in allowed for c, allowed in zip(f, lists))


def full_lists(n: int, k: int) -> ListMapping:
    everything = frozenset(range(k))
    return tuple(everything for _ in range(n))


def normalize_lists(lists: Sequence[Iterable[int]], n: int, k: int) -> ListMapping:
    """
    Validate and freeze a list mapping for a graph on n vertices and a target on k.

    Raises:
        InvalidInput: wrong length or a colour outside [0, k)
    """
    if len(lists) != n:
        raise InvalidInput(f"Expected {n} lists, got {len(lists)}")
    frozen = []
    for x, allowed in enumerate(lists):
        colours = frozenset(int(c) for c in allowed)
        bad = [c for c in colours if not 0 <= c < k]
        if bad:
            raise InvalidInput(f"List of vertex {x} has colours {sorted(bad)} outside [0, {k})")
        frozen.append(colours)
    return tuple(frozen)


def restrict_lists(lists: ListMapping, old: IndexMap) -> ListMapping:
    return tuple(lists[v] for v in old)


def lift_map(image: Sequence[int], old: IndexMap, into: List[Optional[int]]) -> None:
    """Write a map on an induced subgraph back into a map on the parent graph."""
    for new_index, colour in enumerate(image):
        into[old[new_index]] = colour
