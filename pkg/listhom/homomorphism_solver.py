"""
List H-colouring for graphs whose connected induced subgraphs have
multi-chain orderings.

The solver reduces the target (unused colours, universal vertices), splits G
into components, answers |V(H)| <= 2 and single-vertex instances directly,
and otherwise walks the layered configuration graph of a multi-chain
ordering. An edge (i, B) -> (i+1, B') exists iff the layer subgraph G_i has a
homomorphism obeying the reduced lists P', which is decided by a recursive
call on a strictly smaller target. The providing homomorphisms along one
S_0 -> S_{z+1} path are stitched into the returned witness.
"""

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from listhom.chain_ordering import MultiChainOrdering, find_ordering, hint_vertex
from listhom.errors import InternalError, InvalidInput, NotInClass, SizeLimitExceeded
from listhom.graph_core import (
    Graph,
    Homomorphism,
    IndexMap,
    ListMapping,
    connected_components,
    induced_subgraph,
    is_homomorphism,
    lift_map,
    normalize_lists,
    obeys_lists,
    restrict_lists,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Configuration:
    """
    Node (i, B) of the configuration graph. bound[c] is the length of the
    prefix of the ordered layer L_i that avoids colour c.
    """

    i: int
    bound: Tuple[int, ...]

    def is_valid(self, layer_size: int, z: int) -> bool:
        if self.i == 0 or self.i == z + 1:
            return all(b == 0 for b in self.bound)
        return 0 in self.bound and layer_size in self.bound and all(
            0 <= b <= layer_size for b in self.bound
        )

    def label(self) -> str:
        return f"({self.i}, {list(self.bound)})"


@dataclass
class SolverStats:
    """Counters shared by one top-level solve and all its recursive calls."""

    recursive_calls: int = 0
    edge_tests: int = 0
    cache_hits: int = 0
    configurations: int = 0
    max_depth: int = 0
    # level_targets[d] is the largest target swept at nesting level d + 1
    level_targets: List[int] = field(default_factory=list)
    _depth: int = field(default=0, repr=False)

    @contextmanager
    def sweep_level(self, k: int):
        """Track one configuration sweep over a target with k vertices."""
        self._depth += 1
        self.max_depth = max(self.max_depth, self._depth)
        if len(self.level_targets) < self._depth:
            self.level_targets.append(k)
        else:
            self.level_targets[self._depth - 1] = max(self.level_targets[self._depth - 1], k)
        try:
            yield
        finally:
            self._depth -= 1

    def as_dict(self) -> Dict[str, int]:
        return {
            "recursive_calls": self.recursive_calls,
            "edge_tests": self.edge_tests,
            "cache_hits": self.cache_hits,
            "configurations": self.configurations,
            "max_depth": self.max_depth,
        }


@dataclass(frozen=True)
class SolveResult:
    answer: bool
    witness: Optional[Homomorphism] = None
    stats: Optional[SolverStats] = field(default=None, compare=False)


FALSE = SolveResult(False)


class UniversalReduction(NamedTuple):
    colour: int
    graph: Graph
    lists: ListMapping
    kept: IndexMap


class ConfigurationPath(NamedTuple):
    nodes: List[Configuration]
    witnesses: List[Tuple[int, ...]]  # one providing map per edge, by layer position


@dataclass
class ConfigurationGraph:
    """
    Layered configuration graph of one connected component.

    Attributes:
        nodes: nodes[t] lists the configurations with layer index t, 0..z+1
        edges: realised edge -> providing homomorphism on L_i, by layer position
    """

    ordering: MultiChainOrdering
    k: int
    nodes: List[List[Configuration]]
    edges: Dict[Tuple[Configuration, Configuration], Tuple[int, ...]]

    @property
    def source(self) -> Configuration:
        return self.nodes[0][0]

    @property
    def sink(self) -> Configuration:
        return self.nodes[-1][0]

    def node_count(self) -> int:
        return sum(len(layer) for layer in self.nodes)

    def successors(self) -> Dict[Configuration, List[Configuration]]:
        out: Dict[Configuration, List[Configuration]] = {}
        for s, s2 in self.edges:
            out.setdefault(s, []).append(s2)
        return out

    def to_dot(self, path: Optional[ConfigurationPath] = None) -> str:
        """Render as Graphviz DOT; edges on the given path are drawn bold."""
        ids = {}
        lines = ["digraph configurations {", "  rankdir=LR;", "  node [shape=box, fontsize=10];"]
        last = len(self.nodes) - 1
        for t, layer in enumerate(self.nodes):
            lines.append(f"  subgraph layer_{t} {{ rank=same;")
            for s in layer:
                ids[s] = f"c{len(ids)}"
                if t == 0 or t == last:
                    name = "S_0" if t == 0 else f"S_{last}"
                    lines.append(f'    {ids[s]} [label="{name}\\n{s.label()}", shape=doublecircle];')
                else:
                    lines.append(f'    {ids[s]} [label="{s.label()}"];')
            lines.append("  }")
        on_path = set()
        if path is not None:
            on_path = set(zip(path.nodes, path.nodes[1:]))
        for (s, s2), chi in sorted(self.edges.items(), key=lambda item: (ids[item[0][0]], ids[item[0][1]])):
            style = ", style=bold" if (s, s2) in on_path else ""
            lines.append(f'  {ids[s]} -> {ids[s2]} [label="{list(chi)}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@contextmanager
def _lifting(index_map: IndexMap):
    """Translate NotInClass vertex sets from a subgraph back to its parent."""
    try:
        yield
    except NotInClass as exc:
        raise exc.lifted(index_map) from None


# --- Reductions -----------------------------------------------------------


def restrict_target(h: Graph, lists: ListMapping) -> Tuple[Graph, IndexMap, ListMapping]:
    """
    Restrict H to the colours that appear in at least one list.

    Returns:
        (Graph, IndexMap, ListMapping): H', old_colour[new_colour], lists re-indexed onto H'
    """
    used = set()
    for allowed in lists:
        used |= allowed
    h2, colours = induced_subgraph(h, used)
    new_of = {c: i for i, c in enumerate(colours)}
    return h2, colours, tuple(frozenset(new_of[c] for c in allowed) for allowed in lists)


def universal_vertex(h: Graph) -> Optional[int]:
    """Smallest vertex adjacent to every vertex of h, itself included."""
    for c in range(h.n):
        if len(h.adjacency[c]) == h.n:
            return c
    return None


def universal_vertex_reduction(g: Graph, lists: ListMapping, h: Graph) -> Optional[UniversalReduction]:
    """
    If H has a universal vertex c, drop every vertex of G whose list contains c:
    those vertices can always be mapped to c.
    """
    c = universal_vertex(h)
    if c is None:
        return None
    sub, kept = induced_subgraph(g, [x for x in range(g.n) if c not in lists[x]])
    return UniversalReduction(c, sub, restrict_lists(lists, kept), kept)


# --- Base cases -----------------------------------------------------------


def _two_colourings(g: Graph) -> Iterator[Tuple[int, ...]]:
    """The (at most two) proper 2-colourings of a connected graph."""
    if g.loops:
        return
    side = [-1] * g.n
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if side[v] < 0:
                side[v] = 1 - side[u]
                stack.append(v)
            elif side[v] == side[u]:
                return
    yield tuple(side)
    yield tuple(1 - s for s in side)


def _small_candidates(component: Graph, h: Graph) -> Iterator[Tuple[int, ...]]:
    if h.n == 2 and h.adjacent(0, 1):
        yield from _two_colourings(component)
    else:
        for c in range(h.n):
            yield (c,) * component.n


def solve_base_small(g: Graph, lists: ListMapping, h: Graph) -> SolveResult:
    """
    Answer a single-vertex G, or any G against a target with at most two vertices.

    Raises:
        InternalError: G has several vertices and H has more than two, or H is
            an adjacent pair with a loop (that pair has a universal vertex)
    """
    if g.n == 0:
        return SolveResult(True, ())

    if g.n == 1:
        looped = g.has_loop(0)
        for c in sorted(lists[0]):
            if not looped or h.has_loop(c):
                return SolveResult(True, (c,))
        return FALSE

    if h.n > 2:
        raise InternalError(f"Base case called with |V(H)| = {h.n} and |V(G)| = {g.n}")
    if h.n == 2 and h.adjacent(0, 1) and h.loops:
        raise InternalError("Adjacent two-vertex target with a loop has a universal vertex")

    witness: List[Optional[int]] = [None] * g.n
    for component in connected_components(g):
        sub, old = induced_subgraph(g, component)
        sub_lists = restrict_lists(lists, old)
        found = next(
            (
                candidate
                for candidate in _small_candidates(sub, h)
                if obeys_lists(candidate, sub_lists) and is_homomorphism(sub, h, candidate)
            ),
            None,
        )
        if found is None:
            return FALSE
        lift_map(found, old, witness)
    return SolveResult(True, tuple(witness))


# --- Configurations -------------------------------------------------------


def configuration_count(ell: int, k: int) -> int:
    """Number of B: C -> {0..ell} taking both 0 and ell, by inclusion-exclusion."""
    return (ell + 1) ** k - 2 * ell ** k + (ell - 1) ** k


def enumerate_configurations(i: int, ell: int, k: int) -> Iterator[Configuration]:
    """
    All configurations (i, B) for a layer of size ell and a target on k
    vertices, in lexicographic order of B.

    Raises:
        InvalidInput: ell < 1 or k < 1
    """
    if ell < 1:
        raise InvalidInput(f"Layer {i} must be non-empty, got size {ell}")
    if k < 1:
        raise InvalidInput("Target must have at least one vertex")

    bound = [0] * k

    def extend(pos: int, has_zero: bool, has_full: bool) -> Iterator[Configuration]:
        if pos == k:
            yield Configuration(i, tuple(bound))
            return
        remaining = k - pos - 1
        for value in range(ell + 1):
            zero = has_zero or value == 0
            full = has_full or value == ell
            if (not zero) + (not full) > remaining:
                continue
            bound[pos] = value
            yield from extend(pos + 1, zero, full)

    yield from extend(0, False, False)


def _layer_configurations(ordering: MultiChainOrdering, t: int, k: int) -> Iterator[Configuration]:
    if t == 0 or t == ordering.z + 1:
        yield Configuration(t, (0,) * k)
    else:
        yield from enumerate_configurations(t, len(ordering.order[t]), k)


def canonical_configurations(ordering: MultiChainOrdering, witness: Sequence[int], k: int) -> List[Configuration]:
    """
    The path S_0, S_1, ..., S_{z+1} induced by a homomorphism: per layer and
    colour, the largest prefix of the ordered layer not mapped to that colour.
    """
    path = [Configuration(0, (0,) * k)]
    for i in range(1, ordering.z + 1):
        layer = ordering.order[i]
        bound = []
        for c in range(k):
            bound.append(next((pos for pos, x in enumerate(layer) if witness[x] == c), len(layer)))
        path.append(Configuration(i, tuple(bound)))
    path.append(Configuration(ordering.z + 1, (0,) * k))
    return path


def reduced_lists_for_edge(
    s: Configuration,
    s2: Configuration,
    layer: Sequence[int],
    lists: ListMapping,
    d_plus: Sequence[int],
    h: Graph,
) -> ListMapping:
    """
    The lists P' on the ordered layer L_i for the candidate edge s -> s2:
    P'(x_j) = {c in P(x_j) : B(c) < j, and for all c' not adjacent to c, d+(x_j) <= B'(c')}.

    Returns:
        ListMapping: one list per layer position
    """
    non_adjacent = [[c2 for c2 in range(h.n) if not h.adjacent(c, c2)] for c in range(h.n)]
    reduced = []
    for j, x in enumerate(layer, start=1):
        need = d_plus[x]
        reduced.append(
            frozenset(
                c
                for c in lists[x]
                if s.bound[c] < j and all(need <= s2.bound[c2] for c2 in non_adjacent[c])
            )
        )
    return tuple(reduced)


def edge_test(
    s: Configuration,
    s2: Configuration,
    g_i: Graph,
    p_prime: ListMapping,
    h: Graph,
    start_hint: Optional[str] = None,
    stats: Optional[SolverStats] = None,
) -> Optional[Homomorphism]:
    """
    Decide the edge s -> s2 by solving list H-colouring of the layer subgraph
    g_i under p_prime (indexed like g_i).

    Returns:
        Homomorphism on g_i providing for the edge, or None
    """
    result = lh_solve(g_i, p_prime, h, start_hint=start_hint, stats=stats)
    return result.witness if result.answer else None


class _LayerPair:
    """
    Edge tests between layer i and layer i+1 of one ordering. Lists and
    bounds are handled as colour bitmasks; tests with identical reduced lists
    share one recursive call.
    """

    def __init__(self, g, lists, h, ordering, i, start_hint, stats):
        self.h = h
        self.i = i
        self.layer = ordering.order[i]
        self.start_hint = start_hint
        self.stats = stats
        self.g_i, self.old = induced_subgraph(g, self.layer)
        slot_of = {v: idx for idx, v in enumerate(self.old)}
        self.slot = [slot_of[x] for x in self.layer]
        self.list_masks = [sum(1 << c for c in lists[x]) for x in self.layer]
        self.d_plus = [ordering.d_plus[x] for x in self.layer]
        self.non_adjacent = [
            sum(1 << c2 for c2 in range(h.n) if not h.adjacent(c, c2)) for c in range(h.n)
        ]
        self._prefix_masks: Dict[Configuration, List[int]] = {}
        self._neighbour_masks: Dict[Configuration, List[int]] = {}
        self._cache: Dict[Tuple[int, ...], Optional[Tuple[int, ...]]] = {}

    def _prefix(self, s: Configuration) -> List[int]:
        # colours allowed at position j by condition (2): B(c) < j
        masks = self._prefix_masks.get(s)
        if masks is None:
            masks = [
                sum(1 << c for c, b in enumerate(s.bound) if b < j)
                for j in range(1, len(self.layer) + 1)
            ]
            self._prefix_masks[s] = masks
        return masks

    def _neighbour(self, s2: Configuration) -> List[int]:
        # colours allowed by condition (3): every non-neighbour c' has B'(c') >= d+
        masks = self._neighbour_masks.get(s2)
        if masks is None:
            by_degree: Dict[int, int] = {}
            masks = []
            for need in self.d_plus:
                allowed = by_degree.get(need)
                if allowed is None:
                    short = sum(1 << c2 for c2, b in enumerate(s2.bound) if b < need)
                    allowed = sum(1 << c for c in range(self.h.n) if not self.non_adjacent[c] & short)
                    by_degree[need] = allowed
                masks.append(allowed)
            self._neighbour_masks[s2] = masks
        return masks

    def test(self, s: Configuration, s2: Configuration) -> Optional[Tuple[int, ...]]:
        """Providing homomorphism by layer position, or None."""
        key = tuple(p & a & b for p, a, b in zip(self.list_masks, self._prefix(s), self._neighbour(s2)))
        if 0 in key:
            return None
        if key in self._cache:
            if self.stats is not None:
                self.stats.cache_hits += 1
            return self._cache[key]

        if self.stats is not None:
            self.stats.edge_tests += 1
        p_prime: List[frozenset] = [frozenset()] * len(self.layer)
        for j, mask in enumerate(key):
            p_prime[self.slot[j]] = frozenset(c for c in range(self.h.n) if mask >> c & 1)
        with _lifting(self.old):
            chi = edge_test(s, s2, self.g_i, tuple(p_prime), self.h, self.start_hint, self.stats)
        by_position = None if chi is None else tuple(chi[self.slot[j]] for j in range(len(self.layer)))
        self._cache[key] = by_position
        return by_position


# --- Configuration graph ----------------------------------------------------


def build_configuration_graph(
    g: Graph,
    lists: ListMapping,
    h: Graph,
    ordering: MultiChainOrdering,
    node_cap: Optional[int] = None,
    start_hint: Optional[str] = None,
    stats: Optional[SolverStats] = None,
) -> ConfigurationGraph:
    """
    Materialise every configuration and every realised edge of a connected g.

    Raises:
        SizeLimitExceeded: the node count is above node_cap
    """
    lists = normalize_lists(lists, g.n, h.n)
    k = h.n
    total = 2 + sum(configuration_count(len(layer), k) for layer in ordering.order[1:])
    if node_cap is not None and total > node_cap:
        raise SizeLimitExceeded(f"Configuration graph has {total} nodes, cap is {node_cap}")

    nodes = [list(_layer_configurations(ordering, t, k)) for t in range(ordering.z + 2)]
    edges = {}
    for i in range(ordering.z + 1):
        pair = _LayerPair(g, lists, h, ordering, i, start_hint, stats)
        for s in nodes[i]:
            for s2 in nodes[i + 1]:
                chi = pair.test(s, s2)
                if chi is not None:
                    edges[(s, s2)] = chi
    logger.debug("[SOLVE] configuration graph: %d nodes, %d edges", total, len(edges))
    return ConfigurationGraph(ordering, k, nodes, edges)


def reachability(cg: ConfigurationGraph) -> Optional[ConfigurationPath]:
    """
    Forward sweep from S_0 over the layered DAG; returns one S_0 -> S_{z+1}
    path with its providing maps, or None.
    """
    successors = cg.successors()
    parent: Dict[Configuration, Optional[Configuration]] = {cg.source: None}
    frontier = [cg.source]
    for _ in range(len(cg.nodes) - 1):
        nxt = []
        for s in frontier:
            for s2 in successors.get(s, ()):
                if s2 not in parent:
                    parent[s2] = s
                    nxt.append(s2)
        if not nxt:
            return None
        frontier = nxt

    if cg.sink not in parent:
        return None
    nodes = [cg.sink]
    while parent[nodes[-1]] is not None:
        nodes.append(parent[nodes[-1]])
    nodes.reverse()
    return ConfigurationPath(nodes, [cg.edges[(a, b)] for a, b in zip(nodes, nodes[1:])])


def witness_from_path(ordering: MultiChainOrdering, path: ConfigurationPath) -> Homomorphism:
    """Union of the per-layer providing maps along a path."""
    witness = [0] * sum(ordering.layer_sizes())
    for layer, chi in zip(ordering.order, path.witnesses):
        for x, c in zip(layer, chi):
            witness[x] = c
    return tuple(witness)


def _sweep(g, lists, h, ordering, start_hint, stats) -> Optional[Homomorphism]:
    """
    Reachability over the configuration graph without materialising it:
    each configuration of the next layer keeps the first reached predecessor
    that provides an edge to it.
    """
    k = h.n
    reached: List[Configuration] = [Configuration(0, (0,) * k)]
    history: List[Dict[Configuration, Tuple[Configuration, Tuple[int, ...]]]] = []
    for i in range(ordering.z + 1):
        pair = _LayerPair(g, lists, h, ordering, i, start_hint, stats)
        step = {}
        for s2 in _layer_configurations(ordering, i + 1, k):
            stats.configurations += 1
            for s in reached:
                chi = pair.test(s, s2)
                if chi is not None:
                    step[s2] = (s, chi)
                    break
        if not step:
            logger.debug("[SOLVE] no configuration of layer %d is reachable", i + 1)
            return None
        history.append(step)
        reached = list(step)

    witness = [0] * g.n
    node = reached[0]
    for i in range(ordering.z, -1, -1):
        node, chi = history[i][node]
        for x, c in zip(ordering.order[i], chi):
            witness[x] = c
    return tuple(witness)


# --- Entry point -------------------------------------------------------------


def lh_solve(
    g: Graph,
    lists: Sequence,
    h: Graph,
    start_hint: Optional[str] = None,
    stats: Optional[SolverStats] = None,
) -> SolveResult:
    """
    Decide whether g has a homomorphism to h obeying lists.

    Args:
        g (Graph): input graph
        lists: one iterable of colours per vertex of g
        h (Graph): target graph
        start_hint (str): "first", "last" or None; the vertex tried first
            when a multi-chain ordering is needed
        stats (SolverStats): counters to accumulate into

    Returns:
        SolveResult: answer, and a validated witness when the answer is TRUE

    Raises:
        InvalidInput: malformed lists
        NotInClass: a connected induced subgraph met on the way has no
            multi-chain ordering
    """
    lists = normalize_lists(lists, g.n, h.n)
    stats = stats if stats is not None else SolverStats()
    stats.recursive_calls += 1

    result = _solve(g, lists, h, start_hint, stats)
    if result.answer:
        witness = result.witness
        if witness is None or not (is_homomorphism(g, h, witness) and obeys_lists(witness, lists)):
            raise InternalError(f"Solver produced an invalid witness {witness}")
    return SolveResult(result.answer, result.witness, stats)


def _solve(g: Graph, lists: ListMapping, h: Graph, start_hint, stats) -> SolveResult:
    if g.n == 0:
        return SolveResult(True, ())

    h2, colours, lists2 = restrict_target(h, lists)
    if h2.n < h.n:
        sub = lh_solve(g, lists2, h2, start_hint, stats)
        if not sub.answer:
            return FALSE
        return SolveResult(True, tuple(colours[c] for c in sub.witness))

    reduction = universal_vertex_reduction(g, lists, h)
    if reduction is not None:
        with _lifting(reduction.kept):
            sub = lh_solve(reduction.graph, reduction.lists, h, start_hint, stats)
        if not sub.answer:
            return FALSE
        witness = [reduction.colour] * g.n
        lift_map(sub.witness, reduction.kept, witness)
        return SolveResult(True, tuple(witness))

    if g.n == 1:
        return solve_base_small(g, lists, h)

    components = connected_components(g)
    if len(components) > 1:
        witness = [0] * g.n
        for component in components:
            sub_g, old = induced_subgraph(g, component)
            with _lifting(old):
                sub = lh_solve(sub_g, restrict_lists(lists, old), h, start_hint, stats)
            if not sub.answer:
                return FALSE
            lift_map(sub.witness, old, witness)
        return SolveResult(True, tuple(witness))

    if h.n <= 2:
        return solve_base_small(g, lists, h)

    ordering = find_ordering(g, hint_vertex(g, start_hint))
    if ordering is None:
        raise NotInClass(range(g.n))
    logger.debug(
        "[SOLVE] n=%d k=%d start=%d layers=%s",
        g.n, h.n, ordering.start, ordering.layer_sizes(),
    )
    with stats.sweep_level(h.n):
        witness = _sweep(g, lists, h, ordering, start_hint, stats)
    if witness is None:
        return FALSE
    return SolveResult(True, witness)
