"""
Deterministic instance generators: permutation graphs, interval graphs,
the counterexample catalog, and seeded random instances for fuzzing.

Random draws come from SplitMix64 so a seed reproduces the same instance in
any language:
    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    next = z ^ (z >> 31)                      (all mod 2**64)
below(n) = (next * n) >> 64, random() = (next >> 11) * 2**-53, and shuffles
are Fisher-Yates from the last index down.
"""

import logging
from dataclasses import dataclass
from typing import List, MutableSequence, Optional, Sequence, Tuple

import config
from listhom.errors import InvalidInput
from listhom.graph_core import (
    Graph,
    ListMapping,
    add_loops,
    build_graph,
    complement,
    complete_graph,
)

logger = logging.getLogger(__name__)

FAMILIES = ("permutation", "interval", "arbitrary_small")
COUNTEREXAMPLES = ("cycle", "co_cycle", "subdivided_claw", "co_subdivided_claw")
TARGET_KINDS = ("complete", "random")

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (64-bit state, Weyl increment 0x9E3779B97F4A7C15)."""

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + self.GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Integer in [0, n)."""
        return (self.next() * n) >> 64

    def random(self) -> float:
        """Float in [0, 1)."""
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def chance(self, p: float) -> bool:
        return self.random() < p

    def shuffle(self, items: MutableSequence) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class PermutationSpec:
    """A permutation of {0..n-1}; I/O uses the 1-based form."""

    pi: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.pi) != list(range(len(self.pi))):
            raise InvalidInput(f"{list(self.pi)} is not a permutation of 0..{len(self.pi) - 1}")

    @classmethod
    def from_one_based(cls, values: Sequence[int]) -> "PermutationSpec":
        return cls(tuple(int(v) - 1 for v in values))

    def one_based(self) -> List[int]:
        return [v + 1 for v in self.pi]


@dataclass(frozen=True)
class IntervalSpec:
    """Closed intervals with left < right and 2n pairwise distinct endpoints."""

    intervals: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        endpoints = []
        for left, right in self.intervals:
            if not left < right:
                raise InvalidInput(f"Interval ({left}, {right}) must have left < right")
            endpoints.extend((left, right))
        if len(set(endpoints)) != len(endpoints):
            raise InvalidInput("Interval endpoints must be pairwise distinct")


@dataclass(frozen=True)
class Instance:
    graph: Graph
    lists: ListMapping
    target: Graph
    family: str = "custom"
    start_hint: Optional[str] = None


def permutation_graph(layout: PermutationSpec) -> Graph:
    """Vertices x_0..x_{n-1}; x_i x_j is an edge iff i < j and pi(i) < pi(j)."""
    pi = layout.pi
    n = len(pi)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if pi[i] < pi[j]])


def interval_graph(layout: IntervalSpec) -> Graph:
    """Intersection graph of the intervals."""
    intervals = layout.intervals
    n = len(intervals)
    return build_graph(
        n,
        [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if max(intervals[i][0], intervals[j][0]) <= min(intervals[i][1], intervals[j][1])
        ],
    )


def _cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _subdivided_claw() -> Graph:
    # centre 0, middle vertices 1..3, leaves 4..6
    return build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def counterexample(name: str, n: Optional[int] = None) -> Graph:
    """
    A named graph from the catalog: cycle(n), co_cycle(n), subdivided_claw,
    co_subdivided_claw.

    Raises:
        InvalidInput: unknown name, or a cycle with n missing or below 3
    """
    if name in ("cycle", "co_cycle"):
        if n is None or n < 3:
            raise InvalidInput(f"{name} needs n >= 3")
        cycle = _cycle(n)
        return cycle if name == "cycle" else complement(cycle)
    if name == "subdivided_claw":
        return _subdivided_claw()
    if name == "co_subdivided_claw":
        return complement(_subdivided_claw())
    raise InvalidInput(f"Unknown counterexample {name!r}; expected one of {COUNTEREXAMPLES}")


def random_permutation(rng: SplitMix64, n: int) -> PermutationSpec:
    pi = list(range(n))
    rng.shuffle(pi)
    return PermutationSpec(tuple(pi))


def random_intervals(rng: SplitMix64, n: int) -> IntervalSpec:
    """
    n intervals over the integer endpoints 0..2n-1, numbered by increasing
    left endpoint so vertex 0 is the leftmost interval.
    """
    endpoints = list(range(2 * n))
    rng.shuffle(endpoints)
    intervals = sorted(
        (min(endpoints[2 * i], endpoints[2 * i + 1]), max(endpoints[2 * i], endpoints[2 * i + 1]))
        for i in range(n)
    )
    return IntervalSpec(tuple((float(left), float(right)) for left, right in intervals))


def random_target(rng: SplitMix64, k: int, kind: str = "complete", loop_probability: float = 0.0) -> Graph:
    """K_k, or a G(k, 1/2) random graph; loops added independently."""
    if kind == "complete":
        target = complete_graph(k)
    elif kind == "random":
        target = build_graph(k, [(a, b) for a in range(k) for b in range(a + 1, k) if rng.chance(0.5)])
    else:
        raise InvalidInput(f"Unknown target kind {kind!r}; expected one of {TARGET_KINDS}")
    if loop_probability > 0:
        target = add_loops(target, [c for c in range(k) if rng.chance(loop_probability)])
    return target


def random_lists(rng: SplitMix64, n: int, k: int, density: float) -> ListMapping:
    return tuple(frozenset(c for c in range(k) if rng.chance(density)) for _ in range(n))


def random_instance(
    seed: int,
    n: int,
    k: int,
    list_density: float,
    family: str,
    target: str = "complete",
    graph_loops: float = 0.0,
    target_loops: float = 0.0,
) -> Instance:
    """
    Seeded, reproducible instance. Each colour enters each list independently
    with probability list_density.

    Args:
        seed (int): SplitMix64 seed
        n (int): vertex count of G
        k (int): vertex count of H
        list_density (float): probability in (0, 1]
        family (str): "permutation", "interval" or "arbitrary_small"
        target (str): "complete" for K_k, "random" for a random H
        graph_loops (float): probability of a loop at each vertex of G
        target_loops (float): probability of a loop at each vertex of H

    Raises:
        InvalidInput: parameters out of range
    """
    if not 0 < list_density <= 1:
        raise InvalidInput(f"List density must lie in (0, 1], got {list_density}")
    if n < 1 or k < 1:
        raise InvalidInput("n and k must be positive")
    if family not in FAMILIES:
        raise InvalidInput(f"Unknown family {family!r}; expected one of {FAMILIES}")
    if family == "arbitrary_small" and n > config.FUZZ_MAX_N:
        raise InvalidInput(f"arbitrary_small is capped at n = {config.FUZZ_MAX_N}")

    rng = SplitMix64(seed)
    start_hint = None
    if family == "permutation":
        graph = permutation_graph(random_permutation(rng, n))
        start_hint = "last"
    elif family == "interval":
        graph = interval_graph(random_intervals(rng, n))
        start_hint = "first"
    else:
        graph = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.chance(0.5)])

    if graph_loops > 0:
        graph = add_loops(graph, [x for x in range(n) if rng.chance(graph_loops)])
    h = random_target(rng, k, target, target_loops)
    lists = random_lists(rng, n, k, list_density)

    logger.debug("[GEN] seed=%d family=%s n=%d k=%d edges=%d", seed, family, n, k, len(graph.edges))
    return Instance(graph, lists, h, family, start_hint)
