"""
Exhaustive backtracking for list homomorphism, used as ground truth.
Vertices are assigned in index order and colours in increasing order, so the
first witness found is the lexicographically smallest one.
"""

from typing import Iterator, List, Optional, Sequence

import config
from listhom.errors import SizeLimitExceeded
from listhom.graph_core import Graph, Homomorphism, normalize_lists


def _check_size(g: Graph, max_n: Optional[int]) -> None:
    cap = config.BRUTE_MAX_N if max_n is None else max_n
    if g.n > cap:
        raise SizeLimitExceeded(f"Oracle is capped at {cap} vertices, got {g.n}")


def _assignments(g: Graph, lists, h: Graph) -> Iterator[List[int]]:
    # only edges to already-assigned (smaller) neighbours are checked at each step
    earlier = [sorted(v for v in g.adjacency[x] if v < x) for x in range(g.n)]
    choices = [
        [c for c in sorted(lists[x]) if not g.has_loop(x) or h.has_loop(c)]
        for x in range(g.n)
    ]
    image = [0] * g.n

    def extend(x: int) -> Iterator[List[int]]:
        if x == g.n:
            yield image
            return
        for c in choices[x]:
            if all(h.adjacent(image[y], c) for y in earlier[x]):
                image[x] = c
                yield from extend(x + 1)

    yield from extend(0)


def brute_force(g: Graph, lists: Sequence, h: Graph, max_n: Optional[int] = None) -> Optional[Homomorphism]:
    """
    Lexicographically first list homomorphism from g to h, or None.

    Raises:
        SizeLimitExceeded: g has more than max_n (default config.BRUTE_MAX_N) vertices
    """
    _check_size(g, max_n)
    lists = normalize_lists(lists, g.n, h.n)
    for image in _assignments(g, lists, h):
        return tuple(image)
    return None


def count_homomorphisms(g: Graph, lists: Sequence, h: Graph, max_n: Optional[int] = None) -> int:
    """Exact number of list homomorphisms from g to h."""
    _check_size(g, max_n)
    lists = normalize_lists(lists, g.n, h.n)
    return sum(1 for _ in _assignments(g, lists, h))
