"""
Benchmark pipeline: 3-list colouring of connected permutation graphs with
full lists, one run per size in config.BENCHMARK_SIZES, plus one
3-colourable run at the largest size so the TRUE path is timed too.
"""

import json
import logging
import time
from typing import Callable, Dict, List

import config
from listhom.chain_ordering import find_ordering, hint_vertex
from listhom.graph_core import Graph, complete_graph, full_lists, is_connected
from listhom.homomorphism_solver import SolverStats, lh_solve
from listhom.instance_gen import PermutationSpec, SplitMix64, permutation_graph, random_permutation
from listhom.logging_setup import configure_logging

logger = logging.getLogger("listhom.pipeline")

K = 3


def three_run_permutation(rng: SplitMix64, n: int) -> PermutationSpec:
    """
    Interleave three decreasing runs. An increasing subsequence takes at most
    one value per run, so cliques have at most 3 vertices and the (perfect)
    permutation graph is 3-colourable.
    """
    values = list(range(n))
    rng.shuffle(values)
    runs = [rng.below(K) for _ in range(n)]
    pools = [sorted((values[i] for i in range(n) if runs[i] == r), reverse=True) for r in range(K)]
    taken = [0] * K
    pi = []
    for r in runs:
        pi.append(pools[r][taken[r]])
        taken[r] += 1
    return PermutationSpec(tuple(pi))


DRAWS: Dict[str, Callable[[SplitMix64, int], PermutationSpec]] = {
    "random": random_permutation,
    "three_runs": three_run_permutation,
}


def connected_permutation_graph(n: int, seed: int, attempts: int = 1000, family: str = "random") -> Graph:
    """Draw permutations from one SplitMix64 stream until the graph is connected."""
    draw = DRAWS[family]
    rng = SplitMix64(seed)
    for _ in range(attempts):
        g = permutation_graph(draw(rng, n))
        if is_connected(g):
            return g
    raise RuntimeError(f"No connected permutation graph on {n} vertices after {attempts} draws")


def run_size(n: int, seed: int, family: str = "random") -> Dict:
    g = connected_permutation_graph(n, seed + n, family=family)
    ordering = find_ordering(g, hint_vertex(g, "last"))
    stats = SolverStats()

    started = time.perf_counter()
    result = lh_solve(g, full_lists(n, K), complete_graph(K), start_hint="last", stats=stats)
    seconds = time.perf_counter() - started

    return {
        "n": n,
        "family": family,
        "k": K,
        "edges": len(g.edges),
        "layers": ordering.z + 1 if ordering is not None else None,
        "answer": result.answer,
        "seconds": round(seconds, 4),
        "within_limit": seconds < config.BENCHMARK_TIME_LIMIT,
        **stats.as_dict(),
    }


def main() -> List[Dict]:
    configure_logging()
    config.validate_settings()

    # Step 1: solve each size
    runs = [(n, "random") for n in config.BENCHMARK_SIZES]
    runs.append((max(config.BENCHMARK_SIZES), "three_runs"))
    rows = []
    for n, family in runs:
        row = run_size(n, config.BENCHMARK_SEED, family)
        logger.info(
            "[BENCH] n=%d %s answer=%s %.3fs edge_tests=%d cache_hits=%d",
            n, family, row["answer"], row["seconds"], row["edge_tests"], row["cache_hits"],
        )
        rows.append(row)

    # Step 2: write the report
    config.OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    report_path = config.OUTPUT_DIR / "benchmark_report.json"
    report = {"seed": config.BENCHMARK_SEED, "time_limit": config.BENCHMARK_TIME_LIMIT, "runs": rows}
    report_path.write_text(json.dumps(report, indent=2), encoding="utf-8")

    # Step 3: summary
    slow = [row["n"] for row in rows if not row["within_limit"]]
    if slow:
        logger.warning("[BENCH] sizes over %.0fs: %s", config.BENCHMARK_TIME_LIMIT, slow)
    logger.info("[BENCH] report written to %s", report_path)
    return rows


if __name__ == "__main__":
    main()
