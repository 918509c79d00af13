"""Command-line front end for the list homomorphism solver.

Exit codes: 0 TRUE, 1 FALSE, 2 NotInClass, 3 usage / I/O / schema errors.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import config
from listhom.brute_oracle import brute_force, count_homomorphisms
from listhom.chain_ordering import START_HINTS, find_ordering, ordering_from, verify_ordering
from listhom.errors import (
    EXIT_FALSE,
    EXIT_NOT_IN_CLASS,
    EXIT_TRUE,
    EXIT_USAGE,
    InvalidInput,
    ListHomError,
    NotInClass,
)
from listhom.graph_core import (
    Graph,
    complete_graph,
    connected_components,
    full_lists,
    induced_subgraph,
    is_homomorphism,
    obeys_lists,
    restrict_lists,
)
from listhom.homomorphism_solver import (
    SolverStats,
    build_configuration_graph,
    lh_solve,
    reachability,
    restrict_target,
    universal_vertex,
)
from listhom.instance_gen import (
    FAMILIES,
    TARGET_KINDS,
    Instance,
    IntervalSpec,
    PermutationSpec,
    SplitMix64,
    counterexample,
    interval_graph,
    permutation_graph,
    random_instance,
    random_lists,
)
from listhom.instance_io import SolveReport, dump_instance, load_instance
from listhom.logging_setup import configure_logging

logger = logging.getLogger("listhom.cli")

GEN_FAMILIES = (
    "permutation",
    "interval",
    "cycle",
    "co-cycle",
    "subdivided-claw",
    "co-subdivided-claw",
    "random",
)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --- solve -------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    stats = SolverStats()
    try:
        result = lh_solve(instance.graph, instance.lists, instance.target, start_hint=args.hint, stats=stats)
        answer, witness = result.answer, result.witness
    except NotInClass as exc:
        if not args.fallback_brute:
            raise
        logger.info("[SOLVE] %s; falling back to the exhaustive oracle", exc)
        witness = brute_force(instance.graph, instance.lists, instance.target)
        answer = witness is not None

    if args.json:
        report = SolveReport(
            result=answer,
            witness=list(witness) if answer else None,
            stats=stats.as_dict() if args.stats else None,
        )
        _emit(report.model_dump_json(exclude_none=True))
    else:
        _emit("TRUE" if answer else "FALSE")
        if args.witness and answer:
            _emit(json.dumps(list(witness)))
        if args.stats:
            _emit(json.dumps(stats.as_dict()))
    return EXIT_TRUE if answer else EXIT_FALSE


# --- check-ordering ----------------------------------------------------------


def _describe_ordering(ordering, old) -> List[str]:
    lines = [f"  start: {old[ordering.start]}"]
    for i, layer in enumerate(ordering.order):
        cells = ", ".join(
            f"{old[x]}(d-={ordering.d_minus[x]}, d+={ordering.d_plus[x]})" for x in layer
        )
        lines.append(f"  L{i}: {cells}")
    return lines


def cmd_check_ordering(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    g = instance.graph
    if args.start is not None and not 0 <= args.start < g.n:
        raise InvalidInput(f"Start vertex {args.start} outside [0, {g.n})")

    all_found = True
    for index, component in enumerate(connected_components(g)):
        sub, old = induced_subgraph(g, component)
        new_of = {v: i for i, v in enumerate(old)}
        _emit(f"component {index}: vertices {list(old)}")

        if args.all_starts:
            found_any = False
            for v in range(sub.n):
                ordering = ordering_from(sub, v)
                found_any = found_any or ordering is not None
                _emit(f"  start {old[v]}: {'found' if ordering is not None else 'none'}")
            all_found = all_found and found_any
            continue

        if args.start is not None:
            if args.start not in new_of:
                continue
            ordering = ordering_from(sub, new_of[args.start])
        else:
            ordering = find_ordering(sub)

        if ordering is None:
            all_found = False
            _emit("  none")
            continue
        problems = verify_ordering(sub, ordering)
        _emit("  found" if not problems else f"  found with violations: {problems}")
        for line in _describe_ordering(ordering, old):
            _emit(line)

    return EXIT_TRUE if all_found else EXIT_FALSE


# --- gen -----------------------------------------------------------------------


def _parse_ints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidInput(f"Expected comma-separated integers, got {text!r}") from exc


def _parse_intervals(text: str) -> IntervalSpec:
    try:
        pairs = [tuple(float(v) for v in part.split(":")) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidInput(f"Expected intervals as left:right,..., got {text!r}") from exc
    if any(len(pair) != 2 for pair in pairs):
        raise InvalidInput("Each interval must be written left:right")
    return IntervalSpec(tuple(pairs))


def _fixed_instance(g: Graph, args: argparse.Namespace) -> Instance:
    h = complete_graph(args.k)
    if args.density >= 1.0:
        lists = full_lists(g.n, args.k)
    else:
        lists = random_lists(SplitMix64(args.seed), g.n, args.k, args.density)
    return Instance(g, lists, h)


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family == "permutation" and args.perm:
        instance = _fixed_instance(permutation_graph(PermutationSpec.from_one_based(_parse_ints(args.perm))), args)
    elif family == "interval" and args.intervals:
        instance = _fixed_instance(interval_graph(_parse_intervals(args.intervals)), args)
    elif family in ("permutation", "interval", "random"):
        source = args.source if family == "random" else family
        instance = random_instance(
            args.seed, args.n, args.k, args.density, source,
            target=args.target, graph_loops=args.loops, target_loops=args.target_loops,
        )
    else:
        name = family.replace("-", "_")
        instance = _fixed_instance(counterexample(name, args.n), args)

    text = dump_instance(instance)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        logger.info("[GEN] instance written to %s", args.out)
    else:
        _emit(text)
    return EXIT_TRUE


# --- oracle ----------------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    witness = brute_force(instance.graph, instance.lists, instance.target, max_n=args.max_n)
    count = None
    if args.count:
        count = count_homomorphisms(instance.graph, instance.lists, instance.target, max_n=args.max_n)

    if args.json:
        report = SolveReport(result=witness is not None, witness=list(witness) if witness is not None else None, count=count)
        _emit(report.model_dump_json(exclude_none=True))
    else:
        _emit("TRUE" if witness is not None else "FALSE")
        if witness is not None:
            _emit(json.dumps(list(witness)))
        if count is not None:
            _emit(f"count: {count}")
    return EXIT_TRUE if witness is not None else EXIT_FALSE


# --- fuzz ------------------------------------------------------------------------


@dataclass
class FuzzReport:
    trials: int = 0
    agreements: int = 0
    true_answers: int = 0
    not_in_class: int = 0
    failures: List[str] = field(default_factory=list)


def _reproduce(seed: int, args) -> str:
    return (
        f"python cli.py fuzz --trials 1 --seed {seed} --max-n {args.max_n} --k {args.k} "
        f"--family {args.family} --target {args.target} --loops {args.loops} --target-loops {args.target_loops}"
    )


def run_fuzz(args: argparse.Namespace) -> FuzzReport:
    """
    Compare lh_solve against brute_force on seeded instances; trial t uses seed + t.

    Raises:
        InvalidInput: max_n beyond the oracle range or bad parameters
    """
    if args.max_n < 1 or args.max_n > min(config.FUZZ_MAX_N, config.BRUTE_MAX_N):
        raise InvalidInput(f"--max-n must lie in [1, {min(config.FUZZ_MAX_N, config.BRUTE_MAX_N)}]")
    if args.trials < 0 or args.k < 1:
        raise InvalidInput("--trials must be non-negative and --k positive")

    report = FuzzReport()
    for t in range(args.trials):
        seed = args.seed + t
        rng = SplitMix64(seed)
        n = 1 + rng.below(args.max_n)
        density = config.FUZZ_DENSITIES[rng.below(len(config.FUZZ_DENSITIES))]
        instance = random_instance(
            rng.next(), n, args.k, density, args.family,
            target=args.target, graph_loops=args.loops, target_loops=args.target_loops,
        )
        report.trials += 1
        expected = brute_force(instance.graph, instance.lists, instance.target)

        try:
            result = lh_solve(instance.graph, instance.lists, instance.target, start_hint=instance.start_hint)
        except NotInClass as exc:
            if args.family == "arbitrary_small":
                report.not_in_class += 1
                continue
            report.failures.append(f"seed {seed}: {exc} -- {_reproduce(seed, args)}")
            continue

        witness_ok = not result.answer or (
            is_homomorphism(instance.graph, instance.target, result.witness)
            and obeys_lists(result.witness, instance.lists)
        )
        if result.answer != (expected is not None) or not witness_ok:
            report.failures.append(
                f"seed {seed}: solver={result.answer} oracle={expected is not None} "
                f"witness_ok={witness_ok} -- {_reproduce(seed, args)}"
            )
            logger.warning("[FUZZ] disagreement at seed %d", seed)
            continue
        report.agreements += 1
        report.true_answers += int(result.answer)
    return report


def cmd_fuzz(args: argparse.Namespace) -> int:
    report = run_fuzz(args)
    _emit(
        f"trials: {report.trials}  agreements: {report.agreements}  TRUE: {report.true_answers}  "
        f"not-in-class: {report.not_in_class}  disagreements: {len(report.failures)}"
    )
    for failure in report.failures:
        _emit(f"FAIL {failure}")
    return EXIT_TRUE if not report.failures else EXIT_FALSE


# --- export-configs --------------------------------------------------------------


def cmd_export_configs(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    components = connected_components(instance.graph)
    if not 0 <= args.component < len(components):
        raise InvalidInput(f"Component {args.component} does not exist ({len(components)} components)")

    sub, old = induced_subgraph(instance.graph, components[args.component])
    h, _, lists = restrict_target(instance.target, restrict_lists(instance.lists, old))
    if universal_vertex(h) is not None:
        raise InvalidInput("The restricted target has a universal vertex; its configuration graph is not used")

    ordering = find_ordering(sub)
    if ordering is None:
        raise NotInClass(old)
    cg = build_configuration_graph(sub, lists, h, ordering, node_cap=args.max_nodes)
    path = reachability(cg)
    Path(args.dot).write_text(cg.to_dot(path), encoding="utf-8")
    _emit(
        f"nodes: {cg.node_count()}  edges: {len(cg.edges)}  "
        f"path: {'found' if path is not None else 'none'}  written: {args.dot}"
    )
    return EXIT_TRUE if path is not None else EXIT_FALSE


# --- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="listhom",
        description="List H-colouring for graphs with multi-chain orderings",
    )
    parser.add_argument("--version", action="version", version=f"{config.APP_NAME} {config.APP_VERSION}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only")
    subparsers = parser.add_subparsers(dest="command", required=True, help="Available commands")

    # solve command
    solve_parser = subparsers.add_parser("solve", help="Decide an instance")
    solve_parser.add_argument("instance", help="Instance JSON file")
    solve_parser.add_argument("--fallback-brute", action="store_true", help="Use the oracle when out of class")
    solve_parser.add_argument("--witness", action="store_true", help="Print the witness on TRUE")
    solve_parser.add_argument("--json", action="store_true", help="Emit {\"result\", \"witness\"} JSON")
    solve_parser.add_argument("--stats", action="store_true", help="Report solver counters")
    solve_parser.add_argument("--hint", choices=START_HINTS, help="Vertex tried first as BFS start")
    solve_parser.set_defaults(handler=cmd_solve)

    # check-ordering command
    check_parser = subparsers.add_parser("check-ordering", help="Look for multi-chain orderings")
    check_parser.add_argument("instance", help="Instance JSON file")
    check_parser.add_argument("--start", type=int, help="Only try this start vertex")
    check_parser.add_argument("--all-starts", action="store_true", help="Report every start vertex")
    check_parser.set_defaults(handler=cmd_check_ordering)

    # gen command
    gen_parser = subparsers.add_parser("gen", help="Generate an instance document")
    gen_parser.add_argument("family", choices=GEN_FAMILIES, help="Graph family")
    gen_parser.add_argument("--n", type=int, default=8, help="Vertex count (cycle length for cycles)")
    gen_parser.add_argument("--k", type=int, default=3, help="Target size; K_k unless --target random")
    gen_parser.add_argument("--seed", type=int, default=1, help="SplitMix64 seed")
    gen_parser.add_argument("--density", type=float, default=1.0, help="List density in (0, 1]")
    gen_parser.add_argument("--perm", help="Explicit 1-based permutation, e.g. 2,1,4,3")
    gen_parser.add_argument("--intervals", help="Explicit intervals, e.g. 0:2,1:4,3:5")
    gen_parser.add_argument("--source", choices=FAMILIES, default="arbitrary_small", help="Family for 'random'")
    gen_parser.add_argument("--target", choices=TARGET_KINDS, default="complete", help="Target kind")
    gen_parser.add_argument("--loops", type=float, default=0.0, help="Loop probability on G")
    gen_parser.add_argument("--target-loops", type=float, default=0.0, help="Loop probability on H")
    gen_parser.add_argument("--out", help="Write to this file instead of standard output")
    gen_parser.set_defaults(handler=cmd_gen)

    # oracle command
    oracle_parser = subparsers.add_parser("oracle", help="Exhaustive backtracking answer")
    oracle_parser.add_argument("instance", help="Instance JSON file")
    oracle_parser.add_argument("--count", action="store_true", help="Also count all homomorphisms")
    oracle_parser.add_argument("--json", action="store_true", help="Emit JSON")
    oracle_parser.add_argument("--max-n", type=int, default=config.BRUTE_MAX_N, help="Size cap")
    oracle_parser.set_defaults(handler=cmd_oracle)

    # fuzz command
    fuzz_parser = subparsers.add_parser("fuzz", help="Differential test against the oracle")
    fuzz_parser.add_argument("--trials", type=int, default=100)
    fuzz_parser.add_argument("--max-n", type=int, default=8)
    fuzz_parser.add_argument("--k", type=int, default=3)
    fuzz_parser.add_argument("--seed", type=int, default=1)
    fuzz_parser.add_argument("--family", choices=FAMILIES, default="permutation")
    fuzz_parser.add_argument("--target", choices=TARGET_KINDS, default="complete")
    fuzz_parser.add_argument("--loops", type=float, default=0.0, help="Loop probability on G")
    fuzz_parser.add_argument("--target-loops", type=float, default=0.0, help="Loop probability on H")
    fuzz_parser.set_defaults(handler=cmd_fuzz)

    # export-configs command
    export_parser = subparsers.add_parser("export-configs", help="Write the configuration graph as DOT")
    export_parser.add_argument("instance", help="Instance JSON file")
    export_parser.add_argument("--dot", required=True, help="Output DOT file")
    export_parser.add_argument("--component", type=int, default=0, help="Component index")
    export_parser.add_argument("--max-nodes", type=int, default=config.EXPORT_NODE_CAP, help="Node cap")
    export_parser.set_defaults(handler=cmd_export_configs)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which would read as NotInClass
        return EXIT_USAGE if exc.code else EXIT_TRUE

    configure_logging("DEBUG" if args.verbose else "WARNING" if args.quiet else None)
    try:
        return args.handler(args)
    except NotInClass as exc:
        sys.stderr.write(f"NotInClass: {exc}\n")
        return EXIT_NOT_IN_CLASS
    except ListHomError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
