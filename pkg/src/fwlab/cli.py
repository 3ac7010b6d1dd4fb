"""Command-line front end: solve, compare, audit, qsim, bench, gen.

Exit statuses: 0 success, 1 usage error, 2 input error, 3 internal
inconsistency (a solver that must match the oracle failed to).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .classical import fw_classical
from .core import (
    Graph,
    GraphFormatError,
    format_dist,
    parse_graph,
    random_graph,
    reconstruct_path,
    serialize_graph,
)
from .layered import detect_divergence, fw_layered_as_printed, fw_layered_corrected
from .oracle import oracle_apsp
from .parallel import fw_parallel, fw_parallel_inplace
from .qfw import complexity_report, padded_node_count, qfw_run

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3

WORKERS_ENV = "FWLAB_WORKERS"

SOLVERS = ("classical", "layered-printed", "layered", "parallel", "parallel-inplace", "qfw")

# Solvers whose distances must equal the oracle; layered-printed is audited
# but never fails a run.
EXPECTED_CORRECT = ("classical", "layered", "parallel", "parallel-inplace", "qfw")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are 1
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Everything one command invocation needs."""

    command: str
    input_path: Optional[str] = None
    solver: str = "classical"
    workers: tuple[int, ...] = (1,)
    out_format: str = "text"
    seed: int = 0
    node_count: int = 8
    edge_probability: float = 0.5
    max_weight: int = 100
    paths: tuple[tuple[int, int], ...] = ()
    output_path: Optional[str] = None
    shuffle_seed: Optional[int] = None
    qfw_cap: int = 64

    def __post_init__(self):
        if any(w < 1 for w in self.workers):
            raise UsageError("worker counts must be at least 1")
        if self.solver not in SOLVERS:
            raise UsageError(f"unknown solver {self.solver!r}")


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {env!r}")
        return value
    return os.cpu_count() or 1


def _parse_worker_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--workers expects integers, got {text!r}")
    if not values:
        raise UsageError("--workers must name at least one count")
    return values


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"--paths expects i:j, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"--paths expects integers, got {text!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="fwlab", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    def add_format(sub):
        sub.add_argument("--format", choices=("text", "kv"), default="text",
                         help="human table or machine-readable key=value lines")

    solve = commands.add_parser("solve", help="print the distance matrix of one solver")
    solve.add_argument("input", help="edge-list file")
    solve.add_argument("--solver", choices=SOLVERS, default="classical")
    solve.add_argument("--workers", type=int, default=None)
    solve.add_argument("--paths", action="append", default=[], metavar="i:j",
                       help="also print the reconstructed path for this pair (repeatable)")
    add_format(solve)

    compare = commands.add_parser("compare", help="run all solvers against the oracle")
    compare.add_argument("input")
    compare.add_argument("--workers", type=int, default=None)
    compare.add_argument("--qfw-cap", type=int, default=64,
                         help="skip the branch-enumeration solver above this padded size")
    add_format(compare)

    audit = commands.add_parser("audit", help="check the stale-buffer variant against the oracle")
    audit.add_argument("input")
    add_format(audit)

    qsim = commands.add_parser("qsim", help="branch-enumeration run plus operation accounting")
    qsim.add_argument("input")
    qsim.add_argument("--shuffle-seed", type=int, default=None,
                      help="permute branch evaluation order (result is unchanged)")
    qsim.add_argument("--qfw-cap", type=int, default=64)
    add_format(qsim)

    bench = commands.add_parser("bench", help="wall times and operation counts")
    bench.add_argument("--input", default=None, help="edge-list file (otherwise generated)")
    bench.add_argument("--V", type=int, default=64, dest="node_count")
    bench.add_argument("--p", type=float, default=0.5, dest="edge_probability")
    bench.add_argument("--max-weight", type=int, default=100)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--workers", default=None, metavar="N[,N...]")
    bench.add_argument("--qfw-cap", type=int, default=64)
    add_format(bench)

    gen = commands.add_parser("gen", help="write a seeded random edge-list file")
    gen.add_argument("--V", type=int, required=True, dest="node_count")
    gen.add_argument("--p", type=float, required=True, dest="edge_probability")
    gen.add_argument("--max-weight", type=int, default=100)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--output", "-o", default=None, help="file path (default stdout)")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    workers: tuple[int, ...]
    raw = getattr(args, "workers", None)
    if raw is None:
        env = os.environ.get(WORKERS_ENV)
        if args.command == "bench" and env and "," in env:
            workers = _parse_worker_list(env)
        else:
            workers = (_default_workers(),)
    elif isinstance(raw, int):
        workers = (raw,)
    else:
        workers = _parse_worker_list(raw)

    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        solver=getattr(args, "solver", "classical"),
        workers=workers,
        out_format=getattr(args, "format", "text"),
        seed=getattr(args, "seed", 0),
        node_count=getattr(args, "node_count", 8),
        edge_probability=getattr(args, "edge_probability", 0.5),
        max_weight=getattr(args, "max_weight", 100),
        paths=tuple(_parse_pair(p) for p in getattr(args, "paths", [])),
        output_path=getattr(args, "output", None),
        shuffle_seed=getattr(args, "shuffle_seed", None),
        qfw_cap=getattr(args, "qfw_cap", 64),
    )


def _load_graph(path: str) -> Graph:
    with open(path, "rb") as handle:
        return parse_graph(handle.read())


def _emit_matrix(dist, out_format: str, out) -> None:
    if out_format == "kv":
        for i, row in enumerate(dist.rows):
            print(f"row.{i}=" + " ".join(format_dist(x) for x in row), file=out)
    else:
        print(dist.to_text(), file=out)


def _run_solver(name: str, graph: Graph, config: RunConfig):
    """(distances, predecessors-or-None) for one solver name."""
    workers = config.workers[0]
    if name == "classical":
        return fw_classical(graph)
    if name == "layered":
        return fw_layered_corrected(graph)
    if name == "layered-printed":
        return fw_layered_as_printed(graph), None
    if name == "parallel":
        return fw_parallel(graph, workers)
    if name == "parallel-inplace":
        return fw_parallel_inplace(graph, workers)
    if name == "qfw":
        dist, pred, _ = qfw_run(graph, shuffle_seed=config.shuffle_seed)
        return dist, pred
    raise UsageError(f"unknown solver {name!r}")


def cmd_solve(config: RunConfig, out) -> int:
    graph = _load_graph(config.input_path)
    if config.paths and config.solver == "layered-printed":
        raise UsageError("layered-printed keeps no predecessors; paths are unavailable")
    for i, j in config.paths:
        if not (0 <= i < graph.node_count and 0 <= j < graph.node_count):
            raise UsageError(f"path pair ({i}, {j}) out of range for {graph.node_count} nodes")
    dist, pred = _run_solver(config.solver, graph, config)
    if config.out_format == "kv":
        print(f"solver={config.solver}", file=out)
        print(f"nodes={dist.size}", file=out)
    _emit_matrix(dist, config.out_format, out)
    for i, j in config.paths:
        nodes = reconstruct_path(pred, dist, i, j)
        if config.out_format == "kv":
            value = "none" if nodes is None else " ".join(str(n) for n in nodes)
            print(f"path.{i}.{j}={value}", file=out)
        elif nodes is None:
            print(f"path {i} -> {j}: none", file=out)
        else:
            print(f"path {i} -> {j}: " + " ".join(str(n) for n in nodes)
                  + f" (weight {format_dist(dist[i, j])})", file=out)
    return EXIT_OK


def cmd_compare(config: RunConfig, out) -> int:
    graph = _load_graph(config.input_path)
    truth = oracle_apsp(graph)
    kv = config.out_format == "kv"
    status = EXIT_OK

    _, padded = padded_node_count(graph.node_count)
    for name in EXPECTED_CORRECT:
        if name == "qfw" and padded > config.qfw_cap:
            print("match.qfw=skipped" if kv else "qfw: skipped (padded size above cap)", file=out)
            continue
        dist, _ = _run_solver(name, graph, config)
        ok = dist == truth
        if not ok:
            status = EXIT_INCONSISTENT
        if kv:
            print(f"match.{name}={'true' if ok else 'false'}", file=out)
        else:
            print(f"{name}: {'match' if ok else 'MISMATCH against oracle'}", file=out)

    report = detect_divergence(graph)
    if kv:
        print(f"match.layered-printed={'true' if report.equal else 'false'}", file=out)
        if not report.equal:
            i, j = report.cell
            print(f"divergence.cell={i},{j}", file=out)
            print(f"divergence.printed={format_dist(report.printed_value)}", file=out)
            print(f"divergence.oracle={format_dist(report.oracle_value)}", file=out)
    elif report.equal:
        print("layered-printed: match", file=out)
    else:
        i, j = report.cell
        print(
            f"layered-printed: diverges at ({i}, {j}) "
            f"printed={format_dist(report.printed_value)} "
            f"oracle={format_dist(report.oracle_value)} (reported, not a failure)",
            file=out,
        )
    if kv:
        print(f"consistent={'true' if status == EXIT_OK else 'false'}", file=out)
    else:
        print("result: consistent" if status == EXIT_OK else "result: INCONSISTENT", file=out)
    return status


def cmd_audit(config: RunConfig, out) -> int:
    graph = _load_graph(config.input_path)
    report = detect_divergence(graph)
    kv = config.out_format == "kv"
    if kv:
        print(f"printed_matches_oracle={'true' if report.equal else 'false'}", file=out)
        if not report.equal:
            i, j = report.cell
            print(f"first_divergent_cell={i},{j}", file=out)
            print(f"printed_value={format_dist(report.printed_value)}", file=out)
            print(f"oracle_value={format_dist(report.oracle_value)}", file=out)
        print(f"corrected_matches_oracle={'true' if report.corrected_matches_oracle else 'false'}",
              file=out)
    elif report.equal:
        print("stale-buffer variant matches the oracle on this input", file=out)
    else:
        i, j = report.cell
        print(f"stale-buffer variant diverges at ({i}, {j}): "
              f"printed={format_dist(report.printed_value)} "
              f"oracle={format_dist(report.oracle_value)}", file=out)
    if not report.corrected_matches_oracle:
        if not kv:
            print("corrected variant MISMATCHES the oracle (internal bug)", file=out)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_qsim(config: RunConfig, out) -> int:
    graph = _load_graph(config.input_path)
    _, padded = padded_node_count(graph.node_count)
    if padded > config.qfw_cap:
        raise UsageError(
            f"padded size {padded} exceeds the branch-enumeration cap "
            f"{config.qfw_cap}; raise --qfw-cap to force"
        )
    dist, _, counters = qfw_run(graph, shuffle_seed=config.shuffle_seed)
    report = complexity_report(counters, graph.node_count)
    _emit_matrix(dist, config.out_format, out)
    print(report.to_kv() if config.out_format == "kv" else report.to_text(), file=out)
    return EXIT_OK


def cmd_bench(config: RunConfig, out) -> int:
    if config.input_path is not None:
        graph = _load_graph(config.input_path)
    else:
        graph = random_graph(config.node_count, config.edge_probability,
                             config.max_weight, config.seed)
    kv = config.out_format == "kv"
    emitted: set[str] = set()

    def emit(key: str, value) -> None:
        emitted.add(key)
        print(f"{key}={value}" if kv else f"{key:32} {value}", file=out)

    emit("nodes", graph.node_count)
    emit("edges", len(graph.edges))
    emit("seed", config.seed)

    def timed(fn, *args):
        start = time.perf_counter()
        fn(*args)
        return time.perf_counter() - start

    emit("time.classical", f"{timed(fw_classical, graph):.6f}")
    emit("time.layered", f"{timed(fw_layered_corrected, graph):.6f}")
    for workers in config.workers:
        emit(f"time.parallel.w{workers}", f"{timed(fw_parallel, graph, workers):.6f}")
        emit(f"time.parallel_inplace.w{workers}",
             f"{timed(fw_parallel_inplace, graph, workers):.6f}")

    qubits, padded = padded_node_count(graph.node_count)
    if padded <= config.qfw_cap:
        start = time.perf_counter()
        _, _, counters = qfw_run(graph)
        emit("time.qfw_sim", f"{time.perf_counter() - start:.6f}")
        report = complexity_report(counters, graph.node_count)
        if kv:
            for line in report.to_kv().splitlines():
                if line.split("=", 1)[0] not in emitted:
                    print(line, file=out)
        else:
            print(report.to_text(), file=out)
    else:
        # Too large to enumerate; the model-side counts are closed-form.
        emit("qfw", "skipped (padded size above cap)")
        emit("model.hadamard_gates", padded * 2 * qubits)
        emit("model.total_ops", padded * (2 * qubits + 5))
        emit("classical.relaxations", graph.node_count**3)
    return EXIT_OK


def cmd_gen(config: RunConfig, out) -> int:
    graph = random_graph(config.node_count, config.edge_probability,
                         config.max_weight, config.seed)
    text = serialize_graph(graph)
    if config.output_path is None:
        out.write(text)
    else:
        with open(config.output_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "compare": cmd_compare,
    "audit": cmd_audit,
    "qsim": cmd_qsim,
    "bench": cmd_bench,
    "gen": cmd_gen,
}


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        return _COMMANDS[config.command](config, out)
    except UsageError as exc:
        print(f"fwlab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"fwlab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:  # bad parameter values (probabilities, counts)
        print(f"fwlab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fwlab: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
