"""Graph and distance-matrix data model shared by every solver.

Distances are exact: finite values are non-negative Python ints capped at
``MAX_FINITE``, and the absence of a path is the ``INF`` sentinel, never a
"large number" stand-in.  Sums beyond ``MAX_FINITE`` saturate to ``INF``
(see :func:`ext_add`) so fixed-width overflow can never masquerade as a
path.  Predecessor entries store the pivot node through which a pair was
last improved, so path reconstruction recurses on both halves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Union

INF = float("inf")

# Upper bound of the finite distance range (64-bit signed). Parsing rejects
# larger weights and ext_add saturates to INF instead of exceeding it.
MAX_FINITE = 2**63 - 1

Dist = Union[int, float]
EdgeTriple = tuple[int, int, int]


class _DirectEdge:
    """Marker for a predecessor entry meaning "the edge (i, j) itself"."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "DIRECT"


#: Predecessor entry for a pair connected by its own edge (or the diagonal).
DIRECT = _DirectEdge()

#: A predecessor entry: pivot node index, DIRECT, or None when unreachable.
Pred = Union[int, _DirectEdge, None]


class GraphFormatError(ValueError):
    """Malformed edge-list input; ``line_no`` is the offending 1-based line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ReconstructionError(RuntimeError):
    """Predecessor/distance matrices are mutually inconsistent (solver bug)."""


def ext_add(a: Dist, b: Dist) -> Dist:
    """Add two extended distances.

    INF absorbs, and a finite sum beyond MAX_FINITE saturates to INF rather
    than wrapping.
    """
    if a == INF or b == INF:
        return INF
    total = a + b
    return total if total <= MAX_FINITE else INF


def is_distance(value: Dist) -> bool:
    """True for INF or a finite int in [0, MAX_FINITE]."""
    if value == INF:
        return True
    return (
        isinstance(value, int)
        and not isinstance(value, bool)
        and 0 <= value <= MAX_FINITE
    )


@dataclass(frozen=True)
class Graph:
    """Directed graph with non-negative integer edge weights.

    ``edges`` holds (source, target, weight) triples. At most one edge per
    ordered pair, no self-loops, all indices in ``range(node_count)`` and
    all weights in [0, MAX_FINITE].
    """

    node_count: int
    edges: tuple[EdgeTriple, ...] = ()

    def __post_init__(self):
        if self.node_count < 1:
            raise ValueError("graph needs at least one node")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        seen: set[tuple[int, int]] = set()
        for edge in self.edges:
            if len(edge) != 3:
                raise ValueError(f"edge {edge!r} is not a (u, v, w) triple")
            u, v, w = edge
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.node_count} nodes")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if w < 0:
                raise ValueError(f"negative weight {w} on edge ({u}, {v})")
            if w > MAX_FINITE:
                raise ValueError(f"weight {w} on edge ({u}, {v}) exceeds MAX_FINITE")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    def weight_map(self) -> dict[tuple[int, int], int]:
        """Lookup table from (source, target) to weight."""
        return {(u, v): w for u, v, w in self.edges}


def _check_rows(rows, name: str) -> tuple[tuple, ...]:
    frozen = tuple(tuple(row) for row in rows)
    size = len(frozen)
    if size < 1:
        raise ValueError(f"{name} must have at least one row")
    for row in frozen:
        if len(row) != size:
            raise ValueError(f"{name} must be square")
    return frozen


@dataclass(frozen=True)
class DistanceMatrix:
    """Square matrix of extended distances with a zero diagonal."""

    rows: tuple[tuple[Dist, ...], ...]

    def __post_init__(self):
        frozen = _check_rows(self.rows, "distance matrix")
        for i, row in enumerate(frozen):
            if row[i] != 0:
                raise ValueError(f"diagonal entry ({i}, {i}) must be 0, got {row[i]!r}")
            for j, value in enumerate(row):
                if not is_distance(value):
                    raise ValueError(f"invalid distance {value!r} at ({i}, {j})")
        object.__setattr__(self, "rows", frozen)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: tuple[int, int]) -> Dist:
        i, j = key
        return self.rows[i][j]

    def to_text(self) -> str:
        """One row per line, entries space-separated, INF spelled out."""
        return "\n".join(" ".join(format_dist(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class PredecessorMatrix:
    """Square matrix of pivot records (int pivot, DIRECT, or None)."""

    rows: tuple[tuple[Pred, ...], ...]

    def __post_init__(self):
        frozen = _check_rows(self.rows, "predecessor matrix")
        size = len(frozen)
        for i, row in enumerate(frozen):
            for j, entry in enumerate(row):
                if entry is None or entry is DIRECT:
                    continue
                if isinstance(entry, int) and not isinstance(entry, bool):
                    if 0 <= entry < size:
                        continue
                raise ValueError(f"invalid predecessor {entry!r} at ({i}, {j})")
        object.__setattr__(self, "rows", frozen)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: tuple[int, int]) -> Pred:
        i, j = key
        return self.rows[i][j]


def format_dist(value: Dist) -> str:
    return "INF" if value == INF else str(value)


def mutable_init(graph: Graph) -> tuple[list[list[Dist]], list[list[Pred]]]:
    """Working copies of the initial distance/predecessor matrices.

    Solvers mutate these lists in place and freeze them on return.
    """
    size = graph.node_count
    dist: list[list[Dist]] = [[INF] * size for _ in range(size)]
    pred: list[list[Pred]] = [[None] * size for _ in range(size)]
    for i in range(size):
        dist[i][i] = 0
        pred[i][i] = DIRECT
    for u, v, w in graph.edges:
        dist[u][v] = w
        pred[u][v] = DIRECT
    return dist, pred


def init_distance(graph: Graph) -> tuple[DistanceMatrix, PredecessorMatrix]:
    """Initial matrices: edge weights where edges exist, INF elsewhere."""
    dist, pred = mutable_init(graph)
    return DistanceMatrix(dist), PredecessorMatrix(pred)


def parse_graph(text: Union[str, bytes]) -> Graph:
    """Parse the edge-list format: header line "V E", then E lines "u v w".

    Blank lines are ignored. Every malformed construct is reported with its
    line number; duplicate ordered pairs and self-loops are errors.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    numbered = [
        (line_no, line.strip())
        for line_no, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not numbered:
        raise GraphFormatError(1, "missing header line")

    header_no, header = numbered[0]
    fields = header.split()
    if len(fields) != 2:
        raise GraphFormatError(header_no, f"header must be 'V E', got {header!r}")
    try:
        node_count, edge_count = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphFormatError(header_no, f"header must hold two integers, got {header!r}") from None
    if node_count < 1:
        raise GraphFormatError(header_no, f"node count must be positive, got {node_count}")
    if edge_count < 0:
        raise GraphFormatError(header_no, f"edge count must be non-negative, got {edge_count}")

    edges: list[EdgeTriple] = []
    seen: set[tuple[int, int]] = set()
    for line_no, line in numbered[1:]:
        if len(edges) == edge_count:
            raise GraphFormatError(line_no, f"expected {edge_count} edges, found extra data")
        fields = line.split()
        if len(fields) != 3:
            raise GraphFormatError(line_no, f"edge line must be 'u v w', got {line!r}")
        try:
            u, v, w = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            raise GraphFormatError(line_no, f"edge line must hold three integers, got {line!r}") from None
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise GraphFormatError(line_no, f"node index out of range in edge ({u}, {v})")
        if u == v:
            raise GraphFormatError(line_no, f"self-loop at node {u}")
        if w < 0:
            raise GraphFormatError(line_no, f"negative weight {w}")
        if w > MAX_FINITE:
            raise GraphFormatError(line_no, f"weight {w} exceeds MAX_FINITE")
        if (u, v) in seen:
            raise GraphFormatError(line_no, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v, w))

    if len(edges) != edge_count:
        last_no = numbered[-1][0]
        raise GraphFormatError(last_no, f"expected {edge_count} edges, found {len(edges)}")
    return Graph(node_count, tuple(edges))


def serialize_graph(graph: Graph) -> str:
    """Inverse of parse_graph; edges are emitted sorted by (u, v)."""
    lines = [f"{graph.node_count} {len(graph.edges)}"]
    for u, v, w in sorted(graph.edges):
        lines.append(f"{u} {v} {w}")
    return "\n".join(lines) + "\n"


def random_graph(node_count: int, edge_probability: float, max_weight: int = 100,
                 seed: int = 0) -> Graph:
    """Seeded Erdos-Renyi style digraph; bit-reproducible for a fixed seed.

    Each ordered non-diagonal pair is present independently with the given
    probability; weights are uniform ints in [0, max_weight].
    """
    if node_count < 1:
        raise ValueError("node_count must be at least 1")
    if not 0 <= edge_probability <= 1:
        raise ValueError("edge_probability must lie in [0, 1]")
    if max_weight < 1:
        raise ValueError("max_weight must be positive")
    rng = random.Random(seed)
    edges = []
    for u in range(node_count):
        for v in range(node_count):
            if u != v and rng.random() < edge_probability:
                edges.append((u, v, rng.randint(0, max_weight)))
    return Graph(node_count, tuple(edges))


def reconstruct_path(pred: PredecessorMatrix, dist: DistanceMatrix, i: int,
                     j: int) -> Union[list[int], None]:
    """Expand pivot records into the node sequence i, ..., j.

    Returns None exactly when dist[i, j] is INF. Raises ReconstructionError
    when the matrices cannot have come from one solver run (expansion
    cycles, or a finite distance with no record).
    """
    if dist[i, j] == INF:
        return None
    return _expand(pred, i, j, set())


def _expand(pred: PredecessorMatrix, i: int, j: int,
            active: set[tuple[int, int]]) -> list[int]:
    if i == j:
        return [i]
    entry = pred[i, j]
    if entry is None:
        raise ReconstructionError(f"finite distance but no predecessor record at ({i}, {j})")
    if entry is DIRECT:
        return [i, j]
    if (i, j) in active:
        raise ReconstructionError(f"cycle while expanding pair ({i}, {j})")
    active.add((i, j))
    left = _expand(pred, i, entry, active)
    right = _expand(pred, entry, j, active)
    active.remove((i, j))
    return left[:-1] + right


def path_weight(graph: Graph, nodes: Iterable[int]) -> Dist:
    """Sum of edge weights along consecutive nodes; 0 for a single node.

    Raises ValueError when a claimed edge does not exist in the graph.
    """
    weights = graph.weight_map()
    total: Dist = 0
    node_list = list(nodes)
    for u, v in zip(node_list, node_list[1:]):
        if (u, v) not in weights:
            raise ValueError(f"path uses missing edge ({u}, {v})")
        total = ext_add(total, weights[(u, v)])
    return total
