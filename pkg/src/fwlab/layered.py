"""Double-buffered solvers and the divergence audit between them.

Two variants share the same two-buffer layout (sweep k reads the buffer at
index k % 2 and writes the one at (k + 1) % 2) but differ in where the MIN
takes its first argument:

* ``as_printed`` keeps the write buffer's stale contents as the first
  argument.  Because the write buffer was last touched two sweeps earlier,
  improvements of alternating parity can be dropped; the variant is kept
  deliberately, as the audit subject.
* ``corrected`` refreshes every cell from the read buffer, so each sweep is
  a pure function of the previous sweep's output.  Everything downstream
  (the parallel and superposition solvers) builds on this recurrence.

``detect_divergence`` runs both against the reference oracle and reports
the first cell where the stale variant goes wrong, if any.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    INF,
    MAX_FINITE,
    Dist,
    DistanceMatrix,
    Graph,
    Pred,
    PredecessorMatrix,
    mutable_init,
)
from .oracle import oracle_apsp

VARIANTS = ("as_printed", "corrected")


@dataclass
class LayeredDistance:
    """Two V x V distance buffers indexed by sweep parity."""

    layers: list[list[list[Dist]]]

    @classmethod
    def from_graph(cls, graph: Graph) -> "LayeredDistance":
        first, _ = mutable_init(graph)
        second = [row[:] for row in first]
        return cls([first, second])

    @property
    def size(self) -> int:
        return len(self.layers[0])

    @staticmethod
    def read_index(k: int) -> int:
        return k % 2

    @staticmethod
    def write_index(k: int) -> int:
        return (k + 1) % 2


@dataclass(frozen=True)
class DivergenceReport:
    """Audit outcome: does the stale-buffer variant match the oracle?"""

    equal: bool
    cell: Optional[tuple[int, int]] = None
    printed_value: Optional[Dist] = None
    oracle_value: Optional[Dist] = None
    corrected_matches_oracle: bool = True


def fw_layered_step(
    state: LayeredDistance,
    k: int,
    variant: str = "corrected",
    pred: Optional[list[list[Pred]]] = None,
) -> LayeredDistance:
    """Apply one pivot sweep, returning a new state.

    The read buffer is never modified. For the corrected variant the write
    buffer is a pure function of the read buffer; for as_printed it also
    depends on the write buffer's stale contents. ``pred`` rows, when given,
    receive the pivot k wherever the candidate strictly wins (corrected
    semantics only make sense there, but the update rule is identical).
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    size = state.size
    if not 0 <= k < size:
        raise ValueError(f"pivot {k} out of range for {size} nodes")

    read = state.layers[state.read_index(k)]
    stale = state.layers[state.write_index(k)]
    read_k = read[k]
    new_write: list[list[Dist]] = []
    for i in range(size):
        read_i = read[i]
        base = read_i if variant == "corrected" else stale[i]
        row = list(base)
        via = read_i[k]
        if via != INF:
            pred_i = pred[i] if pred is not None else None
            for j in range(size):
                cand = via + read_k[j]
                if cand < row[j] and cand <= MAX_FINITE:
                    row[j] = cand
                    if pred_i is not None:
                        pred_i[j] = k
        new_write.append(row)

    layers: list[list[list[Dist]]] = [[], []]
    layers[state.read_index(k)] = read
    layers[state.write_index(k)] = new_write
    return LayeredDistance(layers)


def fw_layered_as_printed(graph: Graph) -> DistanceMatrix:
    """Run the stale-buffer recurrence for every pivot; distances only.

    The result can overestimate distances (never underestimate); see
    detect_divergence. No predecessor matrix is maintained.
    """
    state = LayeredDistance.from_graph(graph)
    size = graph.node_count
    for k in range(size):
        state = fw_layered_step(state, k, "as_printed")
    return DistanceMatrix(state.layers[size % 2])


def fw_layered_corrected(graph: Graph) -> tuple[DistanceMatrix, PredecessorMatrix]:
    """Run the corrected recurrence; matches fw_classical exactly."""
    state = LayeredDistance.from_graph(graph)
    _, pred = mutable_init(graph)
    size = graph.node_count
    for k in range(size):
        state = fw_layered_step(state, k, "corrected", pred)
    return DistanceMatrix(state.layers[size % 2]), PredecessorMatrix(pred)


def detect_divergence(graph: Graph) -> DivergenceReport:
    """Run both variants plus the oracle and compare cell by cell.

    Reports the first (row-major) cell where the stale variant differs from
    the oracle, along with both values.
    """
    printed = fw_layered_as_printed(graph)
    corrected, _ = fw_layered_corrected(graph)
    truth = oracle_apsp(graph)
    corrected_ok = corrected == truth
    for i in range(graph.node_count):
        for j in range(graph.node_count):
            if printed[i, j] != truth[i, j]:
                return DivergenceReport(
                    equal=False,
                    cell=(i, j),
                    printed_value=printed[i, j],
                    oracle_value=truth[i, j],
                    corrected_matches_oracle=corrected_ok,
                )
    return DivergenceReport(equal=True, corrected_matches_oracle=corrected_ok)
