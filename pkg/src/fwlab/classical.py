"""Baseline in-place triple-loop solver, plus trace instrumentation.

The traced variant records every successful update so that two structural
facts about the relaxation can be audited on live runs: an accepted update
never involves a repeated index, and a cell updated during sweep k is never
read again within that same sweep.
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
    PredecessorMatrix,
    mutable_init,
)


@dataclass(frozen=True)
class RelaxationEvent:
    """One successful in-place update: cell (i, j) improved via pivot k."""

    k: int
    i: int
    j: int
    old_value: Dist
    new_value: Dist

    def __post_init__(self):
        if not self.new_value < self.old_value:
            raise ValueError("relaxation events record strict improvements only")


@dataclass(frozen=True)
class ObservationReport:
    """Outcome of a trace audit.

    ``violation`` is the first offending event; for the read-after-write
    audit ``conflicting_write`` is the earlier event whose cell got read.
    """

    passed: bool
    violation: Optional[RelaxationEvent] = None
    conflicting_write: Optional[RelaxationEvent] = None


def fw_classical(graph: Graph) -> tuple[DistanceMatrix, PredecessorMatrix]:
    """All-pairs shortest paths via the in-place k/i/j triple loop."""
    dist, pred = mutable_init(graph)
    _relax_in_place(dist, pred, None)
    return DistanceMatrix(dist), PredecessorMatrix(pred)


def fw_classical_traced(
    graph: Graph,
) -> tuple[DistanceMatrix, PredecessorMatrix, list[RelaxationEvent]]:
    """Same result as fw_classical plus every update in execution order."""
    dist, pred = mutable_init(graph)
    events: list[RelaxationEvent] = []
    _relax_in_place(dist, pred, events)
    return DistanceMatrix(dist), PredecessorMatrix(pred), events


def _relax_in_place(dist, pred, events) -> None:
    # Candidates beyond MAX_FINITE saturate to INF and can never improve,
    # which the comparison below encodes without a second branch per cell.
    size = len(dist)
    for k in range(size):
        dist_k = dist[k]
        for i in range(size):
            dist_i = dist[i]
            via = dist_i[k]
            if via == INF:
                continue
            pred_i = pred[i]
            for j in range(size):
                cand = via + dist_k[j]
                if cand < dist_i[j] and cand <= MAX_FINITE:
                    if events is not None:
                        events.append(RelaxationEvent(k, i, j, dist_i[j], cand))
                    dist_i[j] = cand
                    pred_i[j] = k


def check_observation_1(events: list[RelaxationEvent]) -> ObservationReport:
    """Every accepted update must have pairwise-distinct k, i, j."""
    for event in events:
        if event.i == event.j or event.i == event.k or event.j == event.k:
            return ObservationReport(False, violation=event)
    return ObservationReport(True)


def check_observation_2(events: list[RelaxationEvent]) -> ObservationReport:
    """Within one k sweep, an updated cell must never be read again.

    The update at (k, i, j) reads cells (i, k) and (k, j); the audit fails
    if either one was written earlier in the same sweep.
    """
    written: dict[tuple[int, int], RelaxationEvent] = {}
    current_k: Optional[int] = None
    for event in events:
        if event.k != current_k:
            current_k = event.k
            written.clear()
        for cell in ((event.i, event.k), (event.k, event.j)):
            if cell in written:
                return ObservationReport(
                    False, violation=event, conflicting_write=written[cell]
                )
        written[(event.i, event.j)] = event
    return ObservationReport(True)
