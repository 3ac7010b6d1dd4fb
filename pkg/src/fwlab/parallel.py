"""Sweep-parallel solvers: per pivot, cell updates run across worker threads.

Both variants process pivots sequentially with a fork-join barrier between
sweeps and partition the rows into contiguous disjoint blocks, so no cell
is ever written by two workers. The double-buffered form reads only the
frozen previous buffer; the in-place form leans on the fact that row k and
column k are never written during sweep k (their candidates add a zero
diagonal entry), so in-place concurrent relaxation reads only stable cells.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

from .core import (
    INF,
    MAX_FINITE,
    DistanceMatrix,
    Graph,
    PredecessorMatrix,
    mutable_init,
)

WriteObserver = Callable[[int, int, int], None]


def _row_blocks(size: int, worker_count: int) -> list[tuple[int, int]]:
    """Contiguous, disjoint, non-empty [lo, hi) row ranges."""
    count = min(worker_count, size)
    base, extra = divmod(size, count)
    blocks = []
    lo = 0
    for index in range(count):
        hi = lo + base + (1 if index < extra else 0)
        blocks.append((lo, hi))
        lo = hi
    return blocks


def fw_parallel(graph: Graph, worker_count: int) -> tuple[DistanceMatrix, PredecessorMatrix]:
    """Double-buffered parallel solver.

    Bit-identical to fw_layered_corrected for any worker count: every
    worker reads only the previous sweep's buffer and writes its own rows.
    """
    if worker_count < 1:
        raise ValueError("worker_count must be at least 1")
    size = graph.node_count
    read, pred = mutable_init(graph)
    write = [row[:] for row in read]
    blocks = _row_blocks(size, worker_count)
    with ThreadPoolExecutor(max_workers=len(blocks)) as pool:
        for k in range(size):
            futures = [
                pool.submit(_relax_block_buffered, read, write, pred, k, lo, hi)
                for lo, hi in blocks
            ]
            for future in futures:
                future.result()
            read, write = write, read
    return DistanceMatrix(read), PredecessorMatrix(pred)


def _relax_block_buffered(read, write, pred, k, lo, hi) -> None:
    read_k = read[k]
    size = len(read_k)
    for i in range(lo, hi):
        read_i = read[i]
        write_i = write[i]
        write_i[:] = read_i  # full refresh from the frozen read buffer
        via = read_i[k]
        if via == INF:
            continue
        pred_i = pred[i]
        for j in range(size):
            cand = via + read_k[j]
            if cand < write_i[j] and cand <= MAX_FINITE:
                write_i[j] = cand
                pred_i[j] = k


def fw_parallel_inplace(
    graph: Graph,
    worker_count: int,
    write_observer: Optional[WriteObserver] = None,
) -> tuple[DistanceMatrix, PredecessorMatrix]:
    """Single-buffer parallel solver; half the memory of fw_parallel.

    Safe because within sweep k no write ever lands in row k or column k.
    Output (distances and predecessors) equals fw_classical exactly.
    ``write_observer`` is test instrumentation: it is called with
    (k, i, j) before each write.
    """
    if worker_count < 1:
        raise ValueError("worker_count must be at least 1")
    size = graph.node_count
    dist, pred = mutable_init(graph)
    blocks = _row_blocks(size, worker_count)
    with ThreadPoolExecutor(max_workers=len(blocks)) as pool:
        for k in range(size):
            futures = [
                pool.submit(_relax_block_inplace, dist, pred, k, lo, hi, write_observer)
                for lo, hi in blocks
            ]
            for future in futures:
                future.result()
    return DistanceMatrix(dist), PredecessorMatrix(pred)


def _relax_block_inplace(dist, pred, k, lo, hi, write_observer) -> None:
    dist_k = dist[k]
    size = len(dist_k)
    for i in range(lo, hi):
        dist_i = dist[i]
        via = dist_i[k]
        if via == INF:
            continue
        pred_i = pred[i]
        for j in range(size):
            cand = via + dist_k[j]
            if cand < dist_i[j] and cand <= MAX_FINITE:
                if write_observer is not None:
                    write_observer(k, i, j)
                dist_i[j] = cand
                pred_i[j] = k
