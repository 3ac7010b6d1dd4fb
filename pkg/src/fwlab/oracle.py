"""Ground-truth distance computations used to validate every solver.

Neither function shares relaxation code with the sweep-based solvers, and
the two are built differently from each other, so no single bug can
validate itself: one relaxes the edge list per source, the other
exhaustively enumerates simple paths.
"""

from __future__ import annotations

from .core import INF, MAX_FINITE, DistanceMatrix, Graph


def oracle_apsp(graph: Graph) -> DistanceMatrix:
    """Edge-list relaxation per source, at most V-1 passes each.

    Correct for non-negative weights; stops early once a pass changes
    nothing. Candidate sums beyond MAX_FINITE saturate and never improve.
    """
    size = graph.node_count
    edges = graph.edges
    rows = []
    for source in range(size):
        dist = [INF] * size
        dist[source] = 0
        for _ in range(size - 1):
            changed = False
            for u, v, w in edges:
                du = dist[u]
                if du == INF:
                    continue
                cand = du + w
                if cand <= MAX_FINITE and cand < dist[v]:
                    dist[v] = cand
                    changed = True
            if not changed:
                break
        rows.append(dist)
    return DistanceMatrix(rows)


def oracle_enumerate(graph: Graph, max_nodes: int = 10) -> DistanceMatrix:
    """Minimum weight over all simple paths, per ordered pair.

    Only viable for tiny graphs; refuses anything above ``max_nodes``.
    """
    size = graph.node_count
    if size > max_nodes:
        raise ValueError(f"enumeration oracle limited to {max_nodes} nodes, got {size}")

    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(size)]
    for u, v, w in graph.edges:
        adjacency[u].append((v, w))

    rows = [[INF] * size for _ in range(size)]

    def walk(source: int, node: int, acc: int, seen: set[int]) -> None:
        if acc < rows[source][node]:
            rows[source][node] = acc
        for nxt, w in adjacency[node]:
            if nxt in seen:
                continue
            total = acc + w
            if total > MAX_FINITE:  # saturated sums never yield a finite path
                continue
            seen.add(nxt)
            walk(source, nxt, total, seen)
            seen.remove(nxt)

    for source in range(size):
        walk(source, source, 0, {source})
    return DistanceMatrix(rows)
