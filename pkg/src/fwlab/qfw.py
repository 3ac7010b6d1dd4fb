"""Branch-enumeration simulation of the superposition-style solver.

Each pivot sweep replaces the two inner loops with one uniform
superposition over all (i, j) index pairs: 2n Hadamard applications spread
two n-qubit registers over 2^(2n) basis branches, an oracle lookup fills
the distance registers d0..d3 per branch, and a conditional write-back
lands in the (k + 1) mod 2 buffer. The simulation evaluates every branch
explicitly as a classical table operation; amplitudes are carried to check
normalization but never steer control flow.

The node count is padded up to the next power of two with isolated nodes,
which can never shorten a path, and the returned matrices are restricted to
the original nodes.

Between sweeps the freshly written buffer is read out classically: the next
sweep's write buffer starts as a copy of it, so d0 always sees the value
produced by the previous sweep and the run is cell-for-cell identical to
the corrected double-buffer recurrence.

Cost accounting keeps two ledgers. The unit-cost superposition model
charges one operation per gate or register-wide query, so Hadamard work
grows as V * 2 * log2(V); the enumeration itself performs V^3 branch
evaluations. ``complexity_report`` emits both, labeled, next to the V^3
relaxation count of the classical triple loop.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import (
    Dist,
    DistanceMatrix,
    Graph,
    Pred,
    PredecessorMatrix,
    ext_add,
    mutable_init,
)
from .layered import LayeredDistance


@dataclass(frozen=True)
class IndexRegister:
    """A register of qubits addressing basis_size = 2**qubit_count states."""

    qubit_count: int

    def __post_init__(self):
        if self.qubit_count < 0:
            raise ValueError("qubit_count must be non-negative")

    @property
    def basis_size(self) -> int:
        return 1 << self.qubit_count


@dataclass(frozen=True)
class BranchTable:
    """All (i, j) basis branches of two index registers, with amplitudes."""

    qubit_count: int
    branches: tuple[tuple[int, int, float], ...]

    def squared_weight_sum(self) -> float:
        return sum(amp * amp for _, _, amp in self.branches)


@dataclass(frozen=True)
class DistanceRegisters:
    """Oracle results for one branch; d3 is always ext_add(d1, d2)."""

    d0: Dist
    d1: Dist
    d2: Dist
    d3: Dist

    def __post_init__(self):
        if self.d3 != ext_add(self.d1, self.d2):
            raise ValueError("d3 must equal d1 + d2 under extended addition")


@dataclass
class OpCounters:
    """Operation tallies for one run; see complexity_report for semantics."""

    hadamard_gates: int = 0
    oracle_queries: int = 0
    comparisons: int = 0
    conditional_writes: int = 0
    branch_evaluations: int = 0


def padded_node_count(node_count: int) -> tuple[int, int]:
    """(qubits per index register, padded node count) for a node count."""
    if node_count < 1:
        raise ValueError("node_count must be at least 1")
    qubits = (node_count - 1).bit_length()
    return qubits, 1 << qubits


def prepare_superposition(qubit_count: int, counters: Optional[OpCounters] = None) -> BranchTable:
    """Enumerate the uniform superposition produced by 2n Hadamard gates.

    Each of the 2^(2n) branches carries the joint amplitude 2^(-n), so the
    squared weights sum to one.
    """
    size = IndexRegister(qubit_count).basis_size
    amplitude = 2.0 ** -qubit_count
    branches = tuple(
        (i, j, amplitude) for i in range(size) for j in range(size)
    )
    if counters is not None:
        counters.hadamard_gates += 2 * qubit_count
    return BranchTable(qubit_count, branches)


def oracle_query(
    state: LayeredDistance,
    k: int,
    branch: tuple[int, int],
    counters: Optional[OpCounters] = None,
) -> DistanceRegisters:
    """Fill the distance registers for one basis branch.

    d0 is the write buffer's current value for the branch cell, d1 and d2
    are the read buffer's row/column entries for pivot k, d3 = d1 + d2.
    Counted as three register-wide queries plus one branch evaluation.
    """
    i, j = branch
    size = state.size
    if not 0 <= k < size:
        raise ValueError(f"pivot {k} out of range for {size} nodes")
    if not (0 <= i < size and 0 <= j < size):
        raise ValueError(f"branch ({i}, {j}) out of range for {size} nodes")
    read = state.layers[state.read_index(k)]
    write = state.layers[state.write_index(k)]
    d0 = write[i][j]
    d1 = read[i][k]
    d2 = read[k][j]
    if counters is not None:
        counters.oracle_queries += 3
        counters.branch_evaluations += 1
    return DistanceRegisters(d0, d1, d2, ext_add(d1, d2))


def conditional_update(
    state: LayeredDistance,
    pred: Optional[list[list[Pred]]],
    k: int,
    branch: tuple[int, int],
    registers: DistanceRegisters,
    counters: Optional[OpCounters] = None,
) -> LayeredDistance:
    """Write d3 into the write buffer when it strictly beats d0.

    On a tie or worse, d0 is carried over so the write buffer holds a
    complete snapshot after every sweep. Predecessor rows, when given, get
    pivot k recorded only on a strict improvement.
    """
    i, j = branch
    write = state.layers[state.write_index(k)]
    if counters is not None:
        counters.comparisons += 1
    if registers.d3 < registers.d0:
        write[i][j] = registers.d3
        if pred is not None:
            pred[i][j] = k
        if counters is not None:
            counters.conditional_writes += 1
    else:
        write[i][j] = registers.d0
    return state


def qfw_run(
    graph: Graph, shuffle_seed: Optional[int] = None
) -> tuple[DistanceMatrix, PredecessorMatrix, OpCounters]:
    """Run a full branch enumeration for every pivot of the padded graph.

    ``shuffle_seed`` permutes the branch evaluation order within each sweep
    (the result never depends on it: each branch touches its own cell).
    Returns matrices restricted to the original nodes plus the counters.
    """
    original = graph.node_count
    qubits, padded = padded_node_count(original)
    padded_graph = graph if padded == original else Graph(padded, graph.edges)

    state = LayeredDistance.from_graph(padded_graph)
    _, pred = mutable_init(padded_graph)
    counters = OpCounters()
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None

    for k in range(padded):
        table = prepare_superposition(qubits, counters)
        read = state.layers[state.read_index(k)]
        write = state.layers[state.write_index(k)]
        for i in range(padded):
            write[i][:] = read[i]  # classical readout of the previous sweep
        branches = list(table.branches)
        if rng is not None:
            rng.shuffle(branches)
        for i, j, _amplitude in branches:
            registers = oracle_query(state, k, (i, j), counters)
            conditional_update(state, pred, k, (i, j), registers, counters)

    final = state.layers[padded % 2]
    dist = DistanceMatrix([row[:original] for row in final[:original]])
    pred_matrix = PredecessorMatrix([row[:original] for row in pred[:original]])
    return dist, pred_matrix, counters


@dataclass(frozen=True)
class ComplexityReport:
    """Side-by-side operation accounting for one completed run.

    ``model_*`` fields follow the unit-cost superposition model: per sweep,
    2n Hadamard gates, three register-wide oracle queries, one comparison
    and one conditional write, each charged once regardless of how many
    branches they span. ``simulation_*`` fields are the honest classical
    work of enumerating every branch. ``classical_relaxations`` is the
    triple loop's cell-relaxation count on the unpadded graph.
    """

    node_count: int
    padded_count: int
    qubits_per_register: int
    model_hadamard_gates: int
    model_oracle_queries: int
    model_comparisons: int
    model_conditional_writes: int
    model_total_ops: int
    simulation_branch_evaluations: int
    simulation_oracle_queries: int
    simulation_comparisons: int
    simulation_conditional_writes: int
    classical_relaxations: int

    def to_kv(self) -> str:
        pairs = [
            ("nodes", self.node_count),
            ("padded_nodes", self.padded_count),
            ("qubits_per_register", self.qubits_per_register),
            ("model.hadamard_gates", self.model_hadamard_gates),
            ("model.oracle_queries", self.model_oracle_queries),
            ("model.comparisons", self.model_comparisons),
            ("model.conditional_writes", self.model_conditional_writes),
            ("model.total_ops", self.model_total_ops),
            ("simulation.branch_evaluations", self.simulation_branch_evaluations),
            ("simulation.oracle_queries", self.simulation_oracle_queries),
            ("simulation.comparisons", self.simulation_comparisons),
            ("simulation.conditional_writes", self.simulation_conditional_writes),
            ("classical.relaxations", self.classical_relaxations),
        ]
        return "\n".join(f"{key}={value}" for key, value in pairs)

    def to_text(self) -> str:
        lines = [
            f"nodes                      {self.node_count}",
            f"padded nodes               {self.padded_count}",
            f"qubits per index register  {self.qubits_per_register}",
            "-- unit-cost superposition model --",
            f"hadamard gates             {self.model_hadamard_gates}",
            f"oracle queries             {self.model_oracle_queries}",
            f"comparisons                {self.model_comparisons}",
            f"conditional writes         {self.model_conditional_writes}",
            f"total operations           {self.model_total_ops}",
            "-- classical simulation work --",
            f"branch evaluations         {self.simulation_branch_evaluations}",
            f"oracle queries             {self.simulation_oracle_queries}",
            f"comparisons                {self.simulation_comparisons}",
            f"conditional writes         {self.simulation_conditional_writes}",
            "-- classical triple loop --",
            f"relaxations                {self.classical_relaxations}",
        ]
        return "\n".join(lines)


def complexity_report(counters: OpCounters, node_count: int) -> ComplexityReport:
    """Build the dual-ledger report for a completed run.

    Raises ValueError when the counters cannot have come from a full run on
    ``node_count`` nodes.
    """
    qubits, padded = padded_node_count(node_count)
    expected = {
        "hadamard_gates": padded * 2 * qubits,
        "branch_evaluations": padded**3,
        "oracle_queries": 3 * padded**3,
        "comparisons": padded**3,
    }
    for field, want in expected.items():
        got = getattr(counters, field)
        if got != want:
            raise ValueError(
                f"counters inconsistent with a completed run on {node_count} nodes: "
                f"{field} is {got}, expected {want}"
            )
    if not 0 <= counters.conditional_writes <= padded**3:
        raise ValueError("conditional_writes outside the possible range")

    return ComplexityReport(
        node_count=node_count,
        padded_count=padded,
        qubits_per_register=qubits,
        model_hadamard_gates=padded * 2 * qubits,
        model_oracle_queries=3 * padded,
        model_comparisons=padded,
        model_conditional_writes=padded,
        model_total_ops=padded * (2 * qubits + 5),
        simulation_branch_evaluations=counters.branch_evaluations,
        simulation_oracle_queries=counters.oracle_queries,
        simulation_comparisons=counters.comparisons,
        simulation_conditional_writes=counters.conditional_writes,
        classical_relaxations=node_count**3,
    )
