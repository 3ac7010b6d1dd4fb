"""Cross-verified all-pairs shortest path solvers with exact arithmetic.

The package bundles a classical in-place solver, two double-buffered
variants (one deliberately kept with its stale-read defect, plus the
corrected form), thread-parallel sweeps, a branch-enumeration simulation of
a superposition-style solver with dual-ledger operation accounting, and two
independent oracles used to validate all of them.
"""

from .classical import (
    ObservationReport,
    RelaxationEvent,
    check_observation_1,
    check_observation_2,
    fw_classical,
    fw_classical_traced,
)
from .core import (
    DIRECT,
    INF,
    MAX_FINITE,
    DistanceMatrix,
    Graph,
    GraphFormatError,
    PredecessorMatrix,
    ReconstructionError,
    ext_add,
    init_distance,
    parse_graph,
    path_weight,
    random_graph,
    reconstruct_path,
    serialize_graph,
)
from .layered import (
    DivergenceReport,
    LayeredDistance,
    detect_divergence,
    fw_layered_as_printed,
    fw_layered_corrected,
    fw_layered_step,
)
from .oracle import oracle_apsp, oracle_enumerate
from .parallel import fw_parallel, fw_parallel_inplace
from .qfw import (
    BranchTable,
    ComplexityReport,
    DistanceRegisters,
    IndexRegister,
    OpCounters,
    complexity_report,
    conditional_update,
    oracle_query,
    padded_node_count,
    prepare_superposition,
    qfw_run,
)

__all__ = [
    "DIRECT",
    "INF",
    "MAX_FINITE",
    "BranchTable",
    "ComplexityReport",
    "DistanceMatrix",
    "DistanceRegisters",
    "DivergenceReport",
    "Graph",
    "GraphFormatError",
    "IndexRegister",
    "LayeredDistance",
    "ObservationReport",
    "OpCounters",
    "PredecessorMatrix",
    "ReconstructionError",
    "RelaxationEvent",
    "check_observation_1",
    "check_observation_2",
    "complexity_report",
    "conditional_update",
    "detect_divergence",
    "ext_add",
    "fw_classical",
    "fw_classical_traced",
    "fw_layered_as_printed",
    "fw_layered_corrected",
    "fw_layered_step",
    "fw_parallel",
    "fw_parallel_inplace",
    "init_distance",
    "oracle_apsp",
    "oracle_enumerate",
    "oracle_query",
    "padded_node_count",
    "parse_graph",
    "path_weight",
    "prepare_superposition",
    "qfw_run",
    "random_graph",
    "reconstruct_path",
    "serialize_graph",
]
