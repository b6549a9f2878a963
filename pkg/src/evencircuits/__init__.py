"""Exact detection of even circuits, even cycles and directed cycles via
binomial minors of the reduced Jacobian dual of an edge ideal."""

from .algebra import (
    LinearColumn,
    ReducedJacobianDual,
    TMonomial,
    TPolynomial,
    minor_determinant,
    reduced_jacobian_dual,
    taylor_linear_columns,
    theta_image_is_zero,
)
from .dicycles import (
    CHReport,
    CHSweepReport,
    DirectedCycle,
    ch_probe,
    ch_sweep,
    directed_cycles_from_even_cycles,
    enumerate_directed_cycles,
)
from .engine import (
    enumerate_even_cycles,
    enumerate_indecomposable_even_circuits,
    enumerate_primitive_even_walks,
)
from .graphs import (
    BipartiteLift,
    Circuit,
    Digraph,
    Graph,
    GraphError,
    build_lift,
    canonicalize_circuit,
    parse_digraph,
    parse_graph,
)
from .minors import (
    BinomialShape,
    MinorCertificate,
    Rejection,
    certify_circuit_minor,
    certify_cycle_minor,
    certify_directed_minor,
    certify_walk_minor,
    classify_binomial,
    is_center_distinct,
)
from .rees import (
    Block,
    BlockDecomposition,
    LinearSyzygy,
    ReesGenerator,
    block_decompose,
    linear_syzygies,
    rees_nonlinear_generators,
    verify_in_J,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialShape",
    "BipartiteLift",
    "Block",
    "BlockDecomposition",
    "CHReport",
    "CHSweepReport",
    "Circuit",
    "Digraph",
    "DirectedCycle",
    "Graph",
    "GraphError",
    "LinearColumn",
    "LinearSyzygy",
    "MinorCertificate",
    "ReducedJacobianDual",
    "ReesGenerator",
    "Rejection",
    "TMonomial",
    "TPolynomial",
    "block_decompose",
    "build_lift",
    "canonicalize_circuit",
    "certify_circuit_minor",
    "certify_cycle_minor",
    "certify_directed_minor",
    "certify_walk_minor",
    "ch_probe",
    "ch_sweep",
    "classify_binomial",
    "directed_cycles_from_even_cycles",
    "enumerate_directed_cycles",
    "enumerate_even_cycles",
    "enumerate_indecomposable_even_circuits",
    "enumerate_primitive_even_walks",
    "is_center_distinct",
    "linear_syzygies",
    "minor_determinant",
    "parse_digraph",
    "parse_graph",
    "reduced_jacobian_dual",
    "rees_nonlinear_generators",
    "taylor_linear_columns",
    "theta_image_is_zero",
    "verify_in_J",
]
