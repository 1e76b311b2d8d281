"""
Subpackage for the brute-force orbit oracle.
"""
from cuntz_rep.oracle.base import (
    DepthError,
    OracleResult,
    TruncatedBFS,
    write_dot,
)
from cuntz_rep.oracle.decompose import (
    certify_tail,
    decompose_bfs,
    omega_classes,
    ring_census,
    state_eval,
    vector_state,
)
from cuntz_rep.oracle.models import (
    canonical_bfs,
    compose_bfs,
    product_bfs,
    sum_bfs,
)

__all__ = [
    "DepthError",
    "OracleResult",
    "TruncatedBFS",
    "canonical_bfs",
    "certify_tail",
    "compose_bfs",
    "decompose_bfs",
    "omega_classes",
    "product_bfs",
    "ring_census",
    "state_eval",
    "sum_bfs",
    "vector_state",
    "write_dot",
]
