"""Maximum independent set on unit disk graphs.

Exact solvers for disks stabbed by one horizontal line, the strip-based
factor-2 approximation built on them, a brute-force oracle and a harness
that compares them.
"""
from .approximation import ParityUnion, approx2_solve, combine_parity
from .generate import GenParams, generate
from .geometry import (
    Disk,
    InputError,
    Instance,
    InvariantViolation,
    SolveResult,
    adjacent,
    dist_sq,
    scale,
    stabs_line,
    verify_independent,
    x_order_key,
)
from .line_solvers import (
    C_STAR,
    BruteForceCapExceeded,
    DpTable,
    RiTable,
    StabbedInstance,
    brute_force_solve,
    build_ri_tables,
    pair_state_dp_solve,
    paper_dp_solve,
    reconstruct_solution,
    split_stabbed,
)
from .strips import StripAssignment, check_observation1, decompose

__version__ = "0.1.0"
