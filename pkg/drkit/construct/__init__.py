from .params import (
    CisParams,
    solve_params,
    make_params,
    capacity,
    required_dimension,
    power_at_least,
    DEFAULT_MAX_FAMILY_SIZE,
    DEFAULT_MAX_DIMENSION,
)
from .builder import BlockTree, RecursionFrame, build_cis, near_equal_runs
from ..report import Violation, VerificationReport
from .verification import verify_cis, verify_counterexample, check_tree_matches
from .counterexample import DEFAULT_MAX_SUBSETS
