"""Minimum-average-length binary codes with a bounded number of ones per codeword."""

from .core import (
    CodeBook,
    CodeError,
    CodeTree,
    Distribution,
    Infeasible,
    average_cost,
    decode,
    encode,
    kraft_sum,
    ones_count,
    parse_distribution,
    validate_distribution,
)
from .dp import (
    INFEASIBLE,
    CostTable,
    cost_table_ky,
    cost_table_naive,
    optimal_alphabetic,
    reconstruct_tree,
)
from .kraft import (
    Feasibility,
    LengthSpectrum,
    NotFeasible,
    build_from_lengths,
    check_feasibility,
    level_capacity,
    spectrum,
)
from .prefix import (
    PrefixSolution,
    alphabetic_binding_threshold,
    optimal_prefix,
    prefix_binding_threshold,
)

__version__ = "0.1.0"
