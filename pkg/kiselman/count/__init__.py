from .result import CountResult, CLOSED_FORMULA, BRUTE_FORCE
from .formula import closed_count, closed_value, CLOSED_FORMULAS
from .brute import (
    brute_count, count_block, compare_counts, count_grid, dn_cardinality, dn_cardinalities, DEFAULT_GUARD_BITS
)
