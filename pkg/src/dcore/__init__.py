"""Exact counts of (s, s+r)-core partitions with d-distinct parts."""
from .formulas import (n_d1_closed, n_dr_closed, n_dr_extended, n_dr_recurrence,
                       n_ns_minus_1, n_ns_minus_1_printed, r_reduction)
from .oracle import INFINITE, EnumerationBudget, count, count_oracle, enumerate_X
from .partitions import Partition, ProblemInstance, beta_set, partition_from_beta

__all__ = [
    "INFINITE", "EnumerationBudget", "Partition", "ProblemInstance", "beta_set",
    "count", "count_oracle", "enumerate_X", "n_d1_closed", "n_dr_closed",
    "n_dr_extended", "n_dr_recurrence", "n_ns_minus_1", "n_ns_minus_1_printed",
    "partition_from_beta", "r_reduction",
]
