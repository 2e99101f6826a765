"""Exact enumeration and identity checking for the spt-function and its cranks."""

from .bijections import crank_classes, delta, lambda_inv, sigma, tau
from .doubly_marked import (
    ColumnMarkedPartition,
    Kind,
    PartitionPair,
    classify,
    enumerate_dmp,
    phi,
    psi,
    spt_crank_dmp,
    v_membership,
)
from .errors import CapacityError, DomainError, InvariantViolation
from .partitions import conjugate, durfee_side, enumerate_partitions, make_partition, rank
from .qseries import TruncatedSeries, gf_NS, gf_spt, gf_spt_alt
from .ranks import partition_count, rank_counts, spt_via_moments
from .spt import MarkedPartition, SPartition, enumerate_marked, ns_recurrence, s_partition_net_counts, spt_weighted

__version__ = "0.1.0"
