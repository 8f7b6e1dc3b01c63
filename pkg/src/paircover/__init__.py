"""Referee-to-proposal assignments that cover every pair of proposals."""

from .bounds import BoundsReport, bounds_curve, lower_bound_general, lower_bound_strengthened, table1, table12
from .constructions import (
    assign_auto,
    assign_full,
    assign_general,
    assign_greedy,
    assign_half_even,
    assign_half_odd,
    assign_quarters,
    assign_thirds,
    assign_three,
)
from .core import (
    Assignment,
    CoverageReport,
    Instance,
    InvalidAssignmentError,
    InvalidInstanceError,
    Referee,
    UnsupportedShapeError,
    all_pairs,
    pairs_of,
    render_grid,
    verify,
)
from .designs import TupleSystem, check_system, quadruple_system, triple_system
from .oracle import OracleResult, PartitionMax, max_pairs_partition3, max_pairs_partition5, min_cover_exact
from .specialty import SpecialtyProfile, assign_block_specialties, assign_two_specialties, check_specialty_compliance

__version__ = "0.1.0"
