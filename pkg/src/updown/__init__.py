"""Up-down coloring and cocycle invariants of virtual-link diagrams.

Diagrams are signed Gauss codes; the package counts and enumerates their
up-down colorings, evaluates cocycle weight sums over the colorings, and
turns differences of these invariants into certified lower bounds on the
number of type-II Reidemeister moves between two diagrams of the same
link.
"""

from .cocycle import (
    BudgetExceededError,
    CocycleError,
    CocycleTable,
    CocycleViolation,
    builtin_table,
    check_cocycle,
    check_shiftable_system,
    cocycle_violation,
    enumerate_shiftable,
    format_table,
    is_shiftable,
    parse_table,
)
from .coloring import (
    Coloring,
    ColoringError,
    ColoringSpec,
    count_colorings,
    is_colorable,
    maxord,
    shift_coloring,
    solve_colorings,
    verify_coloring,
)
from .diagram import (
    OVER,
    UNDER,
    Diagram,
    ParseError,
    Pass,
    SemiArcId,
    ValidationError,
    component_shift,
    connected_sum,
    parse,
    reverse_orientation,
    semi_arcs,
    serialize,
)
from .errors import UpDownError
from .invariant import (
    CERT_COLCOUNT,
    CERT_MAXORD,
    CERT_NONSELF,
    CERT_PHI,
    InvariantError,
    RiiBound,
    WeightMultiset,
    crossing_weight,
    phi_multiset,
    phi_shift,
    rii_bound_maxord,
    rii_bound_nonself,
    rii_necessity_colcount,
    rii_necessity_phi,
    rii_report,
    weight_sum,
)
from .moves import (
    MOVE_KINDS,
    RI_ADD,
    RI_REMOVE,
    RII_ADD,
    RII_REMOVE,
    RIII,
    VIRTUAL_MOVES,
    MoveDescriptor,
    MoveError,
    apply_move,
    enumerate_moves,
    random_walk,
)

__all__ = [name for name in dir() if not name.startswith("_")]
