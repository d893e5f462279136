"""Break-minimal home/away assignment for single round-robin timetables.

The library models the problem as vertex deletion: an auxiliary graph
is built from the timetable, a minimum odd cycle transversal of it is
found, and the induced 2-coloring is repaired and decoded into a
schedule whose break count equals the transversal size.
"""

from .auxgraph import (
    HORIZONTAL,
    MATCH,
    PREMATCH,
    AuxiliaryGraph,
    RectangularCycle,
    build_aux_graph,
    emit_dot,
    rectangular_cycles,
)
from .pipeline import (
    Bounds,
    Check,
    SolveReport,
    VerificationReport,
    min_breaks_bruteforce,
    solve_bmp,
    verify,
)
from .repair import (
    InconsistencyRecord,
    count_inconsistent,
    find_earliest_inconsistent,
    is_consistent_on_cycle,
    is_locally_bipartite,
    repair,
    repair_step,
)
from .timetable import (
    AWAY,
    HOME,
    UNDECIDED,
    BreakReport,
    HAAssignment,
    Timetable,
    ValidationError,
    Violation,
    complete,
    count_breaks,
    format_ha,
    format_timetable,
    generate_circle,
    is_consistent,
    match_slot,
    parse_ha,
    parse_timetable,
    validate,
)
from .transversal import (
    OCTMap,
    Transversal,
    format_octmap,
    ha_to_octmap,
    heuristic_oct_upper_bound,
    is_bipartite,
    min_oct_bruteforce,
    min_oct_exact,
    octmap_is_valid,
    octmap_to_partial,
    parse_octmap,
    transversal_to_octmap,
)

__version__ = "0.1.0"

__all__ = [
    "AWAY",
    "AuxiliaryGraph",
    "Bounds",
    "BreakReport",
    "Check",
    "HAAssignment",
    "HOME",
    "HORIZONTAL",
    "InconsistencyRecord",
    "MATCH",
    "OCTMap",
    "PREMATCH",
    "RectangularCycle",
    "SolveReport",
    "Timetable",
    "Transversal",
    "UNDECIDED",
    "ValidationError",
    "VerificationReport",
    "Violation",
    "build_aux_graph",
    "complete",
    "count_breaks",
    "count_inconsistent",
    "emit_dot",
    "find_earliest_inconsistent",
    "format_ha",
    "format_octmap",
    "format_timetable",
    "generate_circle",
    "ha_to_octmap",
    "heuristic_oct_upper_bound",
    "is_bipartite",
    "is_consistent",
    "is_consistent_on_cycle",
    "is_locally_bipartite",
    "match_slot",
    "min_breaks_bruteforce",
    "min_oct_bruteforce",
    "min_oct_exact",
    "octmap_is_valid",
    "octmap_to_partial",
    "parse_ha",
    "parse_octmap",
    "parse_timetable",
    "repair",
    "repair_step",
    "rectangular_cycles",
    "solve_bmp",
    "transversal_to_octmap",
    "validate",
    "verify",
]
