"""Exact analysis of hook-removal games on boxed and shifted Young diagrams.

The package provides move generation (two independent engines), reachable
set enumeration, memoised game-value computation, machine verification of
the game isomorphisms and closed-form value formulas, and regeneration of
the 9x9 table of starting values.
"""

from .closedforms import (
    Periodicity,
    PredictionReport,
    TwoRowClass,
    detect_periodicity,
    grundy_table,
    nim_sum,
    predict_1n,
    predict_2n_class,
    predict_shifted,
    predict_start_2n,
    predict_start_square,
    table1_golden,
    verify,
)
from .diagrams import (
    BoardParams,
    BulgeKind,
    DiagonalSeq,
    HookRecord,
    Rejection,
    RejectReason,
    YoungDiagram,
    all_diagrams,
    bulge_kind,
    decrement_interval,
    diagonal_label,
    diagonal_of,
    diagram_of,
    hook_at,
    label_multiset,
    max_label,
    remove_hook,
    transpose_position,
    unimodal_number,
)
from .errors import (
    DomainError,
    EngineInvariantError,
    HookGamesError,
    RangeTooLargeError,
)
from .grundy import GrundyMemo, Outcome, grundy, mex, outcome
from .isomorphisms import (
    GameMap,
    IsomorphismReport,
    from_shifted,
    is_symmetric,
    to_shifted,
    verify_isomorphism,
    verify_staircase_iso,
    verify_widening,
    widen_diagonal,
    widen_position,
)
from .mhrg import (
    MhrgPosition,
    MoveRecord,
    move_for_box,
    moves_diagonal,
    moves_semantic,
    options_cross_check,
    options_diagonal,
    options_semantic,
    reachable,
    solve,
    start_position,
)
from .shifted import (
    ShiftedDiagonalSeq,
    ShiftedDiagram,
    ShiftedTransition,
    TransitionKind,
    all_shifted,
    hrg_options,
    shifted_diagonal_of,
    shifted_diagram_of,
    shifted_hook,
    shifted_remove_hook,
    shifted_transitions,
    solve_hrg,
    staircase,
)

__version__ = "0.1.0"
