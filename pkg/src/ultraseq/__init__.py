"""Exact-arithmetic toolkit for self-referential integer sequences."""

from .errors import (
    DegenerateBase,
    DomainExhausted,
    IdentityViolation,
    IncompatibleShape,
    IndexUnderflow,
    InvalidConfig,
    NonDeterministic,
    NotPeriodic,
    OutOfDomain,
    TooLarge,
    UltraseqError,
    WindowTooSmall,
    WrongInitialCount,
)
from .exactmath import (
    PHI,
    PSI,
    SQRT5,
    QuadExt,
    closed_form_affine,
    fib,
    lucas,
    quad_pow,
    two_point_constants,
)
from .seqcore import (
    CheckEntry,
    CheckReport,
    Periodic,
    SeqWindow,
    breve,
    concat,
    constant,
    difference,
    extend_right_by_O,
    from_csv,
    from_document,
    from_json,
    is_free,
    partial_sums,
    range_sum,
    to_csv,
    to_document,
    to_json,
    unitary,
    value_at,
    verify_O_point,
    verify_O_range,
    window_add,
)
from .transform import (
    GParams,
    HParams,
    O_SLOTS,
    apply_G,
    apply_H,
    apply_O,
    iterate,
    recurrence_1_3_extend,
    shift_L,
    windows_equal,
)
from .families import (
    ApproxModel,
    OPowerConfig,
    TauConfig,
    approx_predict,
    approx_report,
    build_approx_model,
    build_family,
    composite_row,
    composite_seed,
    delta_identities,
    canonical_o_power_config,
    o_power_window,
    omega_slice,
    omega_window,
    pi_closed,
    pi_row_relation,
    pi_star_even_closed,
    pi_star_window,
    pi_two_point,
    pi_window,
    tau_enumerate,
    tau_window,
)
from .reference import conway, conway_table, hofstadter_q, hofstadter_q_table

__version__ = "0.1.0"
