"""Exact arithmetic for bi-periodic Horadam sequences.

Terms are computed three independent ways (direct recurrence, closed
form over a quadratic ring, matrix powers), a catalog of identities and
congruences is machine-checkable, and a CLI exposes terms, single
checks, grid sweeps and generating-function coefficients.
"""

from .congruences import (
    check_companion_modulus,
    check_companion_modulus_pair,
    check_fundamental_modulus,
    congruent_zero,
)
from .fasteval import StepMatrix, check_double_step, step_matrix, term_fast
from .identities import (
    DegenerateModulus,
    check_companion_split,
    check_cross_shift,
    check_cross_shift_special,
    check_even_index_split,
    check_index_split,
    check_index_split_weighted,
    check_root_identity,
    check_trinomial_split,
    compositions,
    delta_weight,
    exponent_forms,
    exponent_forms_agree,
    multinomial,
    split_exponent,
)
from .reports import (
    CongruenceReport,
    IdentityReport,
    QuadIdentityReport,
    Status,
    fmt_rational,
)
from .ring import QuadElement, ZeroDivisorError
from .sequences import (
    BinetConstants,
    Family,
    InvalidIndex,
    InvalidParams,
    Params,
    SeqSpec,
    binet_constants,
    check_companion_relation,
    gf_coeffs,
    make_spec,
    parity,
    prefix_naive,
    roots,
    t_spec,
    term_binet,
    term_from_fundamental,
    term_naive,
    u_spec,
    v_spec,
)

__version__ = "1.0.0"

__all__ = [
    "BinetConstants",
    "CongruenceReport",
    "DegenerateModulus",
    "Family",
    "IdentityReport",
    "InvalidIndex",
    "InvalidParams",
    "Params",
    "QuadElement",
    "QuadIdentityReport",
    "SeqSpec",
    "Status",
    "StepMatrix",
    "ZeroDivisorError",
    "binet_constants",
    "check_companion_modulus",
    "check_companion_modulus_pair",
    "check_companion_relation",
    "check_companion_split",
    "check_cross_shift",
    "check_cross_shift_special",
    "check_double_step",
    "check_even_index_split",
    "check_fundamental_modulus",
    "check_index_split",
    "check_index_split_weighted",
    "check_root_identity",
    "check_trinomial_split",
    "compositions",
    "congruent_zero",
    "delta_weight",
    "exponent_forms",
    "exponent_forms_agree",
    "fmt_rational",
    "gf_coeffs",
    "make_spec",
    "multinomial",
    "parity",
    "prefix_naive",
    "roots",
    "split_exponent",
    "step_matrix",
    "t_spec",
    "term_binet",
    "term_fast",
    "term_from_fundamental",
    "term_naive",
    "u_spec",
    "v_spec",
]
