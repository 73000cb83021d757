"""Exact checking of Opial-type inequalities for interval sequences.

Everything is computed in rational arithmetic; no floats enter or
leave. The public surface re-exports the interval algebra, sequence
tools, the statement registry with its checkers, and the randomized
verification layer.
"""

from .rationals import NonRational, Rational, as_rational, format_rational, rational_to_json
from .intervals import (
    DivisorContainsZero,
    ExponentOutOfRange,
    GhCase,
    HDiffNotExist,
    Interval,
    InvalidBounds,
)
from .sequences import (
    Direction,
    IndexOutOfRange,
    IntervalSequence,
    LengthMismatch,
    MonotonicityProfile,
    MuDirection,
    NotDecomposable,
    Segment,
    SegmentDecomposition,
    Synchrony,
    TooShort,
    direction_set,
    first_direction_break,
    first_mu_break,
    mu_direction_set,
    synchronous,
)
from .theorems import (
    ArityMismatch,
    BoundaryNotZero,
    Operator,
    PreconditionCheck,
    TheoremId,
    TheoremSpec,
    Verdict,
    WindowOutOfRange,
    WindowRequired,
    check_classical,
    check_pair,
    check_single,
    lhs_terms,
    lookup,
    registry,
)
from .oracle import (
    BudgetExceeded,
    ExampleReport,
    ExampleRow,
    FuzzConfig,
    FuzzReport,
    InfeasibleProfile,
    PreconditionViolated,
    ScanReport,
    TrialRecord,
    fuzz,
    generate,
    holder_mean_check,
    input_to_jsonable,
    product_rule_check,
    ratio_scan,
    reproduce_examples,
    young_check,
)
from .cli import SchemaError, main, parse_sequence, sequence_to_jsonable

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BoundaryNotZero",
    "BudgetExceeded",
    "Direction",
    "DivisorContainsZero",
    "ExampleReport",
    "ExampleRow",
    "ExponentOutOfRange",
    "FuzzConfig",
    "FuzzReport",
    "GhCase",
    "HDiffNotExist",
    "IndexOutOfRange",
    "InfeasibleProfile",
    "Interval",
    "IntervalSequence",
    "InvalidBounds",
    "LengthMismatch",
    "MonotonicityProfile",
    "MuDirection",
    "NonRational",
    "NotDecomposable",
    "Operator",
    "PreconditionCheck",
    "PreconditionViolated",
    "Rational",
    "ScanReport",
    "SchemaError",
    "Segment",
    "SegmentDecomposition",
    "Synchrony",
    "TheoremId",
    "TheoremSpec",
    "TooShort",
    "TrialRecord",
    "Verdict",
    "WindowOutOfRange",
    "WindowRequired",
    "as_rational",
    "check_classical",
    "check_pair",
    "check_single",
    "direction_set",
    "first_direction_break",
    "first_mu_break",
    "format_rational",
    "fuzz",
    "generate",
    "holder_mean_check",
    "input_to_jsonable",
    "lhs_terms",
    "lookup",
    "main",
    "mu_direction_set",
    "parse_sequence",
    "product_rule_check",
    "ratio_scan",
    "rational_to_json",
    "registry",
    "reproduce_examples",
    "sequence_to_jsonable",
    "synchronous",
    "young_check",
    "__version__",
]
