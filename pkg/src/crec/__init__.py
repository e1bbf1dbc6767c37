"""crec: compile C-recursive integer sequences into exact arithmetic closed
forms (floor-then-mod and double-mod), with certified base selection, exact
big-integer evaluation, oracle verification and benchmarking."""

from .bench import BenchRow, bench_eval, emit_csv
from .bounds import CertifiedBase, asserted_base, divmod_base, growth_bound, modmod_base
from .errors import (
    BaseSearchError,
    BFileError,
    CrecError,
    DerivationError,
    EvaluationError,
    InvalidRepresentationError,
    NaturalityError,
    PolynomialError,
    RecurrenceError,
)
from .evaluate import (
    EvalStrategy,
    LemmaMainCheck,
    euclid_mod,
    eval_divmod,
    eval_modmod,
    eval_shifted,
    evaluate,
    lemma_main_check,
    modpow,
)
from .poly import IntPoly, cauchy_root_bound, iroot, positivity_threshold, reciprocal
from .recurrence import (
    NaturalityCertificate,
    Recurrence,
    denominator,
    naturality,
    numerator_from_initial,
    oracle_eval,
    oracle_prefix,
    shift_bound,
    shift_to_natural,
)
from .rendering import render
from .representation import (
    DivModRepr,
    ModModRepr,
    Representation,
    ShiftedRepr,
    ZeroRepr,
    derive_auto,
    derive_divmod,
    derive_modmod,
    derive_shifted,
    from_json_dict,
    power_terms,
    to_json_dict,
)
from .verify import (
    Fixture,
    VerifyReport,
    fixtures,
    get_fixture,
    load_bfile,
    random_natural_recurrence,
    random_prefix_natural_recurrence,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRow",
    "bench_eval",
    "emit_csv",
    "CertifiedBase",
    "asserted_base",
    "divmod_base",
    "growth_bound",
    "modmod_base",
    "BaseSearchError",
    "BFileError",
    "CrecError",
    "DerivationError",
    "EvaluationError",
    "InvalidRepresentationError",
    "NaturalityError",
    "PolynomialError",
    "RecurrenceError",
    "EvalStrategy",
    "LemmaMainCheck",
    "euclid_mod",
    "eval_divmod",
    "eval_modmod",
    "eval_shifted",
    "evaluate",
    "lemma_main_check",
    "modpow",
    "IntPoly",
    "cauchy_root_bound",
    "iroot",
    "positivity_threshold",
    "reciprocal",
    "NaturalityCertificate",
    "Recurrence",
    "denominator",
    "naturality",
    "numerator_from_initial",
    "oracle_eval",
    "oracle_prefix",
    "shift_bound",
    "shift_to_natural",
    "render",
    "DivModRepr",
    "ModModRepr",
    "Representation",
    "ShiftedRepr",
    "ZeroRepr",
    "derive_auto",
    "derive_divmod",
    "derive_modmod",
    "derive_shifted",
    "from_json_dict",
    "power_terms",
    "to_json_dict",
    "Fixture",
    "VerifyReport",
    "fixtures",
    "get_fixture",
    "load_bfile",
    "random_natural_recurrence",
    "random_prefix_natural_recurrence",
    "verify_range",
    "__version__",
]
