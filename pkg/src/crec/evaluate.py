"""Exact evaluation of compiled representations.

Everything runs on Python's arbitrary-precision integers. All remainders are
Euclidean (result in [0, m)) and all divisions are floor divisions, the
semantics the formulas are stated in. Python's % and // already behave this
way for positive moduli; the primitives validate the modulus sign so the
contract holds everywhere they are used.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

from .errors import DivisibilityWarning, EvaluationError, InvalidRepresentationError
from .representation import (
    DivModRepr,
    ModModRepr,
    Representation,
    ShiftedRepr,
    ZeroRepr,
)


class EvalStrategy(str, Enum):
    """Two routes to the same double-mod value.

    NAIVE builds the full-width exponential polynomial before reducing; FAST
    works modulo the reversed-denominator value throughout, exponentiating
    with exponent n via base^(n^2) = (base^n)^n, so operand widths stay near
    the modulus width instead of growing quadratically in n.
    """

    NAIVE = "naive"
    FAST = "fast"


def _coerce_strategy(strategy: EvalStrategy | str) -> EvalStrategy:
    if isinstance(strategy, EvalStrategy):
        return strategy
    return EvalStrategy(strategy)


def euclid_mod(x: int, m: int) -> int:
    """Euclidean remainder: the unique r in [0, m) with x congruent to r mod m."""
    if m < 1:
        raise EvaluationError(f"modulus must be positive, got {m}")
    return x % m


def modpow(b: int, k: int, m: int) -> int:
    """b**k mod m in [0, m); 0**0 is 1. Delegates to the built-in ladder."""
    if m < 1:
        raise EvaluationError(f"modulus must be positive, got {m}")
    if k < 0:
        raise EvaluationError(f"exponent must be non-negative, got {k}")
    return pow(b, k, m)


def _require_positive_modulus(value: int, base: int, n: int) -> None:
    if value <= 0:
        raise EvaluationError(
            f"reversed denominator evaluates to {value} <= 0 at base {base}, n={n}; "
            "the base is below the positivity threshold"
        )


def eval_divmod(rep: DivModRepr | ZeroRepr, n: int) -> int:
    value, _ = eval_divmod_stats(rep, n)
    return value


def eval_divmod_stats(rep: DivModRepr | ZeroRepr, n: int) -> tuple[int, int]:
    """Value plus the bit width of the largest operand built along the way."""
    if n < 1:
        raise EvaluationError(f"representation index must be >= 1, got {n}")
    if isinstance(rep, ZeroRepr):
        return 0, 1
    c = rep.base.base
    x = c**n
    modulus = rep.btilde.eval(x)
    _require_positive_modulus(modulus, c, n)
    numerator = x**n * rep.atilde.eval(x)  # c^(n^2) * A~(c^n), full width
    value = (numerator // modulus) % x
    bits = max(1, abs(numerator).bit_length(), modulus.bit_length(), x.bit_length())
    return value, bits


def eval_modmod(
    rep: ModModRepr | ZeroRepr, n: int, strategy: EvalStrategy | str = EvalStrategy.FAST
) -> int:
    value, _ = eval_modmod_stats(rep, n, strategy)
    return value


def eval_modmod_stats(
    rep: ModModRepr | ZeroRepr, n: int, strategy: EvalStrategy | str = EvalStrategy.FAST
) -> tuple[int, int]:
    """Value plus largest-operand bit width for either strategy.

    Both strategies compute the identical inner remainder; they are reduced to
    the same Euclidean representative, so agreement is structural, not a
    numerical accident. Divisibility by the scale factor is checked exactly and
    the recovered value must be non-negative; a failure means the base does not
    actually support the representation. A vanishing inner remainder is only
    reported (DivisibilityWarning): the formula value is still returned.
    """
    if n < 1:
        raise EvaluationError(f"representation index must be >= 1, got {n}")
    if isinstance(rep, ZeroRepr):
        return 0, 1
    strategy = _coerce_strategy(strategy)
    e = rep.base.base
    x = e**n
    modulus = rep.btilde.eval(x)
    _require_positive_modulus(modulus, e, n)
    # operand accounting counts the integers operations are applied to, not the
    # transient products inside a single reduction (same rule for both routes)
    if strategy is EvalStrategy.NAIVE:
        numerator = x**n * rep.atilde.eval(x)
        inner = euclid_mod(-rep.sign * numerator, modulus)
        bits = max(1, abs(numerator).bit_length(), modulus.bit_length(), x.bit_length())
    else:
        power = modpow(x % modulus, n, modulus)  # e^(n^2) mod B~(e^n) as (e^n)^n
        reduced = rep.atilde.eval(x) % modulus
        inner = euclid_mod(-rep.sign * (reduced * power), modulus)
        bits = max(
            1,
            x.bit_length(),
            modulus.bit_length(),
            reduced.bit_length(),
            power.bit_length(),
        )
    if inner == 0:
        # divisibility the published machinery asserts away; report, don't assume
        warnings.warn(
            f"reversed denominator divides the numerator at n={n}",
            DivisibilityWarning,
            stacklevel=2,
        )
    r = euclid_mod(inner, x)
    if r % rep.divisor != 0:
        raise InvalidRepresentationError(
            f"remainder {r} not divisible by scale factor {rep.divisor} at n={n}; "
            "base does not support this representation"
        )
    value = rep.offset + r // rep.divisor
    if value < 0:
        raise InvalidRepresentationError(
            f"recovered negative value {value} at n={n}; base does not support "
            "this representation"
        )
    return value, bits


def eval_shifted(
    rep: ShiftedRepr, n: int, strategy: EvalStrategy | str = EvalStrategy.FAST
) -> int:
    return eval_modmod(rep.inner, n, strategy) - rep.shift ** (n + 1)


def evaluate(
    rep: Representation, n: int, strategy: EvalStrategy | str = EvalStrategy.FAST
) -> int:
    """Evaluate any representation kind at index n >= 1."""
    if isinstance(rep, ZeroRepr):
        if n < 1:
            raise EvaluationError(f"representation index must be >= 1, got {n}")
        return 0
    if isinstance(rep, DivModRepr):
        return eval_divmod(rep, n)
    if isinstance(rep, ShiftedRepr):
        return eval_shifted(rep, n, strategy)
    return eval_modmod(rep, n, strategy)


def mismatch_diagnostic(rep: Representation, n: int) -> dict:
    """Full operand dump at index n (decimal strings), for debugging mismatches."""
    if isinstance(rep, ZeroRepr):
        return {"n": str(n), "kind": "zero"}
    if isinstance(rep, ShiftedRepr):
        out = mismatch_diagnostic(rep.inner, n)
        out["kind"] = "shifted"
        out["shift"] = str(rep.shift)
        out["shift_term"] = str(rep.shift ** (n + 1))
        return out
    base = rep.base.base
    x = base**n
    modulus = rep.btilde.eval(x)
    numerator = x**n * rep.atilde.eval(x)
    out = {
        "n": str(n),
        "kind": rep.kind,
        "base": str(base),
        "base_pow_n": str(x),
        "modulus": str(modulus),
        "numerator": str(numerator),
    }
    if modulus <= 0:
        out["error"] = "modulus not positive"
        return out
    if isinstance(rep, ModModRepr):
        inner = euclid_mod(-rep.sign * numerator, modulus)
        out["inner_remainder"] = str(inner)
        out["outer_remainder"] = str(inner % x)
    else:
        quotient = numerator // modulus
        out["quotient"] = str(quotient)
        out["quotient_mod"] = str(quotient % x)
    return out


@dataclass(frozen=True)
class LemmaMainCheck:
    """Both sides of the nested-remainder identity plus its precondition status.

    Violated preconditions are reported, never raised, so property tests can
    probe the boundary of the identity.
    """

    lhs: int
    rhs: int
    conditions: dict
    equal: bool

    @property
    def preconditions_hold(self) -> bool:
        return all(self.conditions.values())


def lemma_main_check(A: int, B: int, C: int, a: int) -> LemmaMainCheck:
    """Check (A mod B) mod C = |a| * (floor(A/B) mod C) for a < 0, respectively
    ((-A) mod B) mod C = a * (1 + floor(A/B) mod C) for a > 0.

    Preconditions: A, B > 0; C >= 2; C divides A; B does not divide A;
    B congruent to a mod C; a nonzero; and the size bound
    |a| * (floor(A/B) mod C) < C for a < 0, respectively
    a + a * (floor(A/B) mod C) < C for a > 0.
    """
    safe = B != 0 and C != 0
    quotient_mod = (A // B) % C if safe else 0
    conditions = {
        "A_positive": A > 0,
        "B_positive": B > 0,
        "C_at_least_2": C >= 2,
        "C_divides_A": safe and A % C == 0,
        "B_not_divides_A": safe and A % B != 0,
        "a_congruent_to_B_mod_C": safe and (B - a) % C == 0,
        "a_nonzero": a != 0,
    }
    if a < 0:
        conditions["size_bound"] = safe and abs(a) * quotient_mod < C
    elif a > 0:
        conditions["size_bound"] = safe and a + a * quotient_mod < C
    else:
        conditions["size_bound"] = False
    if not safe:
        return LemmaMainCheck(lhs=0, rhs=0, conditions=conditions, equal=True)
    if a < 0:
        lhs = (A % B) % C
        rhs = abs(a) * quotient_mod
    elif a > 0:
        lhs = ((-A) % B) % C
        rhs = a * (1 + quotient_mod)
    else:
        lhs = rhs = 0
    return LemmaMainCheck(lhs=lhs, rhs=rhs, conditions=conditions, equal=lhs == rhs)
