"""Compiled representation descriptors and the derivation pipeline.

A recurrence compiles into one of:

* DivModRepr  -- floor(base^(n^2) * A~(base^n) / B~(base^n)) mod base^n
* ModModRepr  -- offset + (((-sign * base^(n^2) * A~(base^n)) mod B~(base^n))
                 mod base^n) / divisor
* ShiftedRepr -- a ModModRepr for the shifted natural sequence, minus shift^(n+1)
* ZeroRepr    -- the constant zero sequence (numerator vanishes)

where A~ and B~ are the coefficient-reversed numerator and denominator of the
generating function. The descriptors are value objects; the JSON schema below
is the interchange format between derive, eval and verify.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import CertifiedBase, asserted_base, divmod_base, growth_bound, modmod_base
from .errors import DerivationError, NaturalityError
from .poly import IntPoly, reciprocal
from .recurrence import (
    Recurrence,
    denominator,
    naturality,
    numerator_from_initial,
    shift_bound,
    shift_to_natural,
)


@dataclass(frozen=True)
class DivModRepr:
    base: CertifiedBase
    atilde: IntPoly
    btilde: IntPoly

    kind = "divmod"

    @property
    def order(self) -> int:
        deg = self.btilde.degree
        assert deg is not None
        return deg


@dataclass(frozen=True)
class ModModRepr:
    base: CertifiedBase
    atilde: IntPoly
    btilde: IntPoly
    alpha_d: int  # free term of btilde = trailing recurrence coefficient

    kind = "modmod"

    @property
    def order(self) -> int:
        deg = self.btilde.degree
        assert deg is not None
        return deg

    @property
    def sign(self) -> int:
        return 1 if self.alpha_d > 0 else -1

    @property
    def offset(self) -> int:
        return (-1 - self.sign) // 2  # 0 when the free term is negative, -1 otherwise

    @property
    def divisor(self) -> int:
        return abs(self.alpha_d)


@dataclass(frozen=True)
class ShiftedRepr:
    """Representation of an integer-valued sequence via its natural shift.

    inner represents s(n) = t(n) + shift^(n+1); evaluation subtracts the
    geometric term back off.
    """

    inner: ModModRepr
    shift: int

    kind = "shifted"


@dataclass(frozen=True)
class ZeroRepr:
    kind = "zero"


Representation = DivModRepr | ModModRepr | ShiftedRepr | ZeroRepr


def power_terms(poly: IntPoly) -> list[tuple[int, int]]:
    """Nonzero (coefficient, power) pairs of a polynomial, highest power first.

    This is the structural form of the exponential polynomial
    sum coeff * base^(k*n) shared by renderers; evaluators use the polynomial
    itself, so both read the same source of truth.
    """
    return [(c, k) for k, c in reversed(list(enumerate(poly.coeffs))) if c != 0]


def _tilde_polys(rec: Recurrence) -> tuple[IntPoly | None, IntPoly]:
    num = numerator_from_initial(rec)
    btilde = reciprocal(denominator(rec), rec.order)
    if num.is_zero():
        return None, btilde
    return reciprocal(num, rec.order), btilde


def _gate(rec: Recurrence, force: bool) -> None:
    cert = naturality(rec)
    if cert.status == "rejected" and not force:
        raise NaturalityError(
            f"sequence is negative at n={cert.first_negative_index}; the representation "
            "machinery needs natural values (use the shifted derivation, or force)"
        )


def derive_divmod(
    rec: Recurrence, base_override: int | None = None, force: bool = False
) -> DivModRepr | ZeroRepr:
    """Compile the floor-then-mod representation.

    With base_override the base is taken as-is (mode "asserted"); otherwise the
    certified search picks the smallest provable base.
    """
    _gate(rec, force)
    atilde, btilde = _tilde_polys(rec)
    if atilde is None:
        return ZeroRepr()
    if base_override is not None:
        base = asserted_base(rec, base_override)
    else:
        base = divmod_base(rec, growth_bound(rec))
    return DivModRepr(base=base, atilde=atilde, btilde=btilde)


def derive_modmod(
    rec: Recurrence, base_override: int | None = None, force: bool = False
) -> ModModRepr | ZeroRepr:
    """Compile the double-mod representation (same polynomials, nested remainders)."""
    _gate(rec, force)
    atilde, btilde = _tilde_polys(rec)
    if atilde is None:
        return ZeroRepr()
    alpha_d = rec.coeffs[-1]
    if base_override is not None:
        base = asserted_base(rec, base_override)
    else:
        base = modmod_base(rec, alpha_d, divmod_base(rec, growth_bound(rec)))
    return ModModRepr(base=base, atilde=atilde, btilde=btilde, alpha_d=alpha_d)


def derive_shifted(
    rec: Recurrence,
    base_override: int | None = None,
    h_override: int | None = None,
    force: bool = False,
) -> ShiftedRepr:
    """Compile an integer-valued (not natural) sequence via the shift trick.

    h defaults to the smallest certified shift bound; the inner double-mod
    descriptor represents the shifted sequence, which is natural by
    construction.
    """
    cert = naturality(rec)
    if cert.status == "certified" and not force:
        raise DerivationError(
            "sequence is already certified natural-valued; derive the double-mod "
            "representation directly"
        )
    h = h_override if h_override is not None else shift_bound(rec)
    shifted = shift_to_natural(rec, h)
    inner = derive_modmod(shifted, base_override)
    if isinstance(inner, ZeroRepr):  # unreachable: s(0) >= h > 0
        raise DerivationError("shifted sequence unexpectedly derived as zero")
    return ShiftedRepr(inner=inner, shift=h)


def derive_auto(
    rec: Recurrence, base_override: int | None = None, force: bool = False
) -> Representation:
    """Double-mod when the sequence may be natural, shifted when provably not."""
    if naturality(rec).status == "rejected":
        return derive_shifted(rec, base_override)
    return derive_modmod(rec, base_override, force)


def to_json_dict(rep: Representation) -> dict:
    """Flat JSON form; all big integers as decimal strings."""
    if isinstance(rep, ZeroRepr):
        return {"kind": "zero"}
    if isinstance(rep, ShiftedRepr):
        data = to_json_dict(rep.inner)
        data["kind"] = "shifted"
        data["shift_h"] = str(rep.shift)
        return data
    data = {"kind": rep.kind}
    data.update(rep.base.to_json_dict())
    data["atilde"] = rep.atilde.to_json_dict()
    data["btilde"] = rep.btilde.to_json_dict()
    if isinstance(rep, ModModRepr):
        data["alpha_d"] = str(rep.alpha_d)
        data["offset"] = rep.offset
        data["divisor"] = str(rep.divisor)
        data["shift_h"] = None
    return data


def from_json_dict(data: dict) -> Representation:
    kind = data.get("kind")
    if kind == "zero":
        return ZeroRepr()
    if kind not in ("divmod", "modmod", "shifted"):
        raise DerivationError(f"unknown representation kind {kind!r}")
    try:
        base = CertifiedBase.from_json_dict(data)
        atilde = IntPoly.from_json_dict(data["atilde"])
        btilde = IntPoly.from_json_dict(data["btilde"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DerivationError(f"malformed representation payload: {exc!r}") from None
    if kind == "divmod":
        return DivModRepr(base=base, atilde=atilde, btilde=btilde)
    try:
        inner = ModModRepr(base=base, atilde=atilde, btilde=btilde, alpha_d=int(data["alpha_d"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise DerivationError(f"malformed representation payload: {exc!r}") from None
    if inner.alpha_d == 0:
        raise DerivationError("free term of the reversed denominator must be nonzero")
    if inner.offset != data.get("offset", inner.offset):
        raise DerivationError("offset field inconsistent with the free term sign")
    if inner.divisor != int(data.get("divisor", inner.divisor)):
        raise DerivationError("divisor field inconsistent with the free term")
    if kind == "modmod":
        return inner
    if data.get("shift_h") is None:
        raise DerivationError("shifted representation requires shift_h")
    return ShiftedRepr(inner=inner, shift=int(data["shift_h"]))
