"""Constant-coefficient linear recurrences: term oracle, generating-function
polynomials, naturality certificates and the shift-to-natural transform."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DerivationError, RecurrenceError
from .poly import IntPoly, iroot


@dataclass(frozen=True)
class Recurrence:
    """t(n+d) + coeffs[0]*t(n+d-1) + ... + coeffs[d-1]*t(n) = 0, with t(0..d-1) given.

    coeffs are the signed a_1..a_d of the homogeneous rule; the last one must
    be nonzero.
    """

    coeffs: tuple[int, ...]
    initial: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int], initial: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        init = tuple(int(t) for t in initial)
        if not cs:
            raise RecurrenceError("recurrence order must be >= 1")
        if cs[-1] == 0:
            raise RecurrenceError("last recurrence coefficient must be nonzero")
        if len(init) != len(cs):
            raise RecurrenceError(
                f"need {len(cs)} initial terms for an order-{len(cs)} recurrence, got {len(init)}"
            )
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "initial", init)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def to_json_dict(self) -> dict:
        return {
            "coeffs": [str(c) for c in self.coeffs],
            "initial": [str(t) for t in self.initial],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> Recurrence:
        return cls((int(c) for c in data["coeffs"]), (int(t) for t in data["initial"]))


def oracle_prefix(rec: Recurrence, count: int) -> list[int]:
    """First `count` terms t(0)..t(count-1) by forward iteration of the rule."""
    terms = list(rec.initial[:count])
    d = rec.order
    while len(terms) < count:
        terms.append(-sum(rec.coeffs[i] * terms[-1 - i] for i in range(d)))
    return terms


def oracle_eval(rec: Recurrence, n: int) -> int:
    """Exact t(n). This is the ground truth every representation is checked against."""
    if n < 0:
        raise RecurrenceError("term index must be >= 0")
    return oracle_prefix(rec, n + 1)[n]


def denominator(rec: Recurrence) -> IntPoly:
    """B(x) = 1 + a_1 x + ... + a_d x^d, the denominator of the generating function."""
    return IntPoly((1,) + rec.coeffs)


def numerator_from_initial(rec: Recurrence) -> IntPoly:
    """Numerator A(x) with sum t(n) x^n = A(x)/B(x); deg A < order.

    A_j is the degree-<d truncation of B(x) times the series: A_j = t(j) +
    sum_{i=1..j} a_i t(j-i).
    """
    a = rec.coeffs
    t = rec.initial
    return IntPoly(
        t[j] + sum(a[i - 1] * t[j - i] for i in range(1, j + 1)) for j in range(rec.order)
    )


@dataclass(frozen=True)
class NaturalityCertificate:
    """Whether t(n) >= 0 is proven (certified), observed (checked-prefix) or false."""

    status: str  # "certified" | "checked-prefix" | "rejected"
    prefix_length: int | None = None
    first_negative_index: int | None = None


def naturality(rec: Recurrence, prefix: int = 64) -> NaturalityCertificate:
    """Sound naturality gate.

    All coefficients <= 0 with non-negative initial terms proves t(n) >= 0 for
    every n by induction. Otherwise the first `prefix` terms are checked
    directly: a negative one rejects, none seen yields the honest
    "checked-prefix" status (positivity of C-recursive sequences is hard in
    general).
    """
    if prefix < 1:
        raise RecurrenceError("naturality prefix must be >= 1")
    if all(c <= 0 for c in rec.coeffs) and all(t >= 0 for t in rec.initial):
        return NaturalityCertificate(status="certified")
    for n, value in enumerate(oracle_prefix(rec, prefix)):
        if value < 0:
            return NaturalityCertificate(status="rejected", first_negative_index=n)
    return NaturalityCertificate(status="checked-prefix", prefix_length=prefix)


def _shift_certified(rec: Recurrence, h: int) -> bool:
    # |t(n)| <= h^{n+1} for all n follows by induction from the weighted
    # condition sum |a_i| h^{d-i} <= h^d plus the base cases; then
    # t(n) + h^{n+1} >= 0.
    d = rec.order
    if h < 1:
        return False
    if sum(abs(a) * h ** (d - i) for i, a in enumerate(rec.coeffs, start=1)) > h**d:
        return False
    return all(abs(t) <= h ** (m + 1) for m, t in enumerate(rec.initial))


def shift_bound(rec: Recurrence) -> int:
    """Smallest h >= 1 certified to make n -> t(n) + h^(n+1) natural-valued."""
    h = 1
    for m, t in enumerate(rec.initial):
        # jump straight to the least h with h^(m+1) >= |t|
        r = iroot(abs(t), m + 1)
        h = max(h, r if r ** (m + 1) == abs(t) else r + 1)
    while not _shift_certified(rec, h):
        h += 1
    return h


def shift_to_natural(rec: Recurrence, h: int) -> Recurrence:
    """Order-(d+1) recurrence for s(n) = t(n) + h^(n+1), which is natural-valued.

    Rejects h values it cannot certify (see shift_bound). The generating
    function identity A'(x) = A(x)(1 - h x) + h B(x) is verified internally.
    """
    if h < 1:
        raise DerivationError("shift base must be a positive integer")
    if not _shift_certified(rec, h):
        raise DerivationError(
            f"shift base h={h} is below the certified bound {shift_bound(rec)}; "
            "the shifted sequence could not be proven natural-valued"
        )
    d = rec.order
    geom = IntPoly((1, -h))
    b_shifted = denominator(rec) * geom
    prefix = oracle_prefix(rec, d + 1)
    shifted = Recurrence(b_shifted.coeffs[1:], (t + h ** (m + 1) for m, t in enumerate(prefix)))
    expected_num = numerator_from_initial(rec) * geom + h * denominator(rec)
    if numerator_from_initial(shifted) != expected_num:
        raise DerivationError("internal error: shifted numerator identity violated")
    return shifted
