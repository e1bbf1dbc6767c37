"""Constructive growth bounds and certified base selection.

Every certificate here is established in exact integer arithmetic: candidate
bases are accepted only after the required inequalities are either checked
directly at small indices or covered by an induction whose hypotheses were
checked directly. No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BaseSearchError, NaturalityError
from .poly import cauchy_root_bound, iroot, positivity_threshold, reciprocal
from .recurrence import Recurrence, denominator, numerator_from_initial

MODE_CERTIFIED = "certified"
MODE_ASSERTED = "asserted"


@dataclass(frozen=True)
class CertifiedBase:
    """A base together with the data certifying it (or the fact it is only asserted).

    cutoff: indices 1 <= n < cutoff were verified by direct evaluation; n >=
    cutoff are covered by the analytic/inductive bound. growth is the g of the
    |t(n)| < g^(n+1) certificate, root_bound the strict integer bound on the
    roots of the reversed denominator (i.e. on the reciprocal of the radius of
    convergence).
    """

    base: int
    mode: str  # MODE_CERTIFIED | MODE_ASSERTED
    growth: int
    cutoff: int
    root_bound: int

    def to_json_dict(self) -> dict:
        return {
            "base": str(self.base),
            "mode": self.mode,
            "g": str(self.growth),
            "cutoff": self.cutoff,
            "root_bound": str(self.root_bound),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> CertifiedBase:
        return cls(
            base=int(data["base"]),
            mode=data["mode"],
            growth=int(data["g"]),
            cutoff=int(data["cutoff"]),
            root_bound=int(data["root_bound"]),
        )


class _TermCache:
    """Oracle terms (and their cubes) computed once and shared across candidates."""

    def __init__(self, rec: Recurrence):
        self._coeffs = rec.coeffs
        self._terms = list(rec.initial)
        self._cubes = [t**3 for t in rec.initial]

    def term(self, n: int) -> int:
        d = len(self._coeffs)
        while len(self._terms) <= n:
            nxt = -sum(self._coeffs[i] * self._terms[-1 - i] for i in range(d))
            self._terms.append(nxt)
            self._cubes.append(nxt**3)
        return self._terms[n]

    def cube(self, n: int) -> int:
        self.term(n)
        return self._cubes[n]


def growth_bound(rec: Recurrence) -> int:
    """Minimal g >= 2 with g >= sum|a_i| and |t(m)| < g^(m+1) for m < order.

    Induction then gives |t(n)| < g^(n+1) for every n >= 0.
    """
    g = max(2, sum(abs(a) for a in rec.coeffs))
    for m, t in enumerate(rec.initial):
        while abs(t) >= g ** (m + 1):
            g = max(g + 1, iroot(abs(t), m + 1) + 1)
    return g


def asserted_base(rec: Recurrence, base: int) -> CertifiedBase:
    """Wrap a user-supplied base. Nothing is proven; verification is empirical."""
    if base < 2:
        raise BaseSearchError(f"base must be >= 2, got {base}")
    btilde = reciprocal(denominator(rec), rec.order)
    return CertifiedBase(
        base=base,
        mode=MODE_ASSERTED,
        growth=growth_bound(rec),
        cutoff=0,
        root_bound=cauchy_root_bound(btilde),
    )


def _certify_cubes(cache: _TermCache, c: int, weight_sum: int, g: int, d: int):
    """Certify t(n)^3 < c^n for all n >= 1, given |t(n)| < g^(n+1) and c > g^3.

    Direct checks run upward from n = 1. Two sound early exits close the tail:

    * window induction: once K^3 t(m)^3 < c^m held for d consecutive m (with
      K = sum|a_i| and c >= K^3), the convexity estimate
      t(n+1)^3 <= K^2 sum|a_i| t(n+1-i)^3 pushes the strict bound forward
      to every larger index;
    * growth fallback: once g^(3(n+1)) <= c^n, the growth certificate covers
      the rest (monotone because c > g^3).

    Returns (True, cutoff), or (False, b) where b is the smallest base whose
    n-th power clears the cube that failed here (every base in between fails
    at the same index). Negative terms abort: the machinery needs natural
    values.
    """
    k3 = weight_sum**3
    g3 = g**3
    gpow = g3 * g3  # g^(3(n+1)) at n = 1
    cpow = 1
    run = 0
    n = 0
    while True:
        n += 1
        cpow *= c
        if cache.term(n) < 0:
            raise NaturalityError(
                f"sequence takes the negative value {cache.term(n)} at n={n}; "
                "cannot certify a base for a non-natural sequence"
            )
        t3 = cache.cube(n)
        if t3 >= cpow:
            return False, iroot(t3, n) + 1
        if k3 * t3 < cpow:
            run += 1
            if run >= d:
                return True, n + 1
        else:
            run = 0
        if gpow <= cpow:
            return True, n + 1
        gpow *= g3


def divmod_base(rec: Recurrence, g: int | None = None, ceiling: int | None = None) -> CertifiedBase:
    """Smallest base c certified to make the floor-then-mod representation valid
    for every n >= 1.

    Requirements certified: c >= 8; c strictly exceeds every root of the
    reversed denominator (so the reciprocal of the radius of convergence is
    below c); t(n)^3 < c^n for all n >= 1. The search ascends from the first
    admissible candidate and jumps past candidates excluded by a failed direct
    check, so the returned base is minimal for this certificate.
    """
    if g is None:
        g = growth_bound(rec)
    elif (
        g < 2
        or g < sum(abs(a) for a in rec.coeffs)
        or any(abs(t) >= g ** (m + 1) for m, t in enumerate(rec.initial))
    ):
        # the certificate below is sound only for a genuine growth bound
        raise BaseSearchError(f"g={g} is not a valid growth certificate for this recurrence")
    btilde = reciprocal(denominator(rec), rec.order)
    root_bound = cauchy_root_bound(btilde)
    if all(t == 0 for t in rec.initial):
        # zero sequence: t(n) < c^(n/3) holds for any base
        return CertifiedBase(max(8, root_bound), MODE_CERTIFIED, g, 1, root_bound)
    if ceiling is None:
        ceiling = g**6 + 8
    cache = _TermCache(rec)
    weight_sum = sum(abs(a) for a in rec.coeffs)
    c = max(8, root_bound, g**3 + 1)
    while c <= ceiling:
        ok, value = _certify_cubes(cache, c, weight_sum, g, rec.order)
        if ok:
            return CertifiedBase(c, MODE_CERTIFIED, g, value, root_bound)
        c = max(c + 1, value)
    raise BaseSearchError(f"no certified base found up to ceiling {ceiling}")


def _certify_linear(cache: _TermCache, e: int, weight_sum: int, cond_of, g_s: int, d: int):
    """Same scheme as _certify_cubes for a condition linear in t(n).

    cond_of(t) must be monotone with cond_of(t') <= sum|a_i| cond_of(t_i) when
    t' <= sum|a_i| t_i (true for W*t and W*(t+1) with K >= 1); the window
    induction then needs e >= K and the fallback g_s^(n+1) <= e^n needs
    e > g_s, both guaranteed by the caller.
    """
    gpow = g_s * g_s  # g_s^(n+1) at n = 1
    epow = 1
    run = 0
    n = 0
    while True:
        n += 1
        epow *= e
        if cache.term(n) < 0:
            raise NaturalityError(
                f"sequence takes the negative value {cache.term(n)} at n={n}; "
                "cannot certify a base for a non-natural sequence"
            )
        cond = cond_of(cache.term(n))
        if cond >= epow:
            return False, iroot(cond, n) + 1
        if weight_sum * cond < epow:
            run += 1
            if run >= d:
                return True, n + 1
        else:
            run = 0
        if gpow <= epow:
            return True, n + 1
        gpow *= g_s


def modmod_base(
    rec: Recurrence, alpha_d: int | None = None, c0: CertifiedBase | None = None
) -> CertifiedBase:
    """Smallest base e >= the floor-then-mod base certified for the double-mod form.

    Beyond c0.base, e must clear the positivity thresholds of both reversed
    polynomials, exceed the free term when it is positive, and satisfy
    |free| * t(n) < e^n (negative free term) respectively
    free * (t(n) + 1) < e^n (positive free term) for every n >= 1. The latter
    is certified through the growth bound of 2*|free|*t(n); e = that bound
    squared always suffices, which caps the search.
    """
    if alpha_d is None:
        alpha_d = rec.coeffs[-1]
    if alpha_d != rec.coeffs[-1]:
        raise BaseSearchError("free term must equal the trailing recurrence coefficient")
    if c0 is None:
        c0 = divmod_base(rec)
    d = rec.order
    scale = abs(alpha_d)
    g_s = max(2, sum(abs(a) for a in rec.coeffs))
    for m, t in enumerate(rec.initial):
        while 2 * scale * abs(t) >= g_s ** (m + 1):
            g_s = max(g_s + 1, iroot(2 * scale * abs(t), m + 1) + 1)

    btilde = reciprocal(denominator(rec), d)
    lo = max(c0.base, positivity_threshold(btilde))
    if alpha_d > 0:
        lo = max(lo, alpha_d + 1)
    mode = c0.mode  # a chain is only as strong as its weakest certificate

    if all(t == 0 for t in rec.initial):
        return CertifiedBase(lo, mode, g_s, 1, c0.root_bound)
    atilde = reciprocal(numerator_from_initial(rec), d)
    lo = max(lo, positivity_threshold(atilde))

    cache = _TermCache(rec)
    weight_sum = sum(abs(a) for a in rec.coeffs)
    if alpha_d < 0:
        cond_of = lambda t: scale * t  # noqa: E731
    else:
        cond_of = lambda t: scale * (t + 1)  # noqa: E731
    cap = max(lo, g_s * g_s)
    e = max(lo, g_s + 1)
    while e <= cap:
        ok, value = _certify_linear(cache, e, weight_sum, cond_of, g_s, d)
        if ok:
            return CertifiedBase(e, mode, g_s, value, c0.root_bound)
        e = max(e + 1, value)
    raise BaseSearchError(f"no certified double-mod base found up to cap {cap}")
