"""Dense integer polynomials with arbitrary-precision coefficients.

Degrees stay tiny (a handful), coefficients may be huge; everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import PolynomialError


def iroot(x: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer, exactly."""
    if x < 0:
        raise ValueError("iroot of a negative number")
    if k < 1:
        raise ValueError("iroot order must be >= 1")
    if k == 1 or x in (0, 1):
        return x
    # Newton iteration on integers, started from a power-of-two overestimate.
    r = 1 << -(-x.bit_length() // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r**k > x:
        r -= 1
    return r


@dataclass(frozen=True)
class IntPoly:
    """coeffs[i] is the coefficient of x**i; trailing zeros are stripped.

    The zero polynomial is IntPoly(()) and has degree None.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def free_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def eval(self, x: int) -> int:
        """Evaluate exactly at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(f"{sign} {body}" if parts else (f"-{body}" if c < 0 else body))
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> IntPoly:
        return cls(int(c) for c in data["coeffs"])


def reciprocal(p: IntPoly, d: int) -> IntPoly:
    """Coefficient reversal padded to degree d: returns q with q(x) = x**d * p(1/x).

    The coefficient of x**(d-i) in the result is p's coefficient of x**i.
    """
    if p.is_zero():
        raise PolynomialError("reciprocal of the zero polynomial is undefined")
    deg = p.degree
    assert deg is not None
    if d < deg:
        raise PolynomialError(f"reversal degree {d} below polynomial degree {deg}")
    cs = p.coeffs
    return IntPoly(cs[d - k] if d - k < len(cs) else 0 for k in range(d + 1))


def cauchy_root_bound(p: IntPoly) -> int:
    """Certified strict integer bound M: every complex root z of p has |z| < M.

    Classical bound 1 + max|c_i| / |lead| over i < degree, rounded up.
    """
    if p.is_zero() or p.degree == 0:
        raise PolynomialError("root bound requires degree >= 1")
    lead = abs(p.leading())
    top = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-top // lead)


def positivity_threshold(p: IntPoly) -> int:
    """Smallest x0 >= 1 with p(x) > 0 guaranteed for every integer x >= x0.

    The Cauchy bound certifies the tail (no roots at or beyond it, positive
    leading coefficient); below it the threshold is refined by direct
    evaluation until the first non-positive value.
    """
    if p.is_zero() or p.leading() <= 0:
        raise PolynomialError("positivity threshold requires a positive leading coefficient")
    if p.degree == 0:
        return 1
    x0 = cauchy_root_bound(p)
    x = x0 - 1
    while x >= 1 and p.eval(x) > 0:
        x0 = x
        x -= 1
    return max(x0, 1)
