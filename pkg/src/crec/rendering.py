"""Human-readable output for representation descriptors: text, LaTeX, JSON."""

from __future__ import annotations

import json

from .errors import DerivationError
from .representation import (
    ModModRepr,
    Representation,
    ShiftedRepr,
    ZeroRepr,
    power_terms,
    to_json_dict,
)

FORMATS = ("text", "latex", "json")


def _join_signed(parts: list[tuple[int, str]]) -> str:
    # parts are (coefficient, body); bodies already exclude the coefficient sign
    out = []
    for coeff, body in parts:
        if not out:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(out)


def _text_power(base: int, k: int) -> str:
    if k == 1:
        return f"{base}^n"
    return f"{base}^({k}n)"


def _text_numerator(base: int, terms: list[tuple[int, int]]) -> str:
    # sum coeff * base^(n^2 + k*n), highest k first
    parts = []
    for coeff, k in terms:
        exp = "n^2+n" if k == 1 else f"n^2+{k}n"
        mag = abs(coeff)
        body = f"{base}^({exp})" if mag == 1 else f"{mag}*{base}^({exp})"
        parts.append((coeff, body))
    return _join_signed(parts)


def _text_modulus(base: int, terms: list[tuple[int, int]]) -> str:
    parts = []
    for coeff, k in terms:
        mag = abs(coeff)
        if k == 0:
            body = str(mag)
        else:
            body = _text_power(base, k) if mag == 1 else f"{mag}*{_text_power(base, k)}"
        parts.append((coeff, body))
    return _join_signed(parts)


def _text_modmod(rep: ModModRepr) -> str:
    base = rep.base.base
    num = _text_numerator(base, power_terms(rep.atilde))
    if rep.sign > 0:
        num = f"-({num})"
    den = _text_modulus(base, power_terms(rep.btilde))
    core = f"(({num}) mod ({den})) mod {base}^n"
    if rep.divisor != 1:
        core = f"(1/{rep.divisor})*({core})"
    if rep.offset != 0:
        core = f"{rep.offset} + ({core})" if rep.divisor == 1 else f"{rep.offset} + {core}"
    return core


def _text(rep: Representation) -> str:
    if isinstance(rep, ZeroRepr):
        return "0"
    if isinstance(rep, ShiftedRepr):
        inner = _text_modmod(rep.inner)
        if rep.inner.divisor == 1 and rep.inner.offset == 0:
            inner = f"({inner})"
        return f"{inner} - {rep.shift}^(n+1)"
    if isinstance(rep, ModModRepr):
        return _text_modmod(rep)
    base = rep.base.base
    num = _text_numerator(base, power_terms(rep.atilde))
    den = _text_modulus(base, power_terms(rep.btilde))
    return f"floor(({num}) / ({den})) mod {base}^n"


def _latex_numerator(base: int, terms: list[tuple[int, int]]) -> str:
    parts = []
    for coeff, k in terms:
        exp = "n^2+n" if k == 1 else f"n^2+{k}n"
        mag = abs(coeff)
        body = f"{base}^{{{exp}}}" if mag == 1 else f"{mag} \\cdot {base}^{{{exp}}}"
        parts.append((coeff, body))
    return _join_signed(parts)


def _latex_modulus(base: int, terms: list[tuple[int, int]]) -> str:
    parts = []
    for coeff, k in terms:
        mag = abs(coeff)
        if k == 0:
            body = str(mag)
        else:
            pw = f"{base}^n" if k == 1 else f"{base}^{{{k}n}}"
            body = pw if mag == 1 else f"{mag} \\cdot {pw}"
        parts.append((coeff, body))
    return _join_signed(parts)


def _latex_modmod(rep: ModModRepr) -> str:
    base = rep.base.base
    terms = power_terms(rep.atilde)
    if rep.sign > 0:
        # distribute the negation over the terms, as the examples print it
        num = f"\\left( {_latex_numerator(base, [(-c, k) for c, k in terms])} \\right)"
    else:
        num = _latex_numerator(base, terms)
        if len(terms) > 1:
            num = f"( {num} )"
    den = _latex_modulus(base, power_terms(rep.btilde))
    core = f"\\left( {num} \\bmod ({den}) \\right) \\bmod {base}^n"
    if rep.divisor != 1:
        core = f"\\frac{{1}}{{{rep.divisor}}} \\cdot \\left( {core} \\right)"
    if rep.offset != 0:
        core = f"\\left( {core} \\right) - 1"  # offset is 0 or -1 by construction
    return core


def _latex(rep: Representation) -> str:
    if isinstance(rep, ZeroRepr):
        return "0"
    if isinstance(rep, ShiftedRepr):
        return f"{_latex_modmod(rep.inner)} - {rep.shift}^{{n+1}}"
    if isinstance(rep, ModModRepr):
        return _latex_modmod(rep)
    base = rep.base.base
    num = _latex_numerator(base, power_terms(rep.atilde))
    den = _latex_modulus(base, power_terms(rep.btilde))
    return f"\\left\\lfloor \\frac{{{num}}}{{{den}}} \\right\\rfloor \\bmod {base}^n"


def render(rep: Representation, fmt: str = "text") -> str:
    """Deterministic, parse-stable rendering of a representation descriptor."""
    if fmt == "text":
        return _text(rep)
    if fmt == "latex":
        return _latex(rep)
    if fmt == "json":
        return json.dumps(to_json_dict(rep), separators=(",", ":"))
    raise DerivationError(f"unknown render format {fmt!r}; expected one of {FORMATS}")
