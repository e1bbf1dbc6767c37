import pytest

from crec.errors import DerivationError, NaturalityError
from crec.poly import IntPoly
from crec.recurrence import Recurrence
from crec.rendering import render
from crec.representation import (
    DivModRepr,
    ModModRepr,
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

FIBONACCI = Recurrence((-1, -1), (0, 1))
PELL = Recurrence((-2, -1), (0, 1))
MERSENNE = Recurrence((-3, 2), (0, 1))
NATURALS = Recurrence((-2, 1), (0, 1))
A002249 = Recurrence((-1, 2), (2, 1))
A088137 = Recurrence((-2, 3), (0, 1))
ZERO_SEQ = Recurrence((-1, -1), (0, 0))


def test_derive_divmod_published_fixtures():
    rep = derive_divmod(FIBONACCI, base_override=3)
    assert isinstance(rep, DivModRepr)
    assert rep.base.base == 3
    assert rep.base.mode == "asserted"
    assert rep.atilde == IntPoly([0, 1])
    assert rep.btilde == IntPoly([-1, -1, 1])

    rep = derive_divmod(PELL, base_override=3)
    assert rep.atilde == IntPoly([0, 1])
    assert rep.btilde == IntPoly([-1, -2, 1])


def test_derive_divmod_zero_sequence():
    assert isinstance(derive_divmod(ZERO_SEQ), ZeroRepr)
    assert isinstance(derive_modmod(ZERO_SEQ), ZeroRepr)


def test_derive_modmod_published_fixtures():
    rep = derive_modmod(FIBONACCI, base_override=3)
    assert isinstance(rep, ModModRepr)
    assert (rep.sign, rep.offset, rep.divisor) == (-1, 0, 1)

    rep = derive_modmod(MERSENNE, base_override=6)
    assert (rep.sign, rep.offset, rep.divisor) == (1, -1, 2)
    assert rep.btilde == IntPoly([2, -3, 1])

    rep = derive_modmod(NATURALS, base_override=4)
    assert (rep.sign, rep.offset, rep.divisor) == (1, -1, 1)
    assert rep.btilde == IntPoly([1, -2, 1])


def test_free_term_invariants():
    for rec in (FIBONACCI, MERSENNE, NATURALS):
        rep = derive_modmod(rec, base_override=10)
        assert rep.alpha_d == rec.coeffs[-1]
        assert rep.alpha_d == rep.btilde.free_term()


def test_divmod_and_modmod_share_polynomials():
    for rec in (FIBONACCI, MERSENNE, NATURALS):
        dm = derive_divmod(rec, base_override=9)
        mm = derive_modmod(rec, base_override=9)
        assert dm.atilde == mm.atilde
        assert dm.btilde == mm.btilde


def test_naturality_gate():
    with pytest.raises(NaturalityError):
        derive_modmod(A002249)
    # force pushes through the gate (the certified search then rejects on its own)
    with pytest.raises(NaturalityError):
        derive_modmod(A002249, force=True)
    rep = derive_modmod(A002249, base_override=21, force=True)
    assert isinstance(rep, ModModRepr)


def test_derive_shifted_published_fixtures():
    rep = derive_shifted(A002249, base_override=21)
    assert isinstance(rep, ShiftedRepr)
    assert rep.shift == 2
    assert rep.inner.btilde == IntPoly([-4, 4, -3, 1])
    assert rep.inner.atilde == IntPoly([0, 6, -7, 4])
    assert (rep.inner.sign, rep.inner.offset, rep.inner.divisor) == (-1, 0, 4)

    rep = derive_shifted(A088137, base_override=91, h_override=3)
    assert rep.shift == 3
    assert rep.inner.btilde == IntPoly([-9, 9, -5, 1])
    assert rep.inner.atilde == IntPoly([0, 6, -5, 3])
    assert rep.inner.divisor == 9


def test_derive_shifted_rejects_natural_input():
    with pytest.raises(DerivationError):
        derive_shifted(FIBONACCI)


def test_derive_auto_picks_kind():
    assert isinstance(derive_auto(FIBONACCI, base_override=3), ModModRepr)
    assert isinstance(derive_auto(A002249, base_override=21), ShiftedRepr)
    assert isinstance(derive_auto(ZERO_SEQ), ZeroRepr)


def test_power_terms_structure_order():
    rep = derive_modmod(Recurrence((-1, 2), (2, 1)), base_override=21, force=True)
    # highest power first, zero coefficients skipped
    assert power_terms(IntPoly([0, 6, -7, 4])) == [(4, 3), (-7, 2), (6, 1)]
    assert power_terms(rep.btilde) == [(1, 2), (-1, 1), (2, 0)]


def test_json_round_trip_all_kinds():
    reps = [
        derive_divmod(FIBONACCI, base_override=3),
        derive_modmod(MERSENNE, base_override=6),
        derive_shifted(A002249, base_override=21),
        derive_modmod(ZERO_SEQ),
        derive_modmod(FIBONACCI),  # certified pipeline
    ]
    for rep in reps:
        data = to_json_dict(rep)
        assert from_json_dict(data) == rep


def test_json_schema_fields():
    data = to_json_dict(derive_modmod(FIBONACCI, base_override=3))
    assert data["kind"] == "modmod"
    assert data["base"] == "3"
    assert data["mode"] == "asserted"
    assert data["atilde"] == {"coeffs": ["0", "1"]}
    assert data["btilde"] == {"coeffs": ["-1", "-1", "1"]}
    assert data["alpha_d"] == "-1"
    assert data["offset"] == 0
    assert data["divisor"] == "1"
    assert data["shift_h"] is None

    shifted = to_json_dict(derive_shifted(A002249, base_override=21))
    assert shifted["kind"] == "shifted"
    assert shifted["shift_h"] == "2"
    assert to_json_dict(derive_modmod(ZERO_SEQ)) == {"kind": "zero"}


def test_from_json_rejects_garbage():
    with pytest.raises(DerivationError):
        from_json_dict({"kind": "wat"})
    good = to_json_dict(derive_modmod(MERSENNE, base_override=6))
    bad = dict(good, offset=0)  # inconsistent with positive free term
    with pytest.raises(DerivationError):
        from_json_dict(bad)


def test_render_published_text_forms():
    fib = derive_modmod(FIBONACCI, base_override=3)
    assert render(fib, "text") == "((3^(n^2+n)) mod (3^(2n) - 3^n - 1)) mod 3^n"
    mersenne = derive_modmod(MERSENNE, base_override=6)
    assert (
        render(mersenne, "text")
        == "-1 + (1/2)*(((-(6^(n^2+n))) mod (6^(2n) - 3*6^n + 2)) mod 6^n)"
    )
    assert render(derive_modmod(ZERO_SEQ), "text") == "0"


def test_render_latex_layout():
    latex = render(derive_modmod(FIBONACCI, base_override=3), "latex")
    assert "3^{n^2+n}" in latex
    assert "\\bmod" in latex
    assert "3^{2n} - 3^n - 1" in latex
    shifted = render(derive_shifted(A002249, base_override=21), "latex")
    assert shifted.endswith("- 2^{n+1}")
    assert "\\frac{1}{4}" in shifted


def test_render_json_round_trips():
    import json

    rep = derive_shifted(A088137, base_override=91)
    blob = render(rep, "json")
    assert from_json_dict(json.loads(blob)) == rep


def test_render_rejects_unknown_format():
    with pytest.raises(DerivationError):
        render(derive_modmod(FIBONACCI, base_override=3), "html")
