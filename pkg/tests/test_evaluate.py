import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crec.errors import DivisibilityWarning, EvaluationError, InvalidRepresentationError
from crec.evaluate import (
    EvalStrategy,
    euclid_mod,
    eval_divmod,
    eval_modmod,
    eval_shifted,
    evaluate,
    lemma_main_check,
    modpow,
)
from crec.recurrence import Recurrence, oracle_prefix
from crec.representation import derive_divmod, derive_modmod, derive_shifted, ZeroRepr

FIBONACCI = Recurrence((-1, -1), (0, 1))
MERSENNE = Recurrence((-3, 2), (0, 1))
NATURALS = Recurrence((-2, 1), (0, 1))
PELL = Recurrence((-2, -1), (0, 1))
TWO_POW_PLUS_ONE = Recurrence((-3, 2), (2, 3))
A002249 = Recurrence((-1, 2), (2, 1))


def test_euclid_mod_examples():
    assert euclid_mod(-16, 9) == 2
    assert euclid_mod(7, 7) == 0
    assert euclid_mod(-96, 9) == 3


def test_euclid_mod_range_and_congruence():
    rng = random.Random(5)
    for _ in range(500):
        x = rng.randint(-(10**18), 10**18)
        m = rng.randint(1, 10**12)
        r = euclid_mod(x, m)
        assert 0 <= r < m
        assert (x - r) % m == 0


def test_euclid_mod_rejects_bad_modulus():
    with pytest.raises(EvaluationError):
        euclid_mod(5, 0)
    with pytest.raises(EvaluationError):
        euclid_mod(5, -3)


def test_modpow_examples():
    assert modpow(3, 4, 5) == 1
    assert modpow(12345, 0, 7) == 1
    assert modpow(0, 0, 7) == 1
    assert modpow(5, 0, 1) == 0  # 1 mod 1
    assert modpow(2, 10, 1000) == 24


def test_modpow_exhaustive_small():
    for b in range(13):
        for k in range(13):
            for m in range(1, 101):
                assert modpow(b, k, m) == euclid_mod(b**k, m)


def test_modpow_rejects_bad_input():
    with pytest.raises(EvaluationError):
        modpow(2, 3, 0)
    with pytest.raises(EvaluationError):
        modpow(2, -1, 5)


# the three small remainder identities the nested-remainder identity rests on


@given(a=st.integers(min_value=1, max_value=10**12), b=st.integers(min_value=2, max_value=10**6))
def test_negated_floor_identity(a, b):
    if a % b == 0:
        a += 1
    assert -((-a) // b) == a // b + 1


@given(
    a=st.integers(min_value=0, max_value=10**6),
    y=st.integers(min_value=0, max_value=10**6),
    c=st.integers(min_value=2, max_value=10**9),
)
def test_small_product_commutes_with_mod(a, y, c):
    if a * y >= c:
        c = a * y + 1 + (a * y == 0)
    assert (a * y) % c == a * (y % c)


@given(x=st.integers(min_value=-(10**12), max_value=10**12), c=st.integers(min_value=2, max_value=10**6))
def test_successor_commutes_with_mod(x, c):
    if x % c == c - 1:
        x += 1
    assert (x + 1) % c == (x % c) + 1


def test_eval_divmod_published_values():
    rep = derive_divmod(FIBONACCI, base_override=3)
    # n=3: floor(3^12 / 701) = 758 and 758 mod 27 = 2
    assert 3**12 // (3**6 - 3**3 - 1) == 758
    assert eval_divmod(rep, 3) == 2
    assert eval_divmod(rep, 4) == 3
    assert eval_divmod(ZeroRepr(), 12345) == 0


def test_eval_divmod_rejects_bad_index():
    rep = derive_divmod(FIBONACCI, base_override=3)
    with pytest.raises(EvaluationError):
        eval_divmod(rep, 0)


def test_eval_reports_nonpositive_modulus():
    # the reversed Pell denominator is negative at 2
    rep = derive_divmod(PELL, base_override=2)
    with pytest.raises(EvaluationError):
        eval_divmod(rep, 1)
    mm = derive_modmod(PELL, base_override=2)
    with pytest.raises(EvaluationError):
        eval_modmod(mm, 1)


def test_eval_modmod_published_values():
    fib = derive_modmod(FIBONACCI, base_override=3)
    assert 3**20 % (3**8 - 3**4 - 1) == 408 and 408 % 81 == 3
    assert eval_modmod(fib, 4) == 3

    mersenne = derive_modmod(MERSENNE, base_override=6)
    assert euclid_mod(-(6**6), 6**4 - 3 * 6**2 + 2) == 944 and 944 % 36 == 8
    assert eval_modmod(mersenne, 2) == 3

    naturals = derive_modmod(NATURALS, base_override=4)
    assert euclid_mod(-(4**6), 4**4 - 2 * 4**2 + 1) == 179 and 179 % 16 == 3
    assert eval_modmod(naturals, 2) == 2

    two_pow = derive_modmod(TWO_POW_PLUS_ONE, base_override=9)
    assert euclid_mod(-2 * 9**3 + 3 * 9**2, 9**2 - 3 * 9 + 2) == 17 and 17 % 9 == 8
    assert eval_modmod(two_pow, 1) == 3


def test_strategy_agreement():
    reps = [
        derive_modmod(FIBONACCI, base_override=3),
        derive_modmod(MERSENNE, base_override=6),
        derive_modmod(NATURALS, base_override=4),
        derive_modmod(FIBONACCI),  # certified base
    ]
    for rep in reps:
        for n in range(1, 41):
            assert eval_modmod(rep, n, EvalStrategy.NAIVE) == eval_modmod(rep, n, EvalStrategy.FAST)


def test_eval_modmod_inexact_division_is_an_error():
    # base 5 leaves a remainder not divisible by the scale factor 2
    rep = derive_modmod(MERSENNE, base_override=5)
    with pytest.raises(InvalidRepresentationError):
        eval_modmod(rep, 1)


def test_vanishing_inner_remainder_is_reported_not_fatal():
    tribonacci = Recurrence((-1, -1, -1), (0, 0, 1))
    rep = derive_modmod(tribonacci, base_override=2)
    with pytest.warns(DivisibilityWarning):
        assert eval_modmod(rep, 1) == 0  # the value is still the formula's value


def test_negative_recovered_value_is_an_error():
    # base 2 makes the reversed-naturals modulus 1, forcing value -1
    rep = derive_modmod(NATURALS, base_override=2)
    with pytest.warns(DivisibilityWarning):
        with pytest.raises(InvalidRepresentationError):
            eval_modmod(rep, 1)


def test_eval_shifted_reproduces_negative_values():
    rep = derive_shifted(A002249, base_override=21)
    expected = oracle_prefix(A002249, 13)
    for n in range(1, 13):
        assert eval_shifted(rep, n) == expected[n]
    assert evaluate(rep, 2) == -3


def test_evaluate_dispatch():
    assert evaluate(ZeroRepr(), 7) == 0
    dm = derive_divmod(FIBONACCI, base_override=3)
    mm = derive_modmod(FIBONACCI, base_override=3)
    assert evaluate(dm, 10) == evaluate(mm, 10) == 55


def test_lemma_main_published_instances():
    # negative congruence class: golden-ratio recurrence at n=2, base 3
    check = lemma_main_check(729, 71, 9, -1)
    assert check.preconditions_hold
    assert check.lhs == check.rhs == 1

    # positive congruence class: identity sequence at n=1, base 4
    check = lemma_main_check(16, 9, 4, 1)
    assert check.preconditions_hold
    assert check.lhs == check.rhs == 2


def test_lemma_main_reports_violations_without_raising():
    check = lemma_main_check(28, 7, 4, -1)  # 7 | 28
    assert not check.preconditions_hold
    assert not check.conditions["B_not_divides_A"]
    check = lemma_main_check(0, 0, 0, 0)
    assert not check.preconditions_hold


def make_lemma_tuple(rng):
    """Random tuple satisfying all preconditions of the nested-remainder identity."""
    C = rng.randint(2, 10**6)
    a = 0
    while a == 0:
        a = rng.randint(-(C - 1), C - 1)
    k = rng.randint(2, 10**4)
    B = a + k * C
    assert B > C
    if a < 0:
        m_hi = (C - 1) // abs(a)
    else:
        m_hi = (C - a - 1) // a
    m = rng.randint(0, m_hi)
    s = euclid_mod(-a * m, C)
    if s == 0:
        s = C
    j = rng.randint(0, 10**6)
    A = B * (j * C + m) + s
    return A, B, C, a


def test_lemma_main_random_tuples():
    rng = random.Random(2024)
    negatives = positives = 0
    for _ in range(2000):
        A, B, C, a = make_lemma_tuple(rng)
        check = lemma_main_check(A, B, C, a)
        assert check.preconditions_hold, (A, B, C, a, check.conditions)
        assert check.equal, (A, B, C, a)
        negatives += a < 0
        positives += a > 0
    assert negatives and positives
