"""Fixture catalogue, oracle-equivalence harness, seeded random recurrences and
OEIS b-file ingestion.

Fixture bases are the published ones and are pinned in asserted mode: the
catalogue checks the exact printed formulas against the recurrence oracle.
The certified pipeline is exercised separately with its own (larger) bases.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import CrecError, BFileError, EvaluationError, InvalidRepresentationError
from .evaluate import EvalStrategy, evaluate, mismatch_diagnostic
from .recurrence import Recurrence, naturality, oracle_prefix, shift_to_natural
from .representation import (
    Representation,
    derive_modmod,
    derive_shifted,
)

THREADS_ENV = "CREC_THREADS"


@dataclass(frozen=True)
class Fixture:
    """A published example: recurrence, representation kind, published base."""

    name: str
    oeis_id: str
    coeffs: tuple[int, ...]
    initial: tuple[int, ...]
    kind: str  # "modmod" | "shifted"
    base: int
    shift: int | None = None
    prefix: tuple[int, ...] = ()  # expected t(0).., transcribed from the OEIS entry

    @property
    def recurrence(self) -> Recurrence:
        return Recurrence(self.coeffs, self.initial)

    def natural_recurrence(self) -> Recurrence:
        """The recurrence the inner formula actually represents (shifted if needed)."""
        rec = self.recurrence
        if self.kind == "shifted":
            assert self.shift is not None
            return shift_to_natural(rec, self.shift)
        return rec

    def representation(self, base_override: int | None = None) -> Representation:
        base = self.base if base_override is None else base_override
        if self.kind == "shifted":
            return derive_shifted(self.recurrence, base_override=base, h_override=self.shift)
        return derive_modmod(self.recurrence, base_override=base)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "oeis_id": self.oeis_id,
            "recurrence": self.recurrence.to_json_dict(),
            "kind": self.kind,
            "base": str(self.base),
            "shift_h": str(self.shift) if self.shift is not None else None,
            "prefix": [str(t) for t in self.prefix],
        }


_FIXTURES = (
    Fixture(
        "fibonacci", "A000045", (-1, -1), (0, 1), "modmod", 3,
        prefix=(0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89),
    ),
    Fixture(
        "lucas", "A000032", (-1, -1), (2, 1), "modmod", 5,
        prefix=(2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199),
    ),
    Fixture(
        "pell", "A000129", (-2, -1), (0, 1), "modmod", 3,
        prefix=(0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741),
    ),
    Fixture(
        "pell_lucas", "A002203", (-2, -1), (2, 2), "modmod", 9,
        prefix=(2, 2, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726, 16238),
    ),
    Fixture(
        "naturals", "A001477", (-2, 1), (0, 1), "modmod", 4,
        prefix=(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11),
    ),
    Fixture(
        "all_twos", "A007395", (-2, 1), (2, 2), "modmod", 4,
        prefix=(2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2),
    ),
    Fixture(
        "mersenne", "A000225", (-3, 2), (0, 1), "modmod", 6,
        prefix=(0, 1, 3, 7, 15, 31, 63, 127, 255, 511, 1023, 2047),
    ),
    Fixture(
        "two_pow_plus_one", "A000051", (-3, 2), (2, 3), "modmod", 9,
        prefix=(2, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025, 2049),
    ),
    Fixture(
        "pell_x_k7", "A001081", (-16, 1), (1, 8), "modmod", 143,
        prefix=(1, 8, 127, 2024, 32257, 514088, 8193151),
    ),
    Fixture(
        "pell_y_k7", "A001080", (-16, 1), (0, 3), "modmod", 64,
        prefix=(0, 3, 48, 765, 12192, 194307, 3096720),
    ),
    Fixture(
        "a088137", "A088137", (-2, 3), (0, 1), "shifted", 91, shift=3,
        prefix=(0, 1, 2, 1, -4, -11, -10, 13, 56, 73, -22, -263),
    ),
    Fixture(
        "a002249", "A002249", (-1, 2), (2, 1), "shifted", 21, shift=2,
        prefix=(2, 1, -3, -5, 1, 11, 9, -13, -31, -5, 57, 67),
    ),
    Fixture(
        "tribonacci", "A000073", (-1, -1, -1), (0, 0, 1), "modmod", 2,
        prefix=(0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149),
    ),
    Fixture(
        "padovan", "A000931", (0, -1, -1), (1, 0, 0), "modmod", 2,
        prefix=(1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4),
    ),
    Fixture(
        "narayana", "A000930", (-1, 0, -1), (1, 1, 1), "modmod", 2,
        prefix=(1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41),
    ),
)


def fixtures() -> list[Fixture]:
    """The published example catalogue, in publication order."""
    return list(_FIXTURES)


def get_fixture(name: str) -> Fixture:
    for fx in _FIXTURES:
        if fx.name == name:
            return fx
    known = ", ".join(fx.name for fx in _FIXTURES)
    raise CrecError(f"unknown fixture {name!r}; known fixtures: {known}")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of comparing a representation against the recurrence oracle.

    On a mismatch, `diagnostic` carries the full operand dump at the first bad
    index (numerator, modulus, inner remainders) for debuggability.
    """

    lo: int
    hi: int
    status: str  # "ok" | "mismatch"
    checked: int
    mismatches: tuple[tuple[int, int, int | None], ...] = ()  # (n, expected, got)
    diagnostic: dict | None = None
    timings_ns: tuple[tuple[int, int], ...] | None = None

    @property
    def first_mismatch(self) -> tuple[int, int, int | None] | None:
        return self.mismatches[0] if self.mismatches else None

    def to_json_dict(self) -> dict:
        data: dict = {
            "lo": self.lo,
            "hi": self.hi,
            "status": self.status,
            "checked": self.checked,
            "first_mismatch": None,
        }
        if self.mismatches:
            n, expected, got = self.mismatches[0]
            data["first_mismatch"] = {
                "n": n,
                "expected": str(expected),
                "got": str(got) if got is not None else None,
            }
            data["diagnostic"] = self.diagnostic
        return data


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_range(
    rep: Representation,
    rec: Recurrence,
    n_lo: int,
    n_hi: int,
    strategy: EvalStrategy | str = EvalStrategy.FAST,
    exhaustive: bool = False,
    collect_timings: bool = False,
) -> VerifyReport:
    """Compare the representation with the term oracle on n_lo..n_hi.

    Stops at the first mismatch unless exhaustive is set. Evaluation errors at
    an index count as a mismatch with got=None (an asserted base below the
    validity threshold is a mismatch, not a crash). CREC_THREADS > 1 fans the
    evaluations out; reporting stays in ascending order either way.
    """
    if n_lo < 1 or n_lo > n_hi:
        raise CrecError(f"bad verification range {n_lo}:{n_hi}; need 1 <= lo <= hi")
    expected = oracle_prefix(rec, n_hi + 1)

    def probe(n: int) -> tuple[int | None, int]:
        start = time.perf_counter_ns()
        try:
            got = evaluate(rep, n, strategy)
        except (EvaluationError, InvalidRepresentationError):
            got = None
        return got, time.perf_counter_ns() - start

    mismatches: list[tuple[int, int, int | None]] = []
    timings: list[tuple[int, int]] = []
    indices = range(n_lo, n_hi + 1)
    checked = 0
    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(probe, indices))
    else:
        results = None

    for i, n in enumerate(indices):
        got, elapsed = results[i] if results is not None else probe(n)
        checked += 1
        if collect_timings:
            timings.append((n, elapsed))
        if got != expected[n]:
            mismatches.append((n, expected[n], got))
            if not exhaustive:
                break

    diagnostic = None
    if mismatches:
        try:
            diagnostic = mismatch_diagnostic(rep, mismatches[0][0])
        except CrecError as exc:
            diagnostic = {"error": str(exc)}
    return VerifyReport(
        lo=n_lo,
        hi=n_hi,
        status="ok" if not mismatches else "mismatch",
        checked=checked,
        mismatches=tuple(mismatches),
        diagnostic=diagnostic,
        timings_ns=tuple(timings) if collect_timings else None,
    )


def random_natural_recurrence(
    seed: int, d_max: int = 4, coeff_max: int = 5, init_max: int = 9
) -> Recurrence:
    """Deterministic certified-natural recurrence: all coefficients <= 0,
    non-negative initial terms, nonzero trailing coefficient."""
    if d_max < 1:
        raise CrecError("d_max must be >= 1")
    rng = random.Random(seed)
    d = rng.randint(1, d_max)
    coeffs = [-rng.randint(0, coeff_max) for _ in range(d - 1)]
    coeffs.append(-rng.randint(1, coeff_max))
    initial = [rng.randint(0, init_max) for _ in range(d)]
    return Recurrence(coeffs, initial)


def random_prefix_natural_recurrence(
    seed: int,
    d_max: int = 4,
    coeff_max: int = 5,
    init_max: int = 9,
    prefix: int = 64,
    positive_free_term: bool = True,
) -> Recurrence:
    """Deterministic mixed-sign recurrence whose first `prefix` terms are
    non-negative; by default the trailing coefficient is forced positive so the
    positive-free-term branch of the double-mod form gets populated.

    Rejection-samples from the seed; naturality of the result is only
    "checked-prefix", which is exactly the population this generator exists
    to exercise.
    """
    if d_max < 1:
        raise CrecError("d_max must be >= 1")
    rng = random.Random(seed)
    for _ in range(100_000):
        d = rng.randint(1, d_max)
        coeffs = [rng.randint(-coeff_max, coeff_max) for _ in range(d - 1)]
        last = rng.randint(1, coeff_max) if positive_free_term else rng.randint(-coeff_max, -1)
        coeffs.append(last)
        if not any(c < 0 for c in coeffs):
            continue  # pure non-negative rules collapse immediately
        initial = sorted(rng.randint(0, init_max) for _ in range(d))
        rec = Recurrence(coeffs, initial)
        if naturality(rec, prefix).status != "rejected":
            return rec
    raise CrecError("could not find a prefix-natural recurrence for these parameters")


def load_bfile(path) -> list[tuple[int, int]]:
    """Parse an OEIS b-file: one "n value" pair per line, '#' comments allowed."""
    pairs: list[tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise BFileError(f"{path}:{lineno}: expected 'n value', got {line.rstrip()!r}")
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise BFileError(
                    f"{path}:{lineno}: non-integer field in {line.rstrip()!r}"
                ) from None
    return pairs
