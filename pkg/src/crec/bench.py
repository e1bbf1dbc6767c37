"""Benchmark the two evaluation routes: operand widths (exact, hardware
independent) and wall time (median of repetitions, noisy by nature).

The quadratic-versus-linear operand growth is the machine-checkable version of
the performance claim; timings carry meaning only with generous margins.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass

from .errors import CrecError
from .evaluate import EvalStrategy, eval_divmod_stats, eval_modmod_stats
from .representation import DivModRepr, ModModRepr, ZeroRepr, derive_divmod
from .verify import Fixture, get_fixture

STRATEGIES = ("divmod", "modmod_naive", "modmod_fast")
CSV_HEADER = ("fixture", "n", "strategy", "operand_bits", "wall_ns", "reps")


@dataclass(frozen=True)
class BenchRow:
    fixture: str
    n: int
    strategy: str
    operand_bits: int
    wall_ns: int
    reps: int

    def to_json_dict(self) -> dict:
        return {
            "fixture": self.fixture,
            "n": self.n,
            "strategy": self.strategy,
            "operand_bits": self.operand_bits,
            "wall_ns": self.wall_ns,
            "reps": self.reps,
        }


def _fixture_evaluators(fixture: Fixture):
    """One callable per strategy; each returns (sequence value, operand bits).

    For shifted fixtures the floor-division route runs on the shifted
    recurrence and subtracts the geometric term, so all strategies return the
    same sequence value.
    """
    natural = fixture.natural_recurrence()
    shift = fixture.shift if fixture.kind == "shifted" else None
    rep = fixture.representation()
    inner: ModModRepr = rep.inner if fixture.kind == "shifted" else rep  # type: ignore[union-attr]
    dm = derive_divmod(natural, base_override=fixture.base)
    assert isinstance(dm, (DivModRepr, ZeroRepr))

    def back(value: int, n: int) -> int:
        return value - shift ** (n + 1) if shift is not None else value

    def run_divmod(n: int):
        value, bits = eval_divmod_stats(dm, n)
        return back(value, n), bits

    def run_naive(n: int):
        value, bits = eval_modmod_stats(inner, n, EvalStrategy.NAIVE)
        return back(value, n), bits

    def run_fast(n: int):
        value, bits = eval_modmod_stats(inner, n, EvalStrategy.FAST)
        return back(value, n), bits

    return {"divmod": run_divmod, "modmod_naive": run_naive, "modmod_fast": run_fast}


def bench_eval(
    fixture: Fixture | str,
    n_list,
    strategies=("divmod", "modmod_fast"),
    reps: int = 5,
) -> list[BenchRow]:
    """Time each strategy at each n; one warm-up run is discarded, the median of
    `reps` timed runs is reported. Values are re-asserted equal across
    strategies at every point."""
    if isinstance(fixture, str):
        fixture = get_fixture(fixture)
    if reps < 1:
        raise CrecError("reps must be >= 1")
    for strategy in strategies:
        if strategy not in STRATEGIES:
            raise CrecError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    evaluators = _fixture_evaluators(fixture)
    rows: list[BenchRow] = []
    for n in n_list:
        values = {}
        for strategy in strategies:
            run = evaluators[strategy]
            value, bits = run(n)  # warm-up, also provides the exact operand width
            samples = []
            for _ in range(reps):
                start = time.perf_counter_ns()
                value, bits = run(n)
                samples.append(time.perf_counter_ns() - start)
            values[strategy] = value
            rows.append(
                BenchRow(
                    fixture=fixture.name,
                    n=n,
                    strategy=strategy,
                    operand_bits=bits,
                    wall_ns=int(statistics.median(samples)),
                    reps=reps,
                )
            )
        if len(set(values.values())) > 1:
            raise CrecError(f"strategies disagree at n={n}: {values}")
    return rows


def emit_csv(rows, path) -> None:
    """Write rows with the stable header fixture,n,strategy,operand_bits,wall_ns,reps."""
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(
                (row.fixture, row.n, row.strategy, row.operand_bits, row.wall_ns, row.reps)
            )


def read_csv(path) -> list[BenchRow]:
    """Inverse of emit_csv (round-trip check helper)."""
    rows = []
    with open(path, "r", newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise CrecError(f"unexpected CSV header {header!r}")
        for record in reader:
            fixture, n, strategy, bits, wall, reps = record
            rows.append(
                BenchRow(
                    fixture=fixture,
                    n=int(n),
                    strategy=strategy,
                    operand_bits=int(bits),
                    wall_ns=int(wall),
                    reps=int(reps),
                )
            )
    return rows


def gnuplot_lines(rows) -> str:
    """Space-separated block per (fixture, strategy), '#' headers; plot-friendly."""
    out = []
    groups: dict[tuple[str, str], list[BenchRow]] = {}
    for row in rows:
        groups.setdefault((row.fixture, row.strategy), []).append(row)
    for (fixture, strategy), block in groups.items():
        out.append(f"# {fixture} {strategy}")
        out.append("# n operand_bits wall_ns")
        for row in sorted(block, key=lambda r: r.n):
            out.append(f"{row.n} {row.operand_bits} {row.wall_ns}")
        out.append("")
    return "\n".join(out)
