"""Command-line front end: a thin client over the HTTP service.

Exit codes: 0 success, 1 usage or derivation errors, 2 verification mismatch,
3 representation-validity errors (inexact scale division, modulus not
positive). Output on stdout is byte-stable for fixed inputs; provenance notes
go to stderr.
"""

from __future__ import annotations

import json
import sys

import click

from .client import ServiceClient

VALIDITY_ERRORS = ("EvaluationError", "InvalidRepresentationError")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INVALID = 3


class CliFailure(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _client(ctx) -> ServiceClient:
    return ServiceClient(base_url=ctx.obj.get("server"))


def _call(ctx, method: str, path: str, payload: dict | None = None):
    status, body = _client(ctx).request(method, path, payload)
    if status >= 400:
        if isinstance(body, dict) and "error" in body:
            kind = body["error"].get("kind", "")
            message = body["error"].get("message", str(body))
            code = EXIT_INVALID if kind in VALIDITY_ERRORS else EXIT_USAGE
            raise CliFailure(f"{kind}: {message}", code)
        raise CliFailure(f"service error {status}: {body}", EXIT_USAGE)
    return body


def _recurrence_payload(raw: str) -> dict:
    """--recurrence takes inline JSON or @file with {"coeffs": [...], "initial": [...]}."""
    text = raw
    if raw.startswith("@"):
        with open(raw[1:], "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliFailure(f"recurrence is not valid JSON: {exc}", EXIT_USAGE) from None
    if not isinstance(data, dict) or "coeffs" not in data or "initial" not in data:
        raise CliFailure('recurrence JSON needs "coeffs" and "initial" lists', EXIT_USAGE)
    return {"coeffs": [str(c) for c in data["coeffs"]], "initial": [str(t) for t in data["initial"]]}


def _parse_range(raw: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = raw.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise CliFailure(f"bad range {raw!r}; expected lo:hi", EXIT_USAGE) from None
    if lo < 1 or lo > hi:
        raise CliFailure(f"bad range {raw!r}; need 1 <= lo <= hi", EXIT_USAGE)
    return lo, hi


def _emit(ctx, text: str) -> None:
    out = ctx.obj.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text)


def _source_options(fn):
    fn = click.option("--recurrence", "recurrence", default=None,
                      help='Inline JSON or @file: {"coeffs": ["-1","-1"], "initial": ["0","1"]}.')(fn)
    fn = click.option("--fixture", "fixture", default=None, help="Catalogue fixture name.")(fn)
    return fn


def _target_payload(
    fixture, recurrence, kind=None, base=None, shift_h=None, force=False, announce_base=True
) -> dict:
    if (fixture is None) == (recurrence is None):
        raise CliFailure("exactly one of --fixture or --recurrence is required", EXIT_USAGE)
    payload: dict = {}
    if fixture is not None:
        payload["fixture"] = fixture
    else:
        payload["recurrence"] = _recurrence_payload(recurrence)
    if kind is not None:
        payload["kind"] = kind
    if base is not None:
        payload["base"] = str(base)
        if announce_base:  # derive prints the richer server-side note instead
            click.echo(
                f"note: base {base} (asserted): supplied via --base, validated only empirically",
                err=True,
            )
    if shift_h is not None:
        payload["shift_h"] = str(shift_h)
    if force:
        payload["force"] = True
    return payload


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Send requests to a running service (default: in-process; also CREC_SERVER).")
@click.option("--out", default=None, metavar="PATH", help="Write stdout payload to a file.")
@click.pass_context
def cli(ctx, server, out):
    """Compile C-recursive sequences into exact arithmetic closed forms."""
    ctx.obj = {"server": server, "out": out}


@cli.command()
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
@click.pass_context
def fixtures(ctx, fmt):
    """List the published example catalogue."""
    body = _call(ctx, "GET", "/fixtures")
    if fmt == "json":
        _emit(ctx, json.dumps(body, indent=2))
    else:
        lines = [
            f"{fx['name']:<18} {fx['oeis_id']:<8} kind={fx['kind']:<8} base={fx['base']}"
            + (f" h={fx['shift_h']}" if fx["shift_h"] else "")
            for fx in body
        ]
        _emit(ctx, "\n".join(lines))


@cli.command()
@_source_options
@click.option("--kind", type=click.Choice(["divmod", "modmod", "shifted", "auto"]), default="auto")
@click.option("--base", default=None, help="Base override (decimal; implies asserted mode).")
@click.option("--shift-h", "shift_h", default=None, help="Shift override for --kind shifted.")
@click.option("--force", is_flag=True, help="Derive even for rejected naturality.")
@click.option("--format", "fmt", type=click.Choice(["json", "latex", "text"]), default="json")
@click.pass_context
def derive(ctx, fixture, recurrence, kind, base, shift_h, force, fmt):
    """Compile a recurrence into a representation descriptor."""
    payload = _target_payload(fixture, recurrence, kind, base, shift_h, force, announce_base=False)
    body = _call(ctx, "POST", "/derive", payload)
    click.echo(f"note: {body['note']}", err=True)
    if fmt == "json":
        _emit(ctx, json.dumps(body["representation"], indent=2))
        return
    render_payload = {"representation": body["representation"], "format": fmt}
    rendered = _call(ctx, "POST", "/render", render_payload)
    _emit(ctx, rendered["formula"])


@cli.command(name="eval")
@_source_options
@click.option("--kind", type=click.Choice(["divmod", "modmod", "shifted", "auto"]), default="auto")
@click.option("--base", default=None, help="Base override (decimal; implies asserted mode).")
@click.option("-n", "single_n", type=int, default=None, help="Single index n >= 1.")
@click.option("--range", "n_range", default=None, metavar="LO:HI", help="Index range.")
@click.option("--strategy", type=click.Choice(["naive", "fast"]), default="fast")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def eval_cmd(ctx, fixture, recurrence, kind, base, single_n, n_range, strategy, fmt):
    """Evaluate a representation at one index or over a range."""
    if (single_n is None) == (n_range is None):
        raise CliFailure("exactly one of -n or --range is required", EXIT_USAGE)
    payload = _target_payload(fixture, recurrence, kind, base)
    payload["strategy"] = strategy
    if single_n is not None:
        payload["n"] = single_n
    else:
        payload["n_lo"], payload["n_hi"] = _parse_range(n_range)
    body = _call(ctx, "POST", "/eval", payload)
    values = body["values"]
    if fmt == "json":
        _emit(ctx, json.dumps(values, indent=2))
    elif single_n is not None:
        _emit(ctx, values[0]["value"])
    else:
        _emit(ctx, "\n".join(f"{item['n']} {item['value']}" for item in values))


@cli.command()
@_source_options
@click.option("--kind", type=click.Choice(["divmod", "modmod", "shifted", "auto"]), default="auto")
@click.option("--base", default=None, help="Base override (decimal; implies asserted mode).")
@click.option("--range", "n_range", default="1:20", metavar="LO:HI", show_default=True)
@click.option("--strategy", type=click.Choice(["naive", "fast"]), default="fast")
@click.option("--exhaustive", is_flag=True, help="Report every mismatch, not just the first.")
@click.option("--random", "random_count", type=int, default=None,
              help="Instead of a fixture: run COUNT seeded random certified pipelines.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for --random.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def verify(ctx, fixture, recurrence, kind, base, n_range, strategy, exhaustive,
           random_count, seed, fmt):
    """Check a representation against the recurrence oracle (exit 2 on mismatch)."""
    lo, hi = _parse_range(n_range)
    if random_count is not None:
        if fixture is not None or recurrence is not None:
            raise CliFailure("--random excludes --fixture/--recurrence", EXIT_USAGE)
        payload = {"count": random_count, "seed": seed, "n_lo": lo, "n_hi": hi}
        body = _call(ctx, "POST", "/pipeline-check", payload)
        if fmt == "json":
            _emit(ctx, json.dumps(body, indent=2))
        else:
            lines = [f"random pipeline x{body['count']}: {body['status']}"] + body["failures"]
            _emit(ctx, "\n".join(lines))
        if body["status"] != "ok":
            raise CliFailure("pipeline mismatch", EXIT_MISMATCH)
        return
    payload = _target_payload(fixture, recurrence, kind, base)
    payload.update({"n_lo": lo, "n_hi": hi, "strategy": strategy, "exhaustive": exhaustive})
    body = _call(ctx, "POST", "/verify", payload)
    if fmt == "json":
        _emit(ctx, json.dumps(body, indent=2))
    elif body["status"] == "ok":
        _emit(ctx, f"ok: verified n={lo}..{hi} ({body['checked']} terms, strategy {strategy})")
    else:
        miss = body["first_mismatch"]
        _emit(ctx, f"mismatch at n={miss['n']}: expected {miss['expected']}, got {miss['got']}")
    if body["status"] != "ok":
        raise CliFailure("verification mismatch", EXIT_MISMATCH)


@cli.command()
@click.option("--fixture", required=True, help="Catalogue fixture name.")
@click.option("--n-list", "n_list", default="1,2,4,8,16,32,64", show_default=True,
              help="Comma-separated indices.")
@click.option("--strategies", default="divmod,modmod_fast", show_default=True,
              help="Comma-separated subset of divmod,modmod_naive,modmod_fast.")
@click.option("--reps", type=int, default=5, show_default=True)
@click.option("--gnuplot", is_flag=True, help="Emit gnuplot-friendly blocks instead of CSV.")
@click.pass_context
def bench(ctx, fixture, n_list, strategies, reps, gnuplot):
    """Benchmark evaluation strategies; emits CSV (timing columns are noisy)."""
    try:
        ns = [int(part) for part in n_list.split(",") if part]
    except ValueError:
        raise CliFailure(f"bad --n-list {n_list!r}", EXIT_USAGE) from None
    payload = {
        "fixture": fixture,
        "ns": ns,
        "strategies": [part for part in strategies.split(",") if part],
        "reps": reps,
    }
    body = _call(ctx, "POST", "/bench", payload)
    rows = body["rows"]
    if gnuplot:
        from .bench import BenchRow, gnuplot_lines

        _emit(ctx, gnuplot_lines([BenchRow(**row) for row in rows]))
        return
    lines = ["fixture,n,strategy,operand_bits,wall_ns,reps"]
    lines += [
        f"{r['fixture']},{r['n']},{r['strategy']},{r['operand_bits']},{r['wall_ns']},{r['reps']}"
        for r in rows
    ]
    _emit(ctx, "\n".join(lines))


@cli.command()
@_source_options
@click.option("--kind", type=click.Choice(["divmod", "modmod", "shifted", "auto"]), default="auto")
@click.option("--base", default=None, help="Base override (decimal; implies asserted mode).")
@click.option("--format", "fmt", type=click.Choice(["text", "latex", "json"]), default="text")
@click.pass_context
def render(ctx, fixture, recurrence, kind, base, fmt):
    """Print the closed-form formula for a representation."""
    payload = _target_payload(fixture, recurrence, kind, base)
    payload["format"] = fmt
    body = _call(ctx, "POST", "/render", payload)
    _emit(ctx, body["formula"])


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False, prog_name="crec")
        return EXIT_OK
    except CliFailure as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.code
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
