"""Command-line frontend for parity sumsets."""

from __future__ import annotations

import csv
import functools
import io
import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any

import typer

from .bench import run_bench
from .const import (
    DEFAULT_SEED,
    EXIT_INPUT_ERROR,
    EXIT_VIOLATION,
    LOWER_BOUND_LOG_BASE,
    NAME,
    SCAN_BUDGET,
)
from .errors import InvalidInputError, OracleMismatchError, ParitySumsetsError
from .models import (
    GridSet,
    Instance,
    IntSet,
    OutputFormat,
    RunConfig,
    ScanResult,
    Subcommand,
)
from .pilz import cube_check, cube_trials, lower_bound_display, scan
from .setops import nabla_many, oplus_many, symdiff
from .theorem import (
    certificate_to_json,
    make_certificate,
    normalize,
    read_certificate,
    residue_counts,
    split_n,
    sweep,
    verify_certificate,
    verify_thm1,
    verify_thm2,
    write_certificate,
)

if TYPE_CHECKING:
    from collections.abc import Callable

LOGGER = logging.getLogger(__name__)

app = typer.Typer(name=NAME, no_args_is_help=True, add_completion=False)

FORMAT_OPTION = typer.Option(OutputFormat.TEXT, "--format", help="text or json")
ORACLE_OPTION = typer.Option(
    False, "--oracle", help="Recompute by counting and assert agreement"
)
SEED_OPTION = typer.Option(DEFAULT_SEED, "--seed", help="64-bit seed")


def _handle_errors[**P](func: Callable[P, None]) -> Callable[P, None]:
    """Turn toolkit errors into their exit codes."""

    @functools.wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> None:
        try:
            func(*args, **kwargs)
        except ParitySumsetsError as e:
            LOGGER.debug("%s failed", func.__name__, exc_info=True)
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(e.exit_code) from e
        except OSError as e:
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(EXIT_INPUT_ERROR) from e

    return wrapper


def _parse_ints(literal: str) -> list[int]:
    """Comma-separated integers, order and repeats kept."""
    try:
        return [int(_) for _ in literal.split(",") if _.strip()]
    except ValueError:
        msg = f"Not a comma-separated integer list: {literal!r}"
        raise InvalidInputError(msg) from None


def _instance(n: int, a: str, v: str | None, *, allow_even_v: bool = False) -> Instance:
    return Instance.of(
        n,
        _parse_ints(a),
        None if v is None else list(IntSet.parse(v)),
        allow_even_v=allow_even_v,
    )


def _render(s: IntSet) -> str:
    return str(s) if s else "{}"


def _emit(config: RunConfig, text: str, payload: Any) -> None:
    """Print text or JSON, or write it to the configured path."""
    if config.output_format == OutputFormat.JSON:
        text = json.dumps(payload, indent=2, ensure_ascii=False)
    output = text if text.endswith("\n") else text + "\n"

    if config.output_path is None:
        typer.echo(output, nl=False)
        return
    with config.output_path.open("w", encoding="utf-8") as f:
        f.write(output)


def _set_command(
    subcommand: Subcommand,
    sets: list[str],
    operator: Callable[..., IntSet],
    fmt: OutputFormat,
    *,
    oracle: bool,
) -> None:
    config = RunConfig(subcommand=subcommand, output_format=fmt, oracle=oracle)
    parsed = [IntSet.parse(_) for _ in sets]
    result = operator(parsed)
    if config.oracle:
        expected = operator(parsed, oracle=True)
        if expected != result:
            msg = f"{subcommand}: polynomial path {result} != oracle {expected}"
            raise OracleMismatchError(msg)

    _emit(
        config,
        f"{_render(result)} (size {len(result)})",
        {"set": list(result), "size": len(result)},
    )


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),  # noqa: FBT001
) -> None:
    """Odd-multiplicity sumsets, dilations and GF(2) products."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )


@app.command()
@_handle_errors
def oplus(
    sets: list[str] = typer.Argument(..., help="Sets like 1,2,3"),
    oracle: bool = ORACLE_OPTION,  # noqa: FBT001
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Odd-representation sumset A ⊕ B ⊕ ..."""
    _set_command(Subcommand.OPLUS, sets, oplus_many, fmt, oracle=oracle)


@app.command()
@_handle_errors
def delta(
    sets: list[str] = typer.Argument(..., help="Sets like 1,2,3"),
    oracle: bool = ORACLE_OPTION,  # noqa: FBT001
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Symmetric difference A Δ B Δ ..."""
    _set_command(Subcommand.DELTA, sets, symdiff, fmt, oracle=oracle)


@app.command()
@_handle_errors
def nabla(
    sets: list[str] = typer.Argument(..., help="Sets of positive integers"),
    oracle: bool = ORACLE_OPTION,  # noqa: FBT001
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Odd-representation productset A ∇ B ∇ ..."""
    _set_command(Subcommand.NABLA, sets, nabla_many, fmt, oracle=oracle)


@app.command()
@_handle_errors
def verify(  # noqa: PLR0913
    n: int = typer.Option(..., "-n", help="Number of dilations"),
    a: str = typer.Option(..., "-a", help="a_1,...,a_k"),
    v: str | None = typer.Option(None, "-V", help="Odd-size set V"),
    oracle: bool = ORACLE_OPTION,  # noqa: FBT001
    explore_even: bool = typer.Option(  # noqa: FBT001
        False, "--explore-even", help="Compute even |V| without a claim"
    ),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Check Theorem 1, or Theorem 2 when -V is given."""
    config = RunConfig(subcommand=Subcommand.VERIFY, output_format=fmt, oracle=oracle)
    inst = _instance(n, a, v, allow_even_v=explore_even)
    if inst.is_theorem1:
        report = verify_thm1(inst, oracle=config.oracle)
    else:
        report = verify_thm2(inst, oracle=config.oracle)

    _emit(
        config,
        f"size={report.support_size} n={report.n} {report.status}",
        report.to_dict(),
    )
    if report.claimed and not report.passed:
        raise typer.Exit(EXIT_VIOLATION)


@app.command()
@_handle_errors
def certify(
    n: int = typer.Option(..., "-n", help="Number of dilations"),
    a: str = typer.Option(..., "-a", help="a_1,...,a_k"),
    v: str | None = typer.Option(None, "-V", help="Odd-size set V"),
    out: Path | None = typer.Option(None, "--out", help="Certificate file"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Build a certificate, write it, then audit it."""
    config = RunConfig(subcommand=Subcommand.CERTIFY, output_format=fmt)
    inst = _instance(n, a, v)
    cert = make_certificate(inst)

    if out is None:
        typer.echo(certificate_to_json(cert), nl=False)
        audited = cert
    else:
        write_certificate(out, cert)
        audited = read_certificate(out)
    audit = verify_certificate(inst, audited)

    status = "audit OK" if audit else f"audit FAILED: {audit.reason}"
    _emit(
        config,
        f"alpha={cert.alpha} t={cert.t} classes={len(cert.residues)}"
        f" total={cert.total} {status}",
        {"alpha": cert.alpha, "t": cert.t, "total": cert.total, "audit": audit.ok},
    )
    if not audit:
        raise typer.Exit(EXIT_VIOLATION)


@app.command("residue-counts")
@_handle_errors
def residue_counts_command(
    n: int = typer.Option(..., "-n", help="Number of dilations"),
    a: str = typer.Option(..., "-a", help="a_1,...,a_k"),
    v: str | None = typer.Option(None, "-V", help="Odd-size set V"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Residue distribution of the expansion terms, after normalization."""
    config = RunConfig(subcommand=Subcommand.RESIDUE_COUNTS, output_format=fmt)
    normalized, g = normalize(_instance(n, a, v))
    counts = residue_counts(normalized)
    _, t = split_n(n)
    expected = len(normalized.v) * t ** (normalized.k - 1)
    constant = all(_ == expected for _ in counts)

    _emit(
        config,
        f"g={g} t={t} F={','.join(str(_) for _ in counts)}"
        f" expected={expected} {'CONSTANT' if constant else 'NOT CONSTANT'}",
        {"g": g, "t": t, "F": list(counts), "expected": expected, "constant": constant},
    )
    if not constant:
        raise typer.Exit(EXIT_VIOLATION)


def _scan_csv(result: ScanResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "set", "delta_size", "pass"])
    writer.writerows(_.to_row() for _ in result.records)
    return buffer.getvalue()


@app.command("pilz-scan")
@_handle_errors
def pilz_scan(  # noqa: PLR0913
    n: int = typer.Option(..., "-n", help="Number of dilations"),
    universe_max: int = typer.Option(..., "-u", help="Universe [1, u]"),
    max_size: int = typer.Option(..., "-s", help="Largest |A|"),
    out: Path | None = typer.Option(None, "--out", help="CSV file for records"),
    budget: int = typer.Option(SCAN_BUDGET, "--budget", help="Subset budget"),
    start: int = typer.Option(0, "--start", help="Resume cursor"),
    limit: int | None = typer.Option(None, "--limit", help="Subsets to check"),
    workers: int = typer.Option(1, "--workers", help="Worker processes"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", help="csv or json"),
) -> None:
    """Exhaustive Pilz-conjecture scan over small sets A."""
    config = RunConfig(
        subcommand=Subcommand.PILZ_SCAN, output_format=fmt, output_path=out
    )
    result = scan(
        n,
        universe_max,
        max_size,
        budget=budget,
        start=start,
        limit=limit,
        workers=workers,
    )
    summary = result.summary.to_dict()
    if n >= 2:  # noqa: PLR2004
        summary["lower_bound"] = round(lower_bound_display(n), 6)
        summary["lower_bound_log"] = LOWER_BOUND_LOG_BASE

    if config.output_format == OutputFormat.JSON:
        payload = {
            "records": [
                {"set": str(_.a), "delta_size": _.delta_size, "pass": _.passed}
                for _ in result.records
            ],
            "summary": summary,
        }
        typer.echo(json.dumps(payload, indent=2))
    else:
        records = _scan_csv(result)
        if out is None:
            typer.echo(records, nl=False)
        else:
            with out.open("w", encoding="utf-8", newline="") as f:
                f.write(records)
        typer.echo(json.dumps(summary, indent=2))

    if result.summary.violations:
        raise typer.Exit(EXIT_VIOLATION)


@app.command("cube-check")
@_handle_errors
def cube_check_command(  # noqa: PLR0913
    r: int = typer.Option(..., "-r", help="Cube dimension"),
    grid: str | None = typer.Option(None, "--set", help="Grid set like (0,1),(1,1)"),
    trials: int = typer.Option(1000, "--trials", help="Random sets to draw"),
    coord_max: int = typer.Option(8, "--coord-max", help="Coordinates in [0, c)"),
    seed: int = SEED_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Check |{0,1}^r ⊕ A| >= 2^r for one A or for seeded random A."""
    config = RunConfig(subcommand=Subcommand.CUBE_CHECK, output_format=fmt, seed=seed)
    if grid is not None:
        reports = [cube_check(r, GridSet.parse(grid, r))]
    else:
        reports = cube_trials(r, trials, coord_max=coord_max, seed=config.seed)

    failures = sum(1 for _ in reports if not _.passed)
    min_size = min((_.size for _ in reports), default=None)
    _emit(
        config,
        f"r={r} trials={len(reports)} min_size={min_size} bound={1 << r}"
        f" failures={failures} {'PASS' if not failures else 'FAIL'}",
        {"r": r, "trials": len(reports), "min_size": min_size, "failures": failures},
    )
    if failures:
        raise typer.Exit(EXIT_VIOLATION)


@app.command()
@_handle_errors
def bench(
    degree: int = typer.Option(..., "-d", help="Degree of both factors"),
    repetitions: int = typer.Option(3, "-r", help="Timed repetitions"),
    seed: int = SEED_OPTION,
    check: bool = typer.Option(  # noqa: FBT001
        False, "--check", help="Cross-check against the sparse path"
    ),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Time the dense GF(2) multiply."""
    config = RunConfig(subcommand=Subcommand.BENCH, output_format=fmt, seed=seed)
    report = run_bench(degree, repetitions, seed=config.seed, check=check)
    _emit(
        config,
        f"degree={report.degree} reps={report.repetitions}"
        f" best={report.best_seconds:.6f}s mean={report.mean_seconds:.6f}s"
        f" throughput={report.bits_per_second:.3e} bits/s"
        f" terms={report.product_terms}"
        + (" check OK" if report.checked else ""),
        {
            "degree": report.degree,
            "repetitions": report.repetitions,
            "best_seconds": report.best_seconds,
            "mean_seconds": report.mean_seconds,
            "bits_per_second": report.bits_per_second,
            "terms": report.product_terms,
            "checked": report.checked,
        },
    )


@app.command("sweep")
@_handle_errors
def sweep_command(
    n_max: int = typer.Option(10, "--n-max", help="Largest n"),
    k_max: int = typer.Option(3, "--k-max", help="Largest k"),
    a_max: int = typer.Option(8, "--a-max", help="Largest a_i"),
    oracle: bool = typer.Option(  # noqa: FBT001
        True, "--oracle/--no-oracle", help="Compare with the counting oracle"
    ),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Exhaustive Theorem 1 sweep."""
    config = RunConfig(subcommand=Subcommand.SWEEP, output_format=fmt, oracle=oracle)
    summary = sweep(n_max, k_max, a_max, oracle=config.oracle)
    _emit(
        config,
        f"checked={summary.checked} failures={len(summary.failures)}"
        f" mismatches={len(summary.mismatches)}"
        f" {'PASS' if summary.passed else 'FAIL'}",
        summary.to_dict(),
    )
    if not summary.passed:
        raise typer.Exit(EXIT_VIOLATION)


if __name__ == "__main__":
    app()
