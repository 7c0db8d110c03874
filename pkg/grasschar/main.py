#!/usr/bin/env python3
"""
grasschar command line: compute rings and polynomials, run claim verification,
manage the Groebner-basis cache
"""

import functools
import json
import sys
from enum import Enum
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import click
import structlog
import typer
from pydantic import BaseModel, Field
from rich.console import Console
from rich.table import Table
from tqdm import tqdm

from grasschar import __version__
from grasschar.algebra.quotient import GradedQuotient
from grasschar.core.config import SUPPORTED_T_MAX, SUPPORTED_T_MIN, Settings, get_settings
from grasschar.core.exceptions import CacheMismatchError, GrasscharError
from grasschar.core.logging import configure_logging
from grasschar.rings.builders import GrassmannParams
from grasschar.rings.families import g_poly, wbar
from grasschar.rings.gysin import gysin_dims
from grasschar.services.gb_cache import GbCacheStore
from grasschar.services.ring_registry import RingRegistry
from grasschar.services.verifier_service import VerifierService
from grasschar.verifier.catalog import catalog
from grasschar.verifier.models import ClaimReport, ClaimStatus

logger = structlog.get_logger(__name__)

app = typer.Typer(name="grasschar", add_completion=False, no_args_is_help=True, help=__doc__)
compute_app = typer.Typer(no_args_is_help=True, help="Print polynomials, bases and dimension vectors")
cache_app = typer.Typer(no_args_is_help=True, help="Manage the Groebner-basis cache")
app.add_typer(compute_app, name="compute")
app.add_typer(cache_app, name="cache")


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


class Case(str, Enum):
    minus1 = "minus1"
    minus2 = "minus2"
    minus3 = "minus3"


class RingKind(str, Enum):
    borel = "borel"
    imageJ = "imageJ"
    oriented = "oriented"
    oriented2 = "oriented2"


class CliConfig(BaseModel):
    """Settings after command-line overrides"""

    cache_dir: Path
    use_cache: bool = True
    verify_cache: bool = False
    format: OutputFormat = OutputFormat.text
    t_min: int = 3
    t_max: int = 5
    claims: List[str] = Field(default_factory=list)
    workers: int = 1

    @classmethod
    def resolve(
        cls,
        settings: Settings,
        cache_dir: Optional[Path] = None,
        no_cache: bool = False,
        verify_cache: bool = False,
        **overrides,
    ) -> "CliConfig":
        return cls(
            cache_dir=cache_dir.expanduser() if cache_dir else settings.CACHE_DIR,
            use_cache=settings.CACHE_ENABLED and not no_cache,
            verify_cache=verify_cache or settings.VERIFY_CACHE,
            **{
                "t_min": settings.T_MIN,
                "t_max": settings.T_MAX,
                "workers": settings.VERIFY_WORKERS,
                **{k: v for k, v in overrides.items() if v is not None},
            },
        )

    def registry(self) -> RingRegistry:
        cache = GbCacheStore(self.cache_dir) if self.use_cache else None
        return RingRegistry(cache=cache, verify_cache=self.verify_cache)


# ----- shared options

CacheDirOption = typer.Option(None, "--cache-dir", help="Cache directory (env GRASSCHAR_CACHE_DIR)")
NoCacheOption = typer.Option(False, "--no-cache", help="Recompute every basis")
VerifyCacheOption = typer.Option(False, "--verify-cache", help="Recompute cached bases and byte-compare")
FormatOption = typer.Option(OutputFormat.text, "--format", help="text or json")


def parse_t_range(value: Optional[str], settings: Settings) -> Tuple[int, int]:
    """'4' or '3..5'"""
    if not value:
        return settings.T_MIN, settings.T_MAX
    try:
        if ".." in value:
            low, high = value.split("..", 1)
            t_min, t_max = int(low), int(high)
        else:
            t_min = t_max = int(value)
    except ValueError:
        raise typer.BadParameter(f"expected T or T_MIN..T_MAX, got {value!r}", param_hint="--t")
    if not SUPPORTED_T_MIN <= t_min <= t_max <= SUPPORTED_T_MAX:
        raise typer.BadParameter(
            f"t range must lie in {SUPPORTED_T_MIN}..{SUPPORTED_T_MAX}, got {value}", param_hint="--t"
        )
    return t_min, t_max


def _emit(fmt: OutputFormat, text_lines: Sequence[str], payload: dict) -> None:
    if fmt is OutputFormat.json:
        typer.echo(json.dumps(payload))
    else:
        for line in text_lines:
            typer.echo(line)


def _require(value, flag: str, ring: RingKind):
    if value is None:
        raise typer.BadParameter(f"--ring {ring.value} needs {flag}", param_hint=flag)
    return value


def _select_ring(
    registry: RingRegistry,
    ring: RingKind,
    n: Optional[int],
    k: Optional[int],
    t: Optional[int],
    case: Case,
    gamma: int,
) -> GradedQuotient:
    if ring is RingKind.borel:
        return registry.borel(_require(n, "--n", ring), k if k is not None else 3)
    if ring is RingKind.imageJ:
        return registry.image(_require(n, "--n", ring))
    if ring is RingKind.oriented:
        return registry.oriented(GrassmannParams(_require(t, "--t", ring), case.value, gamma))
    return registry.oriented_k2(_require(t, "--t", ring))


def _guard(func):
    """Map library errors to exit codes: configuration problems 2, mismatches 1"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CacheMismatchError as e:
            logger.error("Cache mismatch", error=str(e))
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(1)
        except GrasscharError as e:
            raise click.UsageError(str(e))

    return wrapper


def _show_version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit(0)


@app.callback()
def main_callback(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Override GRASSCHAR_LOG_LEVEL"),
    version: bool = typer.Option(
        False, "--version", callback=_show_version, is_eager=True, help="Show the version and exit"
    ),
):
    settings = get_settings()
    configure_logging(log_level or settings.LOG_LEVEL, settings.LOG_FORMAT)


# ----- compute


@compute_app.command("g")
@_guard
def compute_g(
    r: int = typer.Option(..., "--r", min=0, help="Degree r"),
    fmt: OutputFormat = FormatOption,
):
    """g(r) in Z2[w2, w3]"""
    p = g_poly(r)
    _emit(fmt, [str(p)], {"object": "g", "r": r, "poly": str(p)})


@compute_app.command("wbar")
@_guard
def compute_wbar(
    r: int = typer.Option(..., "--r", min=0, help="Degree r"),
    k: int = typer.Option(3, "--k", min=1, max=3, help="Number of Stiefel-Whitney generators"),
    fmt: OutputFormat = FormatOption,
):
    """Dual class wbar(r) in Z2[w1, ..., wk]"""
    p = wbar(r, k)
    _emit(fmt, [str(p)], {"object": "wbar", "r": r, "k": k, "poly": str(p)})


@compute_app.command("gb")
@_guard
def compute_gb(
    ring: RingKind = typer.Option(..., "--ring"),
    n: Optional[int] = typer.Option(None, "--n"),
    k: Optional[int] = typer.Option(None, "--k"),
    t: Optional[int] = typer.Option(None, "--t"),
    case: Case = typer.Option(Case.minus1, "--case"),
    gamma: int = typer.Option(0, "--gamma", min=0, max=1),
    fmt: OutputFormat = FormatOption,
    cache_dir: Optional[Path] = CacheDirOption,
    no_cache: bool = NoCacheOption,
    verify_cache: bool = VerifyCacheOption,
):
    """Reduced Groebner basis, one polynomial per line by ascending leading monomial"""
    config = CliConfig.resolve(get_settings(), cache_dir, no_cache, verify_cache)
    quotient = _select_ring(config.registry(), ring, n, k, t, case, gamma)
    lines = [str(p) for p in quotient.gb.elements]
    _emit(fmt, lines, {"object": "gb", "ring": quotient.name, "order": quotient.table.header(), "elements": lines})


@compute_app.command("basis")
@_guard
def compute_basis(
    ring: RingKind = typer.Option(..., "--ring"),
    degree: int = typer.Option(..., "--degree", min=0),
    n: Optional[int] = typer.Option(None, "--n"),
    k: Optional[int] = typer.Option(None, "--k"),
    t: Optional[int] = typer.Option(None, "--t"),
    case: Case = typer.Option(Case.minus1, "--case"),
    gamma: int = typer.Option(0, "--gamma", min=0, max=1),
    fmt: OutputFormat = FormatOption,
    cache_dir: Optional[Path] = CacheDirOption,
    no_cache: bool = NoCacheOption,
    verify_cache: bool = VerifyCacheOption,
):
    """Standard monomials of one degree, descending lex"""
    config = CliConfig.resolve(get_settings(), cache_dir, no_cache, verify_cache)
    quotient = _select_ring(config.registry(), ring, n, k, t, case, gamma)
    lines = [quotient.table.format_key(key) for key in quotient.basis_keys(degree)]
    _emit(fmt, lines, {"object": "basis", "ring": quotient.name, "degree": degree, "monomials": lines})


@compute_app.command("hilbert")
@_guard
def compute_hilbert(
    ring: RingKind = typer.Option(..., "--ring"),
    up_to: int = typer.Option(..., "--up-to", min=0),
    n: Optional[int] = typer.Option(None, "--n"),
    k: Optional[int] = typer.Option(None, "--k"),
    t: Optional[int] = typer.Option(None, "--t"),
    case: Case = typer.Option(Case.minus1, "--case"),
    gamma: int = typer.Option(0, "--gamma", min=0, max=1),
    fmt: OutputFormat = FormatOption,
    cache_dir: Optional[Path] = CacheDirOption,
    no_cache: bool = NoCacheOption,
    verify_cache: bool = VerifyCacheOption,
):
    """Hilbert function for degrees 0..up-to"""
    config = CliConfig.resolve(get_settings(), cache_dir, no_cache, verify_cache)
    quotient = _select_ring(config.registry(), ring, n, k, t, case, gamma)
    values = quotient.hilbert_function(up_to)
    _emit(fmt, [",".join(map(str, values))], {"object": "hilbert", "ring": quotient.name, "values": values})


@compute_app.command("gysin")
@_guard
def compute_gysin(
    n: int = typer.Option(..., "--n", min=1),
    k: int = typer.Option(3, "--k", min=1, max=3),
    up_to: int = typer.Option(..., "--up-to", min=0),
    fmt: OutputFormat = FormatOption,
    cache_dir: Optional[Path] = CacheDirOption,
    no_cache: bool = NoCacheOption,
    verify_cache: bool = VerifyCacheOption,
):
    """Betti numbers of the oriented Grassmannian predicted by the Gysin sequence"""
    config = CliConfig.resolve(get_settings(), cache_dir, no_cache, verify_cache)
    values = gysin_dims(n, k, up_to, ring=config.registry().borel(n, k))
    _emit(fmt, [",".join(map(str, values))], {"object": "gysin", "n": n, "k": k, "values": values})


# ----- verify


def _render_table(reports: List[ClaimReport], console: Console) -> None:
    table = Table(title="Claim verification")
    table.add_column("claim", no_wrap=True)
    table.add_column("params", no_wrap=True)
    table.add_column("status", no_wrap=True)
    table.add_column("witness", overflow="fold")
    table.add_column("ms", justify="right")
    styles = {ClaimStatus.PASS: "green", ClaimStatus.FAIL: "bold red", ClaimStatus.SKIPPED: "yellow"}
    for report in reports:
        first = report.witnesses[0] if report.witnesses else None
        table.add_row(
            report.claim_id,
            report.params.describe(),
            f"[{styles[report.status]}]{report.status.value}[/]",
            f"{first.label}: {first.value}" if first else "",
            str(report.duration_ms),
        )
    console.print(table)


@app.command("verify")
@_guard
def verify(
    t: Optional[str] = typer.Option(None, "--t", help="T or T_MIN..T_MAX"),
    claims: Optional[List[str]] = typer.Option(None, "--claim", help="Claim id, repeatable"),
    fmt: OutputFormat = FormatOption,
    workers: Optional[int] = typer.Option(None, "--workers", min=1),
    cache_dir: Optional[Path] = CacheDirOption,
    no_cache: bool = NoCacheOption,
    verify_cache: bool = VerifyCacheOption,
):
    """Run catalog claims; exit 0 when none failed, 1 otherwise"""
    settings = get_settings()
    t_min, t_max = parse_t_range(t, settings)
    known = catalog()
    for claim_id in claims or []:
        if claim_id not in known:
            raise typer.BadParameter(f"unknown claim {claim_id!r}", param_hint="--claim")
    config = CliConfig.resolve(
        settings, cache_dir, no_cache, verify_cache,
        format=fmt, t_min=t_min, t_max=t_max, claims=claims or [], workers=workers,
    )

    service = VerifierService(settings=settings, registry=config.registry())
    service.initialize()
    tasks = service.plan(config.t_min, config.t_max, config.claims or None)
    bar = tqdm(total=len(tasks), file=sys.stderr, disable=not sys.stderr.isatty(), unit="claim")
    try:
        reports = service.run_all(
            config.t_min,
            config.t_max,
            claim_ids=config.claims or None,
            workers=config.workers,
            progress=lambda report: bar.update(1),
        )
    finally:
        bar.close()
        service.shutdown()

    if config.format is OutputFormat.json:
        for report in reports:
            typer.echo(report.to_json_line())
    else:
        _render_table(reports, Console())

    failed = [r for r in reports if r.status is ClaimStatus.FAIL]
    if failed:
        logger.warning("Claims failed", count=len(failed), claims=sorted({r.claim_id for r in failed}))
        raise typer.Exit(1)


# ----- cache


@cache_app.command("clear")
def cache_clear(cache_dir: Optional[Path] = CacheDirOption):
    """Delete every cached basis"""
    config = CliConfig.resolve(get_settings(), cache_dir)
    removed = GbCacheStore(config.cache_dir).clear()
    typer.echo(f"removed {removed} cached bases from {config.cache_dir}")


@cache_app.command("verify")
def cache_verify(cache_dir: Optional[Path] = CacheDirOption):
    """Recompute every cached basis and byte-compare"""
    config = CliConfig.resolve(get_settings(), cache_dir)
    results = GbCacheStore(config.cache_dir).verify_all()
    for key, error in results.items():
        typer.echo(f"{key}: {'ok' if error is None else error}")
    if any(error is not None for error in results.values()):
        raise typer.Exit(1)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point returning the exit code"""
    try:
        result = app(args=list(argv) if argv is not None else None, prog_name="grasschar", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        typer.echo("aborted", err=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(run())
