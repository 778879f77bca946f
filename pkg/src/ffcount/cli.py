"""Command-line interface for ffcount."""

import json
import sys
import time
import warnings
from typing import Any, Callable, Dict, List, Optional, Sequence

import click
from rich.console import Console

from ffcount import __version__
from ffcount.chars import MultChar, gauss_sum_numeric
from ffcount.config import Config
from ffcount.counting import (
    CountResult,
    StarMethod,
    brute_force_star,
    brute_force_total,
    count_full,
    count_star,
    count_star_charsum,
    count_star_diagonal,
    count_star_gaussvec,
)
from ffcount.errors import (
    BudgetExceededError,
    ConfigError,
    DegenerateCharacterWarning,
    FieldError,
    ParseError,
    PreconditionError,
    ResidualError,
)
from ffcount.gf import FieldCtx, build_field
from ffcount.history import RunHistory
from ffcount.logging import ConsoleLogger, JsonlRunLogger, RunLogger
from ffcount.parser import parse_expr, parse_poly, print_poly
from ffcount.pure import Admissibility, admissible_exponents, check_admissible, pure_gauss_sum

EXIT_USAGE = 1
EXIT_PRECONDITION = 2

FAILURES = (PreconditionError, BudgetExceededError, ResidualError, FieldError)


def field_options(func: Callable) -> Callable:
    """--p, --m and --modulus."""
    func = click.option(
        '--modulus', default=None, help='Monic modulus coefficients "c0,c1,...,cm"'
    )(func)
    func = click.option(
        '--m', 'm', type=int, default=1, show_default=True, help='Extension degree'
    )(func)
    func = click.option('--p', 'p', type=int, required=True, help='Characteristic (prime)')(func)
    return func


def output_options(func: Callable) -> Callable:
    return click.option(
        '--pretty/--json', 'pretty', default=False, help='Colored JSON instead of one compact line'
    )(func)


def _build_field(p: int, m: int, modulus: Optional[str]) -> FieldCtx:
    if modulus is None:
        return build_field(p, m)
    try:
        coeffs = [int(c) for c in modulus.replace(",", " ").split()]
    except ValueError:
        raise FieldError(f"Invalid modulus {modulus!r}; expected integers 'c0,c1,...,cm'")
    return build_field(p, m, coeffs)


def _emit(payload: Dict[str, Any], pretty: bool) -> None:
    text = json.dumps(payload, sort_keys=True)
    if pretty:
        Console().print_json(text)
    else:
        click.echo(text)


def _log(ctx: click.Context, message: str, command: str, level: str, **metadata: Any) -> None:
    loggers: List[RunLogger] = ctx.obj['loggers']
    for logger in loggers:
        logger.log(message, command=command, level=level, **metadata)


def _fail(
    ctx: click.Context,
    command: str,
    error: Exception,
    reason: str,
    exit_code: int,
    elapsed_ms: float,
) -> None:
    console: Console = ctx.obj['console']
    if isinstance(error, ParseError):
        click.echo(error.caret(), err=True)
    else:
        console.print(f"[red]Error: {error}[/red]")
    report: Dict[str, Any] = {"error": str(error), "reason": reason}
    detail = getattr(error, "detail", None)
    if detail:
        report["detail"] = detail
    if isinstance(error, ParseError):
        report["position"] = error.position
    click.echo(json.dumps(report, sort_keys=True), err=True)
    _log(
        ctx,
        str(error),
        command,
        "error",
        field=ctx.obj.get('field'),
        reason=reason,
        elapsed_ms=elapsed_ms,
    )
    sys.exit(exit_code)


def _invoke(
    ctx: click.Context,
    command: str,
    compute: Callable[[], Dict[str, Any]],
    pretty: bool,
) -> None:
    """Run compute, attach elapsed_ms and print; map library errors to exit codes."""
    start = time.perf_counter()
    try:
        payload = compute()
    except ParseError as e:
        _fail(ctx, command, e, "parse_error", EXIT_USAGE, _elapsed(start))
        return
    except ConfigError as e:
        _fail(ctx, command, e, "config_error", EXIT_USAGE, _elapsed(start))
        return
    except FAILURES as e:
        reason = getattr(e, "reason", None) or "field_error"
        _fail(ctx, command, e, reason, EXIT_PRECONDITION, _elapsed(start))
        return

    payload["elapsed_ms"] = _elapsed(start)
    _emit(payload, pretty)
    _log(
        ctx,
        f"{command} finished",
        command,
        "success",
        field=ctx.obj.get('field'),
        method=payload.get("method"),
        count=payload.get("count"),
        elapsed_ms=payload["elapsed_ms"],
    )
    if payload.get("agree") is False:
        ctx.obj['console'].print("[red]Counting paths disagree[/red]")
        click.echo(
            json.dumps({"error": "counting paths disagree", "reason": "oracle_disagreement"}),
            err=True,
        )
        sys.exit(EXIT_PRECONDITION)


def _snap(x: float, tolerance: float) -> float:
    """Round to 9 places; magnitudes below tolerance become 0.0."""
    if abs(x) < tolerance:
        return 0.0
    return round(x, 9)


def _elapsed(start: float) -> float:
    return round((time.perf_counter() - start) * 1000.0, 3)


def _setup_field(ctx: click.Context, p: int, m: int, modulus: Optional[str]) -> FieldCtx:
    field = _build_field(p, m, modulus)
    ctx.obj['field'] = field.description
    return field


def _cross_check(
    ctx: click.Context, result: CountResult, oracle: Callable[[], CountResult]
) -> Dict[str, Any]:
    """Compare a forced closed-form result against an exhaustive count."""
    try:
        expected = oracle().count
    except BudgetExceededError as e:
        return {"status": "skipped", "reason": e.reason}
    if expected == result.count:
        return {"status": "agree", "oracle_count": expected}
    ctx.obj['console'].print(
        f"[bold red]MISMATCH: closed form gave {result.count}, "
        f"exhaustive enumeration gave {expected}[/bold red]"
    )
    return {"status": "mismatch", "oracle_count": expected}


@click.group()
@click.version_option(version=__version__)
@click.option('--verbose', is_flag=True, help='Progress diagnostics on stderr')
@click.pass_context
def main(ctx: click.Context, verbose: bool) -> None:
    """ffcount - root counts of diagonal and full equations over finite fields.

    Results are printed as JSON on stdout; diagnostics go to stderr.
    """
    ctx.ensure_object(dict)
    console = Console(stderr=True)
    ctx.obj['console'] = console
    try:
        config = Config()
    except RuntimeError as e:
        console.print(f"[red]Error: {e}[/red]")
        sys.exit(EXIT_USAGE)
    ctx.obj['config'] = config

    loggers: List[RunLogger] = []
    session = ctx.invoked_subcommand or "ffcount"
    if config.run_log_enabled():
        jsonl = JsonlRunLogger(config.run_log)
        if jsonl.init(session):
            loggers.append(jsonl)
    if verbose:
        console_logger = ConsoleLogger(console)
        console_logger.init(session)
        loggers.append(console_logger)
    ctx.obj['loggers'] = loggers


@main.command()
@field_options
@click.argument('poly')
@click.option('--diagonal-witness', 'witness', help='Diagonal polynomial *-equivalent to POLY')
@click.option(
    '--include-constant-column/--no-include-constant-column',
    default=None,
    help='Compare the constant term column in the *-equivalence check',
)
@click.option('--force', is_flag=True, help='Skip the character-class check and cross-check')
@click.option('--strict-full', is_flag=True, help='Reject POLY unless it is full')
@output_options
@click.pass_context
def count(
    ctx: click.Context,
    p: int,
    m: int,
    modulus: Optional[str],
    poly: str,
    witness: Optional[str],
    include_constant_column: Optional[bool],
    force: bool,
    strict_full: bool,
    pretty: bool,
) -> None:
    """Count all roots of POLY in F_q^n.

    With --diagonal-witness the count comes from the closed form of the
    witness; otherwise every point is enumerated.
    """
    config: Config = ctx.obj['config']

    def compute() -> Dict[str, Any]:
        field = _setup_field(ctx, p, m, modulus)
        cap = config.get_exponent_cap()
        vcap = config.get_variable_cap()
        f = parse_poly(poly, field, exponent_cap=cap, variable_cap=vcap)
        budget = config.get_budget("brute_force")
        workers = config.get_workers()
        _log(ctx, f"parsed {f.s} terms in {f.n_vars} variables", "count", "info")
        if witness:
            g = parse_poly(witness, field, exponent_cap=cap, variable_cap=vcap)
            result = count_full(
                f,
                g,
                force=force,
                require_full=strict_full,
                include_constant_column=include_constant_column,
            )
        else:
            result = brute_force_total(f, budget, workers)
        payload = result.to_dict()
        if force and witness:
            payload["cross_check"] = _cross_check(
                ctx, result, lambda: brute_force_total(f, budget, workers)
            )
        if pretty:
            payload["poly"] = print_poly(f)
        return payload

    _invoke(ctx, "count", compute, pretty)


@main.command('count-star')
@field_options
@click.argument('poly')
@click.option(
    '--method',
    type=click.Choice([m.value for m in StarMethod]),
    default=StarMethod.AUTO.value,
    show_default=True,
    help='Counting path',
)
@click.option(
    '--numeric-fallback',
    is_flag=True,
    help='When the closed form does not apply, use a character-sum path (approximate)',
)
@click.option('--force', is_flag=True, help='Skip the character-class check and cross-check')
@output_options
@click.pass_context
def count_star_command(
    ctx: click.Context,
    p: int,
    m: int,
    modulus: Optional[str],
    poly: str,
    method: str,
    numeric_fallback: bool,
    force: bool,
    pretty: bool,
) -> None:
    """Count roots of POLY with every coordinate nonzero."""
    config: Config = ctx.obj['config']

    def compute() -> Dict[str, Any]:
        field = _setup_field(ctx, p, m, modulus)
        f = parse_poly(
            poly,
            field,
            exponent_cap=config.get_exponent_cap(),
            variable_cap=config.get_variable_cap(),
        )
        star_method = StarMethod(method)
        budget_kind = "brute_force" if star_method is StarMethod.BRUTE else "gaussvec"
        result = count_star(
            f,
            star_method,
            numeric_fallback=numeric_fallback,
            force=force,
            budget=config.get_budget(budget_kind),
            workers=config.get_workers(),
            tolerance=config.get_tolerances().residual,
        )
        payload = result.to_dict()
        payload["approximate"] = result.approximate
        if force:
            payload["cross_check"] = _cross_check(
                ctx,
                result,
                lambda: brute_force_star(
                    f, config.get_budget("brute_force"), config.get_workers()
                ),
            )
        if pretty:
            payload["poly"] = print_poly(f)
        return payload

    _invoke(ctx, "count-star", compute, pretty)


@main.command()
@field_options
@click.option('--d', 'd', type=int, help='Exponent to test')
@click.option('--all', 'all_exponents', is_flag=True, help='List every admissible d | q-1')
@output_options
@click.pass_context
def classify(
    ctx: click.Context,
    p: int,
    m: int,
    modulus: Optional[str],
    d: Optional[int],
    all_exponents: bool,
    pretty: bool,
) -> None:
    """Decide (p, r)-admissibility and print C1, C2."""
    if d is None and not all_exponents:
        raise click.UsageError("Pass --d D or --all")

    def compute() -> Dict[str, Any]:
        field = _setup_field(ctx, p, m, modulus)
        if all_exponents:
            return {
                "q": field.q,
                "admissible": [adm.to_dict() for adm in admissible_exponents(field)],
            }
        assert d is not None
        return {"q": field.q, **check_admissible(field, d).to_dict()}

    _invoke(ctx, "classify", compute, pretty)


@main.command()
@field_options
@click.argument('poly_f')
@click.argument('poly_g')
@click.option(
    '--include-constant-column/--no-include-constant-column',
    default=None,
    help='Append the constant term column (default: on when both constants are nonzero)',
)
@output_options
@click.pass_context
def equiv(
    ctx: click.Context,
    p: int,
    m: int,
    modulus: Optional[str],
    poly_f: str,
    poly_g: str,
    include_constant_column: Optional[bool],
    pretty: bool,
) -> None:
    """Decide whether POLY_F and POLY_G are *-equivalent."""
    from ffcount.zn import star_equivalent

    config: Config = ctx.obj['config']

    def compute() -> Dict[str, Any]:
        field = _setup_field(ctx, p, m, modulus)
        cap = config.get_exponent_cap()
        vcap = config.get_variable_cap()
        expr_f = parse_expr(poly_f, field, cap, vcap)
        expr_g = parse_expr(poly_g, field, cap, vcap)
        n_vars = max(expr_f.n_vars, expr_g.n_vars)
        result = star_equivalent(
            expr_f.to_poly(field, n_vars), expr_g.to_poly(field, n_vars), include_constant_column
        )
        return {"q": field.q, "n": n_vars, **result.to_dict()}

    _invoke(ctx, "equiv", compute, pretty)


@main.command()
@field_options
@click.option('--d', 'd', type=int, required=True, help='Character order, d | q-1')
@click.option('--j', 'j', type=int, default=1, show_default=True, help='Power of eta_d')
@output_options
@click.pass_context
def gauss(
    ctx: click.Context,
    p: int,
    m: int,
    modulus: Optional[str],
    d: int,
    j: int,
    pretty: bool,
) -> None:
    """Numeric Gauss sum G(eta_d^j), with the exact value when d is admissible.

    Components below tolerances.character print as 0; a numeric value more than
    tolerances.sum away from the closed form fails with residual_exceeded.
    """
    tolerances = ctx.obj['config'].get_tolerances()

    def compute() -> Dict[str, Any]:
        field = _setup_field(ctx, p, m, modulus)
        character = MultChar(field, d, j)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", DegenerateCharacterWarning)
            value = gauss_sum_numeric(character)
        degenerate = any(issubclass(w.category, DegenerateCharacterWarning) for w in caught)
        closed: Optional[int] = None
        if d >= 3 and not degenerate:
            adm = check_admissible(field, d)
            if isinstance(adm, Admissibility):
                closed = pure_gauss_sum(adm, j)
        payload: Dict[str, Any] = {
            "q": field.q,
            "d": d,
            "j": j,
            "re": _snap(value.real, tolerances.character),
            "im": _snap(value.imag, tolerances.character),
            "abs": _snap(abs(value), tolerances.character),
            "closed_form": closed,
            "degenerate": degenerate,
        }
        if closed is not None:
            error = abs(value - closed)
            if error > tolerances.sum:
                raise ResidualError(
                    f"Numeric Gauss sum {value:.6g} is {error:.3g} away from "
                    f"the closed form {closed}",
                    value,
                    error,
                )
            payload["closed_form_error"] = float(f"{error:.3g}")
        return payload

    _invoke(ctx, "gauss", compute, pretty)


@main.command()
@field_options
@click.argument('poly')
@click.option('--star/--total', default=True, help='Count N* (default) or N')
@click.option('--diagonal-witness', 'witness', help='Witness for the closed form of N')
@output_options
@click.pass_context
def oracle(
    ctx: click.Context,
    p: int,
    m: int,
    modulus: Optional[str],
    poly: str,
    star: bool,
    witness: Optional[str],
    pretty: bool,
) -> None:
    """Run every applicable counting path on POLY and compare.

    Exits 2 when two paths disagree.
    """
    config: Config = ctx.obj['config']

    def compute() -> Dict[str, Any]:
        field = _setup_field(ctx, p, m, modulus)
        cap = config.get_exponent_cap()
        vcap = config.get_variable_cap()
        f = parse_poly(poly, field, exponent_cap=cap, variable_cap=vcap)
        brute_budget = config.get_budget("brute_force")
        workers = config.get_workers()
        tolerance = config.get_tolerances().residual

        paths: Dict[str, Callable[[], CountResult]] = {}
        if star:
            paths["brute_force"] = lambda: brute_force_star(f, brute_budget, workers)
            paths["closed_form"] = lambda: count_star_diagonal(f)
            paths["charsum"] = lambda: count_star_charsum(f, tolerance)
            paths["gaussvec"] = lambda: count_star_gaussvec(
                f, config.get_budget("gaussvec"), tolerance=tolerance
            )
        else:
            paths["brute_force"] = lambda: brute_force_total(f, brute_budget, workers)
            if witness:
                g = parse_poly(witness, field, exponent_cap=cap, variable_cap=vcap)
                paths["full_theorem"] = lambda: count_full(f, g)

        counts: Dict[str, int] = {}
        skipped: Dict[str, str] = {}
        for name, path in paths.items():
            try:
                counts[name] = path().count
            except FAILURES as e:
                skipped[name] = getattr(e, "reason", None) or "field_error"
            _log(ctx, f"{name}: {counts.get(name, skipped.get(name))}", "oracle", "info")

        return {
            "q": field.q,
            "n": f.n_vars,
            "star": star,
            "counts": counts,
            "skipped": skipped,
            "agree": len(set(counts.values())) <= 1,
        }

    _invoke(ctx, "oracle", compute, pretty)


@main.command()
@click.option('-n', '--limit', type=int, default=20, show_default=True, help='Most recent runs')
@click.option('--command', 'command_name', help='Only runs of this subcommand')
@click.pass_context
def history(ctx: click.Context, limit: int, command_name: Optional[str]) -> None:
    """Show recent runs."""
    try:
        RunHistory(ctx.obj['config']).display(Console(), limit=limit, command=command_name)
    except Exception as e:
        ctx.obj['console'].print(f"[red]Error: {e}[/red]")
        sys.exit(EXIT_USAGE)


@main.group()
def config() -> None:
    """Manage configuration."""
    pass


@config.command('show')
@click.pass_context
def config_show(ctx: click.Context) -> None:
    """Print the effective settings as JSON."""
    cfg: Config = ctx.obj['config']
    payload = cfg.settings.model_dump()
    try:
        payload["budgets"] = {
            "brute_force": cfg.get_budget("brute_force"),
            "gaussvec": cfg.get_budget("gaussvec"),
        }
    except ConfigError as e:
        ctx.obj['console'].print(f"[red]Error: {e}[/red]")
        sys.exit(EXIT_USAGE)
    payload["config_file"] = str(cfg.config_file)
    click.echo(json.dumps(payload, sort_keys=True))


@config.command('set')
@click.argument('key')
@click.argument('value')
@click.pass_context
def config_set(ctx: click.Context, key: str, value: str) -> None:
    """Set KEY (dotted, e.g. budgets.brute_force) to VALUE."""
    cfg: Config = ctx.obj['config']
    try:
        stored = cfg.set_value(key, value)
    except (KeyError, ValueError) as e:
        message = e.args[0] if e.args else str(e)
        ctx.obj['console'].print(f"[red]Error: {message}[/red]")
        sys.exit(EXIT_USAGE)
    click.echo(json.dumps({key: stored}, sort_keys=True))


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point: exit 0 on success, 1 on usage errors, 2 on failed preconditions."""
    try:
        result = main.main(
            args=list(argv) if argv is not None else None,
            prog_name="ffcount",
            standalone_mode=False,
        )
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(run())
