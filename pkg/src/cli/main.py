"""
parorbit Command Line

Usage:
    python main.py classify --bv 2,2,2
    python main.py orbits --bv 1,1 --q 2 --target cone --acting P --json
    python main.py rep --from-matrix f.json --bv 1,2 --json | python main.py rep --to-matrix -

Every subcommand prints a rich report, or with --json the CommandResult
as sorted JSON on stdout (progress bars go to stderr). Exit codes: 0 ok,
1 domain error (message printed verbatim), 2 usage error.
"""

import json
import multiprocessing
from contextlib import contextmanager
from typing import Any, Callable, Dict, Optional, Sequence

import click
from rich.console import Console

from config.oracle_params import NUM_WORKERS, USE_MULTIPROCESSING
from src.core.types import CommandResult
from src.exporter.serialization import dumps
from src.families.builders import FAMILY_NAMES
from src.families.distinguished import METHODS
from src.oracle import ACTING_GROUPS, TARGETS
from src.classifier.levi import LEVI_TARGETS
from src.workflows import commands
from src.workflows.reporting import render_result

err_console = Console(stderr=True)


# ----------------------------------------------------------------------
# Shared plumbing
# ----------------------------------------------------------------------
def json_option(f):
    return click.option("--json", "as_json", is_flag=True, help="Emit the CommandResult as JSON")(f)


def seed_option(f):
    return click.option("--seed", type=int, default=None, help="Seed for any random sampling")(f)


def budget_option(f):
    return click.option("--budget", type=int, default=None, help="Cap on enumerated points")(f)


def threads_option(f):
    return click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker processes for the oracle")(f)


@contextmanager
def worker_pool(threads: Optional[int]):
    """A multiprocessing.Pool when --threads > 1 (or the oracle config asks for one)."""
    pool = None
    if threads is not None and threads > 1:
        pool = multiprocessing.Pool(processes=threads)
    elif threads is None and USE_MULTIPROCESSING:
        pool = multiprocessing.Pool(processes=NUM_WORKERS)
    try:
        yield pool
    finally:
        if pool is not None:
            pool.close()
            pool.join()


def _progress_console(as_json: bool) -> Optional[Console]:
    return None if as_json else err_console


def _finish(ctx: click.Context, result: CommandResult, as_json: bool):
    ctx.ensure_object(dict)["result"] = result
    if as_json:
        click.echo(dumps(result.to_dict()))
        if not result.ok:
            err_console.print(f"[red]{result.payload['message']}[/red]")
    else:
        render_result(result)
    if not result.ok:
        ctx.exit(result.exit_code)


def _execute(ctx: click.Context, name: str, options: Dict[str, Any], action: Callable[[], Dict[str, Any]], as_json: bool):
    _finish(ctx, commands.run_command(name, options, action), as_json)


def _load(handle) -> Any:
    try:
        return json.load(handle)
    except json.JSONDecodeError as err:
        raise click.BadParameter(f"{handle.name} is not valid JSON: {err}")


def _int_list(text: Optional[str]) -> Optional[Sequence[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got '{text}'")


# ----------------------------------------------------------------------
# Command group
# ----------------------------------------------------------------------
@click.group("parorbit", help="Parabolic nilpotent orbits: classification, normal forms, families and a finite-field oracle")
def cli():
    pass


@cli.command("classify", help="Finiteness of P on N_p (or on N_p^(x) with --x)")
@click.option("--bv", required=True, help="Block vector, e.g. 2,2,2")
@click.option("--x", "x", type=click.IntRange(min=1), default=None, help="Nilpotency bound")
@json_option
@click.pass_context
def classify_command(ctx, bv, x, as_json):
    _execute(ctx, "classify", {"bv": bv, "x": x}, lambda: commands.classify_payload(bv, x), as_json)


@cli.command("levi-classify", help="Finiteness of the Levi action on n_p or N_p")
@click.option("--bv", required=True)
@click.option("--target", type=click.Choice(LEVI_TARGETS), default="nilradical", show_default=True)
@json_option
@click.pass_context
def levi_classify_command(ctx, bv, target, as_json):
    _execute(ctx, "levi-classify", {"bv": bv, "target": target}, lambda: commands.levi_payload(bv, target), as_json)


@cli.command("tables", help="Print the classifier and family registries")
@json_option
@click.pass_context
def tables_command(ctx, as_json):
    _execute(ctx, "tables", {}, commands.tables_payload, as_json)


@cli.command("orbits", help="Enumerate orbits over GF(q)")
@click.option("--bv", required=True)
@click.option("--q", type=int, required=True, help="Prime field order")
@click.option("--target", type=click.Choice(TARGETS), default="cone", show_default=True)
@click.option("--acting", type=click.Choice(ACTING_GROUPS), default="P", show_default=True)
@click.option("--x", "x", type=click.IntRange(min=1), default=None)
@click.option("--reps-out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write representatives here")
@click.option("--growth", is_flag=True, help="Also compare orbit counts over the default primes")
@budget_option
@threads_option
@json_option
@click.pass_context
def orbits_command(ctx, bv, q, target, acting, x, reps_out, growth, budget, threads, as_json):
    options = {"bv": bv, "q": q, "target": target, "acting": acting, "x": x, "reps_out": reps_out,
               "growth": growth, "budget": budget}
    with worker_pool(threads) as pool:
        _execute(
            ctx,
            "orbits",
            options,
            lambda: commands.orbits_payload(
                bv, q, target, acting, x=x, budget=budget, growth=growth, reps_out=reps_out,
                pool=pool, console=_progress_console(as_json),
            ),
            as_json,
        )


@cli.command("normalize", help="Reduce the labeled Young diagram of an f-stable pair")
@click.option("--input", "input_file", type=click.File("r"), default=None, help="Pair JSON ('-' for stdin)")
@click.option("--random", "use_random", is_flag=True, help="Draw a random pair of Jordan types --lam/--mu")
@click.option("--lam", default=None, help="Jordan type of f, e.g. 3,2")
@click.option("--mu", default="", help="Jordan type of f on U, e.g. 2,1")
@click.option("--field", default="Q", show_default=True, help="Q or GF(q)")
@seed_option
@json_option
@click.pass_context
def normalize_command(ctx, input_file, use_random, lam, mu, field, seed, as_json):
    if (input_file is None) == (not use_random):
        raise click.UsageError("give exactly one of --input or --random")
    if use_random and not lam:
        raise click.UsageError("--random needs --lam")
    pair_data = _load(input_file) if input_file is not None else None
    name = input_file.name if input_file is not None else None
    options = {"input": name, "lam": lam, "mu": mu if use_random else None,
               "field": field if use_random else None, "seed": seed}
    _execute(
        ctx,
        "normalize",
        options,
        lambda: commands.normalize_payload(name, pair_data, lam, mu, field, seed),
        as_json,
    )


@cli.command("family", help="Build, certify or report on a named family")
@click.option("--name", type=click.Choice(FAMILY_NAMES), required=True)
@click.option("--t", "t", type=int, default=None, help="Parameter value of the member to print")
@click.option("--q", type=int, default=None, help="Build over GF(q) instead of the registry field")
@click.option("--k", type=int, default=None, help="k for ext_kk and commuting_pair")
@click.option("--n", type=int, default=None, help="n for ext_kk and commuting_pair")
@click.option("--certify", is_flag=True, help="Certify the family on a sample of t")
@click.option("--sample", default=None, help="t values to certify, e.g. 2,3,4")
@click.option("--report", is_flag=True, help="Sampled cyclicity/distinguishedness report (commuting_pair)")
@click.option("--samples", type=click.IntRange(min=1), default=100, show_default=True)
@seed_option
@budget_option
@threads_option
@json_option
@click.pass_context
def family_command(ctx, name, t, q, k, n, certify, sample, report, samples, seed, budget, threads, as_json):
    values = _int_list(sample)
    options = {"family": name, "t": t, "q": q, "k": k, "n": n, "certify": certify, "sample": values,
               "report": report, "samples": samples if report else None, "seed": seed, "budget": budget}
    with worker_pool(threads) as pool:
        _execute(
            ctx,
            "family",
            options,
            lambda: commands.family_payload(
                name, t=t, q=q, k=k, n=n, certify=certify, sample=values, report=report, samples=samples,
                seed=seed, budget=budget, pool=pool, console=_progress_console(as_json),
            ),
            as_json,
        )


@cli.command("distinguished", help="Decide whether a matrix of N_p is distinguished")
@click.option("--bv", required=True)
@click.option("--matrix", "matrix_file", type=click.File("r"), required=True, help="Matrix literal JSON ('-' for stdin)")
@click.option("--method", type=click.Choice(METHODS), default="auto", show_default=True)
@json_option
@click.pass_context
def distinguished_command(ctx, bv, matrix_file, method, as_json):
    data = _load(matrix_file)
    _execute(
        ctx,
        "distinguished",
        {"bv": bv, "matrix": matrix_file.name, "method": method},
        lambda: commands.distinguished_payload(bv, data, method),
        as_json,
    )


@cli.command("census", help="Count distinguished P(F_q)-orbits in N_p")
@click.option("--bv", required=True)
@click.option("--q", type=int, required=True)
@budget_option
@threads_option
@json_option
@click.pass_context
def census_command(ctx, bv, q, budget, threads, as_json):
    with worker_pool(threads) as pool:
        _execute(
            ctx,
            "census",
            {"bv": bv, "q": q, "budget": budget},
            lambda: commands.census_payload(bv, q, budget=budget, pool=pool, console=_progress_console(as_json)),
            as_json,
        )


@cli.command("rep", help="Translate between matrices of N_p and Q_p representations")
@click.option("--from-matrix", "from_matrix", type=click.File("r"), default=None, help="Matrix literal JSON")
@click.option("--to-matrix", "to_matrix", type=click.File("r"), default=None, help="Rep JSON or a rep --json result ('-' for stdin)")
@click.option("--bv", default=None, help="Block vector of the input matrix")
@click.option("--x", "x", type=click.IntRange(min=1), default=None)
@click.option("--assert", "check", is_flag=True, help="Fail unless the round trip is P-conjugate to the input")
@seed_option
@json_option
@click.pass_context
def rep_command(ctx, from_matrix, to_matrix, bv, x, check, seed, as_json):
    if (from_matrix is None) == (to_matrix is None):
        raise click.UsageError("give exactly one of --from-matrix or --to-matrix")
    source = from_matrix or to_matrix
    data = _load(source)
    options = {"from_matrix": from_matrix.name if from_matrix else None,
               "to_matrix": to_matrix.name if to_matrix else None,
               "bv": bv, "x": x, "assert": check or None, "seed": seed}
    if from_matrix is not None:
        action = lambda: commands.rep_payload(bv=bv, from_matrix=data, x=x, check=check, seed=seed)
    else:
        action = lambda: commands.rep_payload(to_matrix=data)
    _execute(ctx, "rep", options, action, as_json)


@cli.command("delta", help="Delta-filtration and phi of a covering representation")
@click.option("--rep", "rep_file", type=click.File("r"), required=True, help="Covering rep JSON ('-' for stdin)")
@json_option
@click.pass_context
def delta_command(ctx, rep_file, as_json):
    data = _load(rep_file)
    _execute(ctx, "delta", {"rep": rep_file.name}, lambda: commands.delta_payload(data), as_json)


def run(argv: Sequence[str]) -> CommandResult:
    """
    Run one parorbit invocation in-process and return its CommandResult.

    Raises:
        click.UsageError: for bad flags
    """
    state: Dict[str, Any] = {}
    cli.main(args=list(argv), prog_name="parorbit", standalone_mode=False, obj=state)
    return state["result"]


if __name__ == "__main__":
    cli(prog_name="parorbit")
