"""
Reporting Workflow Module

Human-readable rendering of CommandResult payloads with rich. One renderer
per subcommand; unknown payloads fall back to a pretty-printed dict.
"""

from typing import Any, Callable, Dict

from rich.console import Console
from rich.panel import Panel
from rich.pretty import Pretty
from rich.table import Table

from src.core.types import CommandResult

console = Console()


def _verdict_style(verdict: str) -> str:
    return {"finite": "green", "infinite": "red"}.get(verdict, "yellow")


def _grid(entries) -> str:
    return "\n".join(" ".join(f"{str(x):>4}" for x in row) for row in entries) or "(empty)"


def _flags(payload: Dict[str, Any], out: Console):
    for flag in payload.get("flags", []):
        out.print(f"[yellow][WARN] {flag}[/yellow]")


# ----------------------------------------------------------------------
# Renderers
# ----------------------------------------------------------------------
def _render_verdict(payload: Dict[str, Any], out: Console):
    verdict = payload["verdict"]
    witness = payload["witness"]
    title = f"bv = ({','.join(map(str, payload['bv']))})"
    if payload.get("x") is not None:
        title += f", x = {payload['x']}"
    if payload.get("target"):
        title += f", Levi on {payload['target']}"
    lines = [
        f"Verdict: [bold {_verdict_style(verdict)}]{verdict}[/bold {_verdict_style(verdict)}]",
        f"Witness: {witness['kind']} ({witness['case']})",
    ]
    if "k" in witness:
        lines.append(f"Family parameter k = {witness['k']}")
    if witness["chain"]:
        chain = " -> ".join(f"{step['rule']}:({','.join(map(str, step['blocks']))})" for step in witness["chain"])
        lines.append(f"Chain: {chain}")
    if payload.get("witness_verified") is False:
        lines.append("[red]Witness replay failed[/red]")
    if payload.get("commuting_dimension"):
        lines.append(f"dim C(N_p): {payload['commuting_dimension']}")
    out.print(Panel("\n".join(lines), title=title, border_style=_verdict_style(verdict)))


def _render_orbits(payload: Dict[str, Any], out: Console):
    out.print(
        f"[cyan]{payload['acting']} on {payload['target']} for bv=({','.join(map(str, payload['bv']))}) "
        f"over GF({payload['q']}): [bold]{payload['orbit_count']}[/bold] orbits "
        f"in {payload['target_size']} points[/cyan]"
    )
    table = Table(header_style="bold cyan")
    table.add_column("#", justify="right")
    table.add_column("Representative")
    table.add_column("Size", justify="right")
    for index, orbit in enumerate(payload["orbits"]):
        table.add_row(str(index), _grid(orbit["representative"]["entries"]), str(orbit["size"]))
    out.print(table)
    if "growth" in payload:
        counts = ", ".join(f"q={c['q']}: {c['orbit_count']}" for c in payload["growth"]["counts"])
        out.print(f"Growth: {counts} -> [bold]{payload['growth']['signal']}[/bold]")
    _flags(payload, out)


def _render_normalize(payload: Dict[str, Any], out: Console):
    reduced = payload["reduced"]
    out.print(f"[cyan]lambda={reduced['lambda']}, mu={reduced['mu']} over {reduced['field']}[/cyan]")
    out.print(Panel(payload["render"], title="Reduced diagram", border_style="green" if payload["reduced_ok"] else "red"))
    if payload["moves"]:
        out.print("Moves: " + ", ".join(move["label"] for move in payload["moves"]))
    else:
        out.print("Moves: none (already reduced)")
    for violation in payload["violations"]:
        out.print(f"[red]{violation}[/red]")


def _render_certificate(certificate: Dict[str, Any], out: Console):
    table = Table(title=f"Certificate: {certificate['subject']} over {certificate['field']}", header_style="bold cyan")
    table.add_column("Check")
    table.add_column("Result")
    table.add_column("Message")
    for check in certificate["checks"]:
        mark = "[green]PASS[/green]" if check["passed"] else "[red]FAIL[/red]"
        table.add_row(check["name"], mark, check["message"])
    out.print(table)
    oracle = certificate["details"].get("oracle")
    if isinstance(oracle, str):
        out.print(f"[yellow][WARN] oracle {oracle}[/yellow]")


def _render_family(payload: Dict[str, Any], out: Console):
    spec = payload["spec"]
    out.print(
        f"[cyan]{spec['name']}: bv=({','.join(map(str, spec['bv']))}), {spec['acting']} on {spec['target']}, "
        f"{spec['field']}[/cyan]"
    )
    member = payload.get("member")
    if isinstance(member, dict) and "x" in member:
        out.print(Panel(_grid(member["x"]["entries"]), title="x_t"))
        out.print(Panel(_grid(member["y"]["entries"]), title="y_t"))
    elif member:
        out.print(Panel(_grid(member["entries"]), title="member"))
    if "certificate" in payload:
        _render_certificate(payload["certificate"], out)
    if "report" in payload:
        report = payload["report"]
        out.print(
            f"Sampled {report['sampled']} values of t over GF({report['q']}): "
            f"{report['good']} good, e_n not cyclic at {report['not_cyclic']}, "
            f"x_t not distinguished at {report['not_distinguished']}"
        )
        _flags(report, out)


def _render_distinguished(payload: Dict[str, Any], out: Console):
    style = "green" if payload["distinguished"] else "yellow"
    word = "distinguished" if payload["distinguished"] else "not distinguished"
    out.print(f"[{style}]{word}[/{style}] (routes: {payload['method']})")


def _render_census(payload: Dict[str, Any], out: Console):
    out.print(
        f"[cyan]bv=({','.join(map(str, payload['bv']))}) over GF({payload['q']}): "
        f"[bold]{payload['count']}[/bold] distinguished of {payload['orbit_count']} orbits[/cyan]"
    )
    for rep in payload["representatives"]:
        out.print(Panel(_grid(rep), border_style="green"))
    for entry in payload["discrepant"]:
        out.print(f"[yellow][WARN] orbit {entry['orbit']}: {entry['reason']}[/yellow]")
    _flags(payload, out)


def _render_rep(payload: Dict[str, Any], out: Console):
    if "rep" in payload:
        rep = payload["rep"]
        out.print(f"[cyan]{rep['preset']['kind']} over {rep['field']}, dims {rep['dims']}[/cyan]")
        if "round_trip" in payload:
            out.print("[green]round trip is P-conjugate to the input[/green]")
    else:
        out.print(f"[cyan]{payload['rep_summary']}[/cyan]")
        out.print(Panel(_grid(payload["matrix"]["entries"]), title=f"bv=({','.join(map(str, payload['bv']))})"))


def _render_delta(payload: Dict[str, Any], out: Console):
    out.print(Panel(_grid(payload["dimension_grid"]), title="Dimension grid"))
    out.print("Filtration: " + ", ".join(f"D{tuple(label)}" for label in payload["filtration"]))
    out.print(Panel(_grid(payload["phi_grid"]), title=f"phi(M), {payload['phi_rows']}-row grid"))
    if not payload["phi_first_row_zero"]:
        out.print("[red]phi(M) has a nonzero first row[/red]")


def _render_tables(payload: Dict[str, Any], out: Console):
    for title, key, column in (
        ("Minimal Infinite Block Vectors", "minimal_infinite", "blocks"),
        ("Maximal Finite Families", "finite_families", "template"),
        ("Named Families", "families", "bv"),
    ):
        table = Table(title=title, header_style="bold cyan")
        table.add_column("Name", style="green")
        table.add_column("Enabled")
        table.add_column(column)
        table.add_column("Description")
        for name, info in payload[key].items():
            value = info.get(column)
            table.add_row(name, str(info["enabled"]), str(value) if value is not None else "-", info["description"])
        out.print(table)


_RENDERERS: Dict[str, Callable[[Dict[str, Any], Console], None]] = {
    "classify": _render_verdict,
    "levi-classify": _render_verdict,
    "orbits": _render_orbits,
    "normalize": _render_normalize,
    "family": _render_family,
    "distinguished": _render_distinguished,
    "census": _render_census,
    "rep": _render_rep,
    "delta": _render_delta,
    "tables": _render_tables,
}


def render_result(result: CommandResult, out: Console = None):
    """Print a command result for a human reader."""
    out = out or console
    if not result.ok:
        out.print(f"[red]{result.payload['message']}[/red]")
        return
    renderer = _RENDERERS.get(result.command["name"])
    if renderer is None:
        out.print(Pretty(result.payload))
    else:
        renderer(result.payload, out)
    out.print(f"[dim]{result.command['name']} finished in {result.elapsed:.2f}s[/dim]")
