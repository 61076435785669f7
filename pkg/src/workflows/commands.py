"""
Command Workflows

One function per CLI subcommand. Each takes plain option values, calls the
library and returns a CommandResult whose payload is JSON-ready; the
rich rendering lives in src/workflows/reporting.py. Domain errors are not
caught here; run_command turns them into an error result.
"""

import random
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

from rich.console import Console

from config.algebra_params import DEFAULT_SEED
from config.oracle_params import DEFAULT_PRIMES
from src.algebra.field import FieldTag, gf
from src.classifier import (
    classify_bounded,
    classify_levi,
    classify_P_on_Np,
    commuting_dichotomy,
    verify_witness,
)
from src.classifier.tables import get_all_finite_families, get_all_minimal_infinite_cases
from src.core.types import STATUS_ERROR, CommandResult
from src.exporter.serialization import (
    diagram_to_json,
    matrix_from_json,
    matrix_to_json,
    pair_from_json,
    pair_to_json,
    rep_from_json,
    rep_to_json,
    write_json,
)
from src.families import (
    certify_family,
    commuting_pair_report,
    distinguished_census,
    family_spec,
    is_distinguished,
)
from src.families.builders import build_family_member, entries_in_01t
from src.families.registry import get_all_families
from src.oracle import enumerate_orbits, growth_profile
from src.oracle.orbits import INFINITE_SIGNAL, FINITE_SIGNAL
from src.parabolic.shape import BlockVector, ParabolicShape, dims_of
from src.quiver.covering import delta_filtration, dimension_grid, phi_quotient
from src.quiver.homs import is_isomorphic
from src.quiver.translation import matrix_to_rep, rep_to_matrix
from src.validation.input_validator import validate_input
from src.validation.errors import ParorbitError
from src.young import check_reduced, diagram_from_pair, random_stable_pair, reduce

err_console = Console(stderr=True)


def _shape(bv: str) -> ParabolicShape:
    return dims_of(BlockVector.parse(bv))


def _partition(text: str) -> tuple:
    return tuple(int(part) for part in text.split(",") if part.strip()) if text else ()


def run_command(name: str, options: Dict[str, Any], action: Callable[[], Dict[str, Any]]) -> CommandResult:
    """
    Run a command body and wrap its payload.

    ParorbitError and ValueError become an error result carrying the
    message verbatim; anything else propagates.
    """
    command = {"name": name, **{k: v for k, v in options.items() if v is not None}}
    start = time.perf_counter()
    try:
        payload = action()
        status = "ok"
    except ParorbitError as err:
        payload = {"error": type(err).__name__, "message": str(err), "detail": err.detail}
        status = STATUS_ERROR
    except ValueError as err:
        payload = {"error": "ValueError", "message": str(err), "detail": {}}
        status = STATUS_ERROR
    return CommandResult(command, status, payload, time.perf_counter() - start)


# ----------------------------------------------------------------------
# Classifier
# ----------------------------------------------------------------------
def classify_payload(bv: str, x: int = None) -> Dict[str, Any]:
    blocks = BlockVector.parse(bv)
    verdict = classify_P_on_Np(blocks) if x is None else classify_bounded(blocks, x)
    payload = {"bv": list(blocks.blocks), "x": x, **verdict.to_dict()}
    payload["witness_verified"] = verify_witness(blocks, verdict) if x is None else None
    payload["commuting_dimension"] = commuting_dichotomy(blocks)
    return payload


def levi_payload(bv: str, target: str) -> Dict[str, Any]:
    blocks = BlockVector.parse(bv)
    return {"bv": list(blocks.blocks), "target": target, **classify_levi(blocks, target).to_dict()}


def tables_payload() -> Dict[str, Any]:
    return {
        "minimal_infinite": get_all_minimal_infinite_cases(),
        "finite_families": get_all_finite_families(),
        "families": get_all_families(),
    }


# ----------------------------------------------------------------------
# Oracle
# ----------------------------------------------------------------------
def orbits_payload(
    bv: str,
    q: int,
    target: str = "cone",
    acting: str = "P",
    x: int = None,
    budget: int = None,
    growth: bool = False,
    reps_out: str = None,
    pool=None,
    console: Optional[Console] = None,
) -> Dict[str, Any]:
    shape = _shape(bv)
    table = enumerate_orbits(shape, q, target, acting, x=x, budget=budget, pool=pool, console=console)
    payload = table.to_dict()
    for orbit, rep in zip(payload["orbits"], table.representatives):
        orbit["representative"] = matrix_to_json(rep)
    payload["flags"] = table.validate()
    if growth:
        profile = growth_profile(shape, target, acting, DEFAULT_PRIMES, x=x, budget=budget, console=console)
        payload["growth"] = profile.to_dict()
        payload["flags"].extend(profile.flags)
        payload["flags"].extend(_growth_disagreement(shape, target, acting, x, profile.signal))
    if reps_out:
        write_json([matrix_to_json(r) for r in table.representatives], reps_out)
        payload["reps_out"] = reps_out
    return payload


def _growth_disagreement(shape, target, acting, x, signal) -> List[str]:
    """Heuristic growth signal against the classifier; returned as flags only."""
    if acting == "Levi":
        verdict = classify_levi(shape.bv, "nilradical" if target == "nilradical" else "nilpotent_cone")
    elif x is not None:
        verdict = classify_bounded(shape.bv, x)
    else:
        verdict = classify_P_on_Np(shape.bv)
    if verdict.is_finite and signal != FINITE_SIGNAL:
        return [f"classifier says finite but orbit counts give '{signal}'"]
    if verdict.is_infinite and signal != INFINITE_SIGNAL:
        return [f"classifier says infinite but orbit counts give '{signal}'"]
    return []


# ----------------------------------------------------------------------
# Young diagrams
# ----------------------------------------------------------------------
def normalize_payload(
    input_path: str = None,
    pair_data: Dict[str, Any] = None,
    lam: str = None,
    mu: str = None,
    field: str = "Q",
    seed: int = None,
) -> Dict[str, Any]:
    if pair_data is not None:
        validate_input(pair_data, "pair", out=err_console)
        u, f = pair_from_json(pair_data)
    elif lam:
        rng = random.Random(DEFAULT_SEED if seed is None else seed)
        u, f = random_stable_pair(_partition(lam), _partition(mu), FieldTag.parse(field), rng)
    else:
        raise ValueError("normalize needs --input or --lam/--mu")
    diagram = diagram_from_pair(u, f.rows, f)
    reduced, moves = reduce(diagram)
    ok, violations = check_reduced(reduced)
    return {
        "input": input_path,
        "pair": pair_to_json(u, f),
        "diagram": diagram_to_json(diagram),
        "reduced": diagram_to_json(reduced),
        "moves": [move.to_dict() for move in moves],
        "reduced_ok": ok,
        "violations": violations,
        "render": "\n".join(reduced.render()),
    }


# ----------------------------------------------------------------------
# Families
# ----------------------------------------------------------------------
def family_payload(
    name: str,
    t: int = None,
    q: int = None,
    k: int = None,
    n: int = None,
    certify: bool = False,
    sample: Sequence[int] = None,
    report: bool = False,
    samples: int = 100,
    seed: int = None,
    budget: int = None,
    pool=None,
    console: Optional[Console] = None,
) -> Dict[str, Any]:
    spec = family_spec(name, field=gf(q) if q else None, k=k, n=n)
    payload: Dict[str, Any] = {"spec": spec.to_dict()}
    if t is not None:
        member = build_family_member(spec, t)
        if isinstance(member, tuple):
            payload["member"] = {"x": matrix_to_json(member[0]), "y": matrix_to_json(member[1])}
        else:
            payload["member"] = matrix_to_json(member)
            payload["entries_in_01t"] = entries_in_01t(member, t)
    if certify:
        certificate = certify_family(spec, sample=sample, seed=seed, budget=budget, pool=pool, console=console)
        payload["certificate"] = certificate.to_dict()
    if report:
        if name != "commuting_pair":
            raise ValueError("--report applies to commuting_pair only")
        pair_report = commuting_pair_report(
            spec.params["n"], spec.params["k"], q=spec.field.order, samples=samples, seed=seed, console=console
        )
        payload["report"] = pair_report.to_dict()
        payload["report"]["flags"] = pair_report.validate()
    return payload


def distinguished_payload(bv: str, matrix_data: Dict[str, Any], method: str = "auto") -> Dict[str, Any]:
    validate_input(matrix_data, "matrix", out=err_console)
    shape = _shape(bv)
    x = matrix_from_json(matrix_data)
    verdict, tag = is_distinguished(shape, x, method)
    return {"bv": list(shape.bv.blocks), "matrix": matrix_to_json(x), "distinguished": verdict, "method": tag}


def census_payload(bv: str, q: int, budget: int = None, pool=None, console: Optional[Console] = None) -> Dict[str, Any]:
    return distinguished_census(_shape(bv), q, budget=budget, pool=pool, console=console).to_dict()


# ----------------------------------------------------------------------
# Representations
# ----------------------------------------------------------------------
def _unwrap_rep(data: Dict[str, Any]) -> Dict[str, Any]:
    """Accept a bare rep document or the JSON envelope of `rep --from-matrix`."""
    if "payload" in data and isinstance(data["payload"], dict) and "rep" in data["payload"]:
        return data["payload"]["rep"]
    return data


def rep_payload(
    bv: str = None,
    from_matrix: Dict[str, Any] = None,
    to_matrix: Dict[str, Any] = None,
    x: int = None,
    check: bool = False,
    seed: int = None,
) -> Dict[str, Any]:
    if from_matrix is not None:
        if not bv:
            raise ValueError("--from-matrix needs --bv")
        validate_input(from_matrix, "matrix", out=err_console)
        shape = _shape(bv)
        m = matrix_from_json(from_matrix)
        r = matrix_to_rep(shape, m, x)
        payload = {"bv": list(shape.bv.blocks), "rep": rep_to_json(r)}
        if check:
            back_shape, back = rep_to_matrix(r)
            payload["round_trip"] = back_shape.bv == shape.bv and is_isomorphic(matrix_to_rep(shape, back, x), r, seed)
            if not payload["round_trip"]:
                raise ValueError("round trip produced a matrix that is not P-conjugate to the input")
        return payload
    if to_matrix is not None:
        data = _unwrap_rep(to_matrix)
        validate_input(data, "rep", out=err_console)
        r = rep_from_json(data)
        shape, m = rep_to_matrix(r)
        return {"bv": list(shape.bv.blocks), "matrix": matrix_to_json(m), "rep_summary": r.describe()}
    raise ValueError("rep needs --from-matrix or --to-matrix")


def delta_payload(rep_data: Dict[str, Any]) -> Dict[str, Any]:
    data = _unwrap_rep(rep_data)
    validate_input(data, "rep", out=err_console)
    r = rep_from_json(data)
    labels = delta_filtration(r)
    phi = phi_quotient(r)
    return {
        "dimension_grid": dimension_grid(r),
        "filtration": [list(label) for label in labels],
        "phi": rep_to_json(phi),
        "phi_grid": dimension_grid(phi),
        "phi_rows": phi.preset.n_rows,
        "phi_first_row_zero": phi.preset.n_rows < r.preset.n_rows or not any(dimension_grid(phi)[0]),
    }
