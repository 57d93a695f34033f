"""
Command-line interface for newt.

Reads ideal files, runs the Newton algorithm and prints polygons, trees,
processes and invariants as text, JSON or DOT. Exit codes: 2 when an
irrational root is needed, 3 on input errors, 4 when an internal
cross-check fails or the arithmetic layer raises.
"""

import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
from pydantic import ValidationError

from .algebra import parse_poly
from .analyzer import AnalysisResult, IdealAnalyzer
from .closure import format_factorization, same_integral_closure, zariski_factorization
from .geometry import diagram, diagram_report, faces, height, initial_ideal
from .interfaces import (
    CrossCheckError,
    GroundFieldInsufficientError,
    InputError,
    PrincipalIdealError,
    StorageError,
)
from .invariants import (
    degree_function,
    hs_multiplicity,
    hs_via_areas,
    invariants_report,
    mult_m,
    valuation_Nv,
)
from .models import InvariantsReport, RunConfig, format_maps
from .oracle import RandomSource, e_oracle, mult_oracle
from .process import merge_processes
from .storage import FileSystemReportStorage, load_ideal, read_text
from .tree import (
    NewtonTree,
    check_edge_relation,
    check_N_decorations,
    generic_curve_tree,
    to_dot,
)

# Configure logging
logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

EXIT_FIELD = 2
EXIT_INPUT = 3
EXIT_INTERNAL = 4


def _fail(message: str, code: int) -> None:
    logger.error(message)
    click.echo(f"❌ {message}", err=True)
    sys.exit(code)


def _run(coro) -> Any:
    """Run a command coroutine, mapping library errors to exit codes."""
    try:
        return asyncio.run(coro)
    except GroundFieldInsufficientError as e:
        _fail(str(e), EXIT_FIELD)
    except (InputError, StorageError, ValidationError) as e:
        _fail(str(e), EXIT_INPUT)
    except CrossCheckError as e:
        _fail(f"Internal check failed: {e}", EXIT_INTERNAL)
    except (ArithmeticError, ValueError) as e:
        _fail(f"Internal error: {type(e).__name__}: {e}", EXIT_INTERNAL)


def common_options(func: Callable) -> Callable:
    """--json, --seed and --max-depth, shared by every command."""
    func = click.option("--max-depth", type=int, help="Bound on the Newton recursion depth")(func)
    func = click.option("--seed", type=int, help="Seed of the random oracles")(func)
    func = click.option("--json", "as_json", is_flag=True, help="Output as JSON")(func)
    return func


def _config(ctx, seed: Optional[int], max_depth: Optional[int]) -> RunConfig:
    overrides = {"seed": seed, "max_depth": max_depth}
    config_path = ctx.obj.get("config_path")
    if config_path:
        return RunConfig.from_file(config_path, **overrides)
    return RunConfig.from_env(**overrides)


async def _emit(
    ctx, command: str, path: str, report: Dict[str, Any], text: str, as_json: bool, seed: int
) -> None:
    """Print a report and store it when --save-dir is given."""
    if as_json:
        click.echo(json.dumps(report, indent=2))
    else:
        click.echo(text)
    save_dir = ctx.obj.get("save_dir")
    if save_dir:
        storage = FileSystemReportStorage(base_path=save_dir)
        source = await read_text(path)
        await storage.save_report(f"{Path(path).stem}-{command}", command, report, source, seed)


@click.group()
@click.option("--config", type=click.Path(exists=True), help="JSON run configuration")
@click.option("--save-dir", type=click.Path(), help="Store JSON reports in this directory")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
@click.pass_context
def main(ctx, config, save_dir, verbose):
    """newt - Newton trees, processes and invariants of ideals in Q[x,y]."""

    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config
    ctx.obj["save_dir"] = save_dir


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@common_options
@click.pass_context
def polygon(ctx, ideal_file, as_json, seed, max_depth):
    """Show the Newton polygon of an ideal."""

    async def _polygon():
        config = _config(ctx, seed, max_depth)
        ideal = await load_ideal(ideal_file)
        diag = diagram(ideal)
        report = diagram_report(ideal, diag)
        lines = [
            "Newton polygon: " + " ".join(f"({a},{b})" for a, b in diag.vertices),
            f"height={height(diag)}",
        ]
        for face in faces(diag):
            decomposition = initial_ideal(ideal, face)
            lines.append(
                f"  {face}  delta={face.delta}  d={decomposition.d}  "
                f"F(1,X)={decomposition.face_polynomial()}"
            )
        await _emit(ctx, "polygon", ideal_file, report, "\n".join(lines), as_json, config.seed)

    _run(_polygon())


def _tree_text(tree: NewtonTree) -> str:
    if not tree.vertices:
        top, bottom = tree.arrows
        return f"Newton tree without vertices: arrows ({top.mult}) and ({bottom.mult})"
    lines = [f"Newton tree: {len(tree.vertices)} vertices, depth {tree.depth}"]
    for v in tree.vertices:
        dicritical = "  dicritical" if v.d else ""
        lines.append(
            f"  v{v.id}: (N,d)=({v.N},{v.d}) q={v.q} p={v.p} "
            f"maps={{{format_maps(v.maps)}}}{dicritical}"
        )
    for arrow in tree.arrows:
        where = "edge" if arrow.at is None else f"v{arrow.at}"
        lines.append(f"  arrow {arrow.kind} at {where}: mult {arrow.mult}")
    return "\n".join(lines)


async def _analyze(ctx, ideal_file: str, seed, max_depth) -> Tuple[AnalysisResult, RunConfig]:
    config = _config(ctx, seed, max_depth)
    ideal = await load_ideal(ideal_file)
    return IdealAnalyzer(config).run(ideal), config


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@common_options
@click.option("--dot", is_flag=True, help="Output as Graphviz DOT")
@click.pass_context
def tree(ctx, ideal_file, as_json, seed, max_depth, dot):
    """Show the Newton tree of an ideal."""

    async def _tree():
        analysis, config = await _analyze(ctx, ideal_file, seed, max_depth)
        if dot:
            click.echo(to_dot(analysis.tree), nl=False)
            return
        report = json.loads(analysis.tree.to_json())
        text = _tree_text(analysis.tree)
        await _emit(ctx, "tree", ideal_file, report, text, as_json, config.seed)

    _run(_tree())


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@common_options
@click.pass_context
def process(ctx, ideal_file, as_json, seed, max_depth):
    """Show the Newton process of an ideal."""

    async def _process():
        analysis, config = await _analyze(ctx, ideal_file, seed, max_depth)
        report = json.loads(analysis.process.to_json())
        await _emit(
            ctx, "process", ideal_file, report, str(analysis.process), as_json, config.seed
        )

    _run(_process())


def _invariants_text(report: InvariantsReport, closure: str) -> str:
    lines = [f"depth={report.depth}", f"nondegenerate={str(report.nondegenerate).lower()}"]
    if report.e is not None:
        loj = report.lojasiewicz
        exponent = str(loj.num) if loj.den == 1 else f"{loj.num}/{loj.den}"
        lines += [
            f"m={report.mult_m}",
            f"e={report.e}",
            f"e_area={report.e_area}",
            f"j={report.j}",
            f"lojasiewicz={exponent}",
            "rees:",
        ]
        for entry in report.rees:
            lines.append(
                f"  {{{format_maps(tuple(entry.maps))}}}: N={entry.N} d={entry.d} rho={entry.rho}"
            )
    else:
        lines.append(f"j={report.j}")
    lines.append(f"closure={closure}")
    return "\n".join(lines)


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@common_options
@click.pass_context
def invariants(ctx, ideal_file, as_json, seed, max_depth):
    """Compute the invariants of an ideal."""

    async def _invariants():
        analysis, config = await _analyze(ctx, ideal_file, seed, max_depth)
        report = invariants_report(analysis)
        closure = format_factorization(zariski_factorization(analysis.process))
        data = report.model_dump(mode="json")
        data["closure"] = closure
        text = _invariants_text(report, closure)
        await _emit(ctx, "invariants", ideal_file, data, text, as_json, config.seed)

    _run(_invariants())


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@click.option("--poly", "poly_text", required=True, help="Polynomial f")
@click.option("--vertex", "vertex_id", type=int, help="Only this vertex")
@common_options
@click.pass_context
def valuation(ctx, ideal_file, poly_text, vertex_id, as_json, seed, max_depth):
    """Compute N_v(f) at the vertices of the Newton tree of an ideal."""

    async def _valuation():
        analysis, config = await _analyze(ctx, ideal_file, seed, max_depth)
        f = parse_poly(poly_text)
        vertices = analysis.tree.vertices
        if vertex_id is not None:
            if not 0 <= vertex_id < len(vertices):
                raise InputError(f"The tree has no vertex {vertex_id}")
            vertices = (analysis.tree.vertex(vertex_id),)
        values = {v.id: valuation_Nv(analysis, v, f) for v in vertices}
        report = {"poly": str(f), "values": [{"vertex": k, "N": n} for k, n in values.items()]}
        text = "\n".join(f"v{k}: N_v({f})={n}" for k, n in values.items())
        await _emit(ctx, "valuation", ideal_file, report, text, as_json, config.seed)

    _run(_valuation())


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@click.option("--poly", "poly_text", required=True, help="Polynomial f")
@common_options
@click.pass_context
def degree(ctx, ideal_file, poly_text, as_json, seed, max_depth):
    """Compute the degree function d_I(f)."""

    async def _degree():
        analysis, config = await _analyze(ctx, ideal_file, seed, max_depth)
        f = parse_poly(poly_text)
        value = degree_function(analysis, f)
        report = {"poly": str(f), "degree": value}
        await _emit(ctx, "degree", ideal_file, report, f"d_I({f})={value}", as_json, config.seed)

    _run(_degree())


@main.command("closure-eq")
@click.argument("first_file", type=click.Path(exists=True))
@click.argument("second_file", type=click.Path(exists=True))
@common_options
@click.pass_context
def closure_eq(ctx, first_file, second_file, as_json, seed, max_depth):
    """Decide whether two ideals have the same integral closure."""

    async def _closure_eq():
        config = _config(ctx, seed, max_depth)
        first = await load_ideal(first_file)
        second = await load_ideal(second_file)
        equal = same_integral_closure(first, second, config)
        report = {"equal": equal}
        text = "EQUAL" if equal else "DIFFERENT"
        await _emit(ctx, "closure-eq", first_file, report, text, as_json, config.seed)

    _run(_closure_eq())


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@common_options
@click.pass_context
def factor(ctx, ideal_file, as_json, seed, max_depth):
    """Zariski factorization of the integral closure of an ideal."""

    async def _factor():
        analysis, config = await _analyze(ctx, ideal_file, seed, max_depth)
        factors = zariski_factorization(analysis.process)
        report = {
            "factors": [
                {**descriptor.model_dump(mode="json"), "exponent": exponent}
                for descriptor, exponent in factors
            ]
        }
        text = format_factorization(factors)
        await _emit(ctx, "factor", ideal_file, report, text, as_json, config.seed)

    _run(_factor())


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@common_options
@click.option("--dot", is_flag=True, help="Output as Graphviz DOT")
@click.pass_context
def gencurve(ctx, ideal_file, as_json, seed, max_depth, dot):
    """Show the Newton tree of a generic curve of an ideal."""

    async def _gencurve():
        config = _config(ctx, seed, max_depth)
        ideal = await load_ideal(ideal_file)
        if ideal.is_principal():
            raise PrincipalIdealError(f"{ideal} is principal; its generic curve is itself")
        curve_tree = generic_curve_tree(IdealAnalyzer(config).run(ideal).tree)
        if dot:
            click.echo(to_dot(curve_tree), nl=False)
            return
        report = json.loads(curve_tree.to_json())
        text = _tree_text(curve_tree)
        await _emit(ctx, "gencurve", ideal_file, report, text, as_json, config.seed)

    _run(_gencurve())


def _checks(analysis: AnalysisResult, rnd: RandomSource) -> List[Tuple[str, bool, str]]:
    """Run the self-checks; each yields (name, passed, detail)."""
    results = []
    tree = analysis.tree
    results.append(("decorations", check_N_decorations(tree), "N_v by path products"))
    results.append(("edge relation", check_edge_relation(tree), "q = p0*q0*p + m"))

    square = IdealAnalyzer(analysis.config).run(analysis.ideal * analysis.ideal)
    merged = merge_processes(analysis.process, analysis.process)
    results.append(("product rule", merged == square.process, f"{merged} vs {square.process}"))

    if analysis.finite_codim:
        e = hs_multiplicity(analysis)
        try:
            areas = hs_via_areas(analysis)
        except CrossCheckError as e_area:
            results.append(("area sum", False, str(e_area)))
        else:
            results.append(("area sum", areas == e, f"{areas} vs {e}"))
        oracle_e = e_oracle(analysis.ideal, rnd)
        results.append(("e oracle", oracle_e == e, f"{oracle_e} vs {e}"))
        oracle_m = mult_oracle(analysis.ideal, rnd)
        m = mult_m(analysis)
        results.append(("m oracle", oracle_m == m, f"{oracle_m} vs {m}"))
    return results


@main.command()
@click.argument("ideal_file", type=click.Path(exists=True))
@common_options
@click.pass_context
def check(ctx, ideal_file, as_json, seed, max_depth):
    """Cross-check the invariants of an ideal against independent computations."""

    async def _check():
        analysis, config = await _analyze(ctx, ideal_file, seed, max_depth)
        results = _checks(analysis, RandomSource(config.seed))
        report = {
            "seed": config.seed,
            "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in results],
        }
        text = "\n".join(f"{'✅' if ok else '❌'} {n}: {d}" for n, ok, d in results)
        await _emit(ctx, "check", ideal_file, report, text, as_json, config.seed)
        failed = [n for n, ok, _ in results if not ok]
        if failed:
            raise CrossCheckError(f"Failed checks: {', '.join(failed)}")

    _run(_check())


if __name__ == "__main__":
    main()
