"""Command-line entry points: mutate, explore, expand, check, compare, serve."""

from __future__ import annotations

import json
import sys

import click

from .exmatrix import ExtendedExchangeMatrix, SkewSymmetryError
from .explorer import compare_patterns, default_max_seeds, explore
from .gvec import indices_along_path
from .seed import Seed, apply_path
from .tropical import (
    PrincipalPattern,
    f_polynomial,
    separated_variable_checked,
    x_function,
)
from .verify import (
    VerificationReport,
    check_linear_independence,
    check_maximal_sets,
    check_not_laurent_monomial,
    check_proper_laurent,
    check_seed_determined,
)

SUITE_MATRICES = {
    "a2": [[0, 1], [-1, 0]],
    "a3": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]],
    "a4": [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]],
    "markov": [[0, 2, -2], [-2, 0, 2], [2, -2, 0]],
}


def _load_seed(path: str) -> Seed:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise click.ClickException(
            f"{path}: parse failure at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        )
    except OSError as exc:
        raise click.ClickException(str(exc))
    try:
        return Seed.from_json(data)
    except (SkewSymmetryError, ValueError) as exc:
        raise click.ClickException(f"{path}: {exc}")


def _parse_sequence(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise click.ClickException(f"bad mutation sequence {text!r}")


def _apply_checked(seed: Seed, sequence: tuple[int, ...]) -> Seed:
    for v in sequence:
        if not 1 <= v <= seed.r:
            raise click.ClickException(f"vertex {v} is frozen or out of range")
    return apply_path(seed, sequence)


def _names(n: int, names: list[str] | None) -> list[str]:
    return names if names else [f"x{i + 1}" for i in range(n)]


def _print_seed(seed: Seed, root_matrix: ExtendedExchangeMatrix, path: tuple[int, ...]) -> None:
    click.echo("matrix:")
    for row in seed.matrix.entries:
        click.echo("  [" + ", ".join(str(x) for x in row) + "]")
    click.echo("variables:")
    for i, v in enumerate(seed.variables, 1):
        click.echo(f"  u{i} = {v.render()}")
    gs = indices_along_path(root_matrix, path)
    click.echo("reduced indices:")
    for i, g in enumerate(gs[: seed.r], 1):
        click.echo(f"  g{i} = [" + ", ".join(str(x) for x in g.reduced) + "]")


@click.group()
def main():
    """Exact workbench for skew-symmetric cluster algebras of geometric type."""


@main.command()
@click.argument("seed_file", type=click.Path(exists=True))
@click.option("--sequence", default="", help="Mutation vertices, e.g. '1,2,1'.")
def mutate(seed_file: str, sequence: str):
    """Mutate the seed in SEED_FILE along a vertex sequence and print it."""
    base = _load_seed(seed_file)
    seq = _parse_sequence(sequence)
    result = _apply_checked(base, seq)
    _print_seed(result, base.matrix, base.path + seq)


@main.command("explore")
@click.argument("seed_file", type=click.Path(exists=True))
@click.option("--max-seeds", default=None, type=int, help="Seed-count cap.")
@click.option("--max-depth", default=None, type=int, help="Mutation-depth cap.")
@click.option("--output", default=None, type=click.Path(), help="Write graph JSON here.")
@click.option("--dot", "dot_path", default=None, type=click.Path(), help="Write DOT here.")
def explore_cmd(seed_file, max_seeds, max_depth, output, dot_path):
    """Build the exchange graph reachable from SEED_FILE."""
    seed = _load_seed(seed_file)
    graph = explore(seed, max_seeds=max_seeds or default_max_seeds(), max_depth=max_depth)
    status = "complete" if graph.complete else "truncated"
    click.echo(
        f"{graph.num_vertices} seeds, {graph.num_edges()} edges, {status}; "
        f"{len(graph.cluster_variables())} cluster variables"
    )
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            json.dump(graph.to_json(), handle, sort_keys=True, indent=2)
        click.echo(f"graph written to {output}")
    if dot_path:
        with open(dot_path, "w", encoding="utf-8") as handle:
            handle.write(graph.to_dot() + "\n")
        click.echo(f"DOT written to {dot_path}")


@main.command()
@click.argument("seed_file", type=click.Path(exists=True))
@click.option("--path", "path_text", default="", help="Mutation path, e.g. '1,2'.")
@click.option("--vertex", required=True, type=int, help="Cluster variable to expand (1..r).")
@click.option("--principal", is_flag=True, help="Also emit X, F and the separated value.")
def expand(seed_file, path_text, vertex, principal):
    """Expand a cluster variable of the seed reached along --path."""
    base = _load_seed(seed_file)
    path = _parse_sequence(path_text)
    if not 1 <= vertex <= base.r:
        raise click.ClickException(f"vertex {vertex} is frozen or out of range")
    result = _apply_checked(base, path)
    click.echo(f"x[{vertex}] = {result.variables[vertex - 1].render()}")
    if principal:
        r = base.r
        pattern = PrincipalPattern.from_matrix(base.matrix)
        y_names = [f"x{i + 1}" for i in range(r)] + [f"y{j + 1}" for j in range(r)]
        x = x_function(pattern, path, vertex)
        f = f_polynomial(pattern, path, vertex)
        separated = separated_variable_checked(base.matrix, path, vertex)
        click.echo(f"X = {x.render(y_names)}")
        click.echo(f"F = {f.render(y_names)}")
        click.echo(f"separated = {separated.render()}")


@main.command()
@click.option(
    "--suite",
    type=click.Choice(["a2", "a3", "a4", "markov", "custom"]),
    default="a2",
    show_default=True,
)
@click.option("--seed-file", default=None, type=click.Path(exists=True),
              help="Seed JSON for --suite custom.")
@click.option("--degree", default=2, show_default=True, help="Degree bound for monomial checks.")
@click.option("--cap", default=2, show_default=True, help="Exponent cap for the maximal-set scan.")
@click.option("--max-seeds", default=None, type=int)
@click.option("--max-depth", default=None, type=int)
@click.option("--json-out", default=None, type=click.Path(), help="Write the JSON report here.")
def check(suite, seed_file, degree, cap, max_seeds, max_depth, json_out):
    """Run the theorem-verification suite; exit 0 iff every check passes."""
    if suite == "custom":
        if not seed_file:
            raise click.ClickException("--suite custom requires --seed-file")
        seed = _load_seed(seed_file)
    else:
        if suite == "markov" and max_depth is None:
            max_depth = 6
        seed = Seed.initial(ExtendedExchangeMatrix.from_rows(SUITE_MATRICES[suite]))
    graph = explore(seed, max_seeds=max_seeds or default_max_seeds(), max_depth=max_depth)
    status = "complete" if graph.complete else "truncated"
    click.echo(f"explored {graph.num_vertices} seeds ({status})")
    reports = [check_seed_determined(graph, suite)]
    if graph.complete:
        reports.append(check_not_laurent_monomial(graph, suite))
        reports.append(check_linear_independence(graph, degree, suite))
        proper_runs = []
        for base_key in graph.vertices:
            report = check_proper_laurent(graph, base_key, degree, suite)
            proper_runs.append(report)
            if not report.passed:
                break
        if all(r.passed for r in proper_runs):
            total = sum(r.counts.get("monomials_checked", 0) for r in proper_runs)
            reports.append(
                VerificationReport(
                    "proper_laurent",
                    suite,
                    "pass",
                    counts={"monomials_checked": total, "bases": len(proper_runs)},
                )
            )
        else:
            reports.append(proper_runs[-1])
        if len(graph.cluster_variables()) <= 12:
            reports.append(check_maximal_sets(graph, cap, suite))
    for report in reports:
        click.echo(f"{report.name}: {report.outcome} {report.counts}")
        if report.witness:
            click.echo(f"  witness: {report.witness}")
    if json_out:
        with open(json_out, "w", encoding="utf-8") as handle:
            json.dump([r.to_json() for r in reports], handle, sort_keys=True, indent=2)
    if not all(r.passed for r in reports):
        sys.exit(1)


@main.command()
@click.argument("base_file", type=click.Path(exists=True))
@click.argument("other_file", type=click.Path(exists=True))
@click.option("--max-seeds", default=None, type=int)
@click.option("--max-depth", default=None, type=int)
def compare(base_file, other_file, max_seeds, max_depth):
    """Compare the exchange graphs of two coefficient patterns sharing a
    mutable block."""
    base = _load_seed(base_file).matrix
    other = _load_seed(other_file).matrix
    try:
        report = compare_patterns(
            base, other, max_seeds=max_seeds or default_max_seeds(), max_depth=max_depth
        )
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(json.dumps(report.to_json(), sort_keys=True, indent=2))
    if not report.isomorphic:
        sys.exit(1)


@main.command()
@click.option("--port", default=8765, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--seed-file", default=None, type=click.Path(exists=True))
def serve(port, host, seed_file):
    """Run the HTTP JSON API consumed by the explorer UI."""
    from .service import serve as run_server

    seed = _load_seed(seed_file) if seed_file else None
    run_server(port, seed, host=host)


if __name__ == "__main__":
    main()
