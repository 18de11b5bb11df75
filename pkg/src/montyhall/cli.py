"""Command-line front door: build fixtures, reduce, solve, enumerate, play.

Rational quantities are printed as p/q strings and accepted in the same
form; solver commands take no decimal probabilities.  Every command's
JSON output conforms to a schema shipped under montyhall/schemas/.
"""

from __future__ import annotations

import json
from fractions import Fraction

import click

from .dominance import eliminate
from .game import HOST_LABELS
from .matrices import (
    Bimatrix,
    PayoffMatrix,
    build_contestant_matrix,
    get_bimatrix_fixture,
    get_matrix_fixture,
)
from .nash import (
    best_response,
    classify_equilibrium_response,
    mixed_nash,
    pure_nash,
)
from .simulate import SimConfig, run as run_simulation
from .strategies import (
    HostLambdaStrategy,
    MixedStrategy,
    host_from_pi_lambda,
    parse_rational,
    parse_strategy,
)
from .zerosum import enumerate_minimax, host_lambda_vertices, solve

MATRIX_FIXTURE_NAMES = ("C", "c3")
BIMATRIX_FIXTURE_NAMES = ("zero-sum", "alpha", "beta", "gamma", "delta")


def output_options(f):
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "table", "csv"]),
        default="table",
        show_default=True,
        help="Output rendering.",
    )(f)
    f = click.option(
        "--output",
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help="Write to a file instead of stdout.",
    )(f)
    return f


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _emit_json(data: dict, output: str | None) -> None:
    _emit(json.dumps(data, indent=2), output)


def _no_csv(fmt: str) -> None:
    if fmt == "csv":
        raise click.UsageError("csv format is only available for build-matrix")


def _load_matrix(fixture: str | None, matrix_file: str | None) -> tuple[str, PayoffMatrix]:
    if matrix_file:
        with open(matrix_file) as fh:
            return matrix_file, PayoffMatrix.from_json_dict(json.load(fh))
    if fixture is None:
        raise click.UsageError("give a fixture name (C, c3) or --matrix-file")
    try:
        return fixture, get_matrix_fixture(fixture)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _load_bimatrix(fixture: str | None, matrix_file: str | None) -> tuple[str, Bimatrix]:
    if matrix_file:
        with open(matrix_file) as fh:
            return matrix_file, Bimatrix.from_json_dict(json.load(fh))
    if fixture is None:
        raise click.UsageError(
            "give a fixture name (zero-sum, alpha, beta, gamma, delta) or --matrix-file"
        )
    name = fixture.split(":", 1)[0]  # beta:<Q> names the same bimatrix
    try:
        return fixture, get_bimatrix_fixture(name)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _fmt_strategy(s: MixedStrategy) -> str:
    return ", ".join(f"{l}:{p}" for l, p in zip(s.labels, s.probs) if p)


def _parse_triple(text: str) -> tuple[Fraction, Fraction, Fraction]:
    try:
        parts = [parse_rational(x) for x in text.split(",")]
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if len(parts) != 3:
        raise click.UsageError(f"expected three comma-separated rationals, got {text!r}")
    return tuple(parts)


@click.group()
@click.version_option(package_name="montyhall")
def main() -> None:
    """Exact game-theory engine for the Monty Hall show."""


@main.command("build-matrix")
@click.argument("fixture", required=False)
@click.option("--matrix-file", type=click.Path(exists=True), default=None)
@output_options
def cmd_build_matrix(fixture, matrix_file, fmt, output):
    """Print a payoff matrix or bimatrix fixture (C, c3, alpha..delta)."""
    if fixture in MATRIX_FIXTURE_NAMES or (fixture is None and matrix_file):
        _, matrix = _load_matrix(fixture, matrix_file)
        if fmt == "json":
            _emit_json(matrix.to_json_dict(), output)
        elif fmt == "csv":
            _emit(matrix.to_csv(), output)
        else:
            _emit(matrix.to_text_table(), output)
        return
    _, bim = _load_bimatrix(fixture, matrix_file)
    if fmt == "json":
        _emit_json(bim.to_json_dict(), output)
    elif fmt == "csv":
        raise click.UsageError("csv is not defined for bimatrices; use json or table")
    else:
        _emit(bim.to_text_table(), output)


@main.command("reduce")
@click.argument("fixture", required=False)
@click.option("--matrix-file", type=click.Path(exists=True), default=None)
@click.option(
    "--kind",
    type=click.Choice(["weak", "strict"]),
    default="weak",
    show_default=True,
)
@click.option(
    "--policy",
    type=click.Choice(["rows_then_columns", "fixpoint"]),
    default="rows_then_columns",
    show_default=True,
)
@output_options
def cmd_reduce(fixture, matrix_file, kind, policy, fmt, output):
    """Run iterated dominance elimination and print the trace."""
    _no_csv(fmt)
    name, matrix = _load_matrix(fixture, matrix_file)
    trace = eliminate(matrix, policy, kind)
    if fmt == "json":
        _emit_json({"fixture": name, **trace.to_json_dict()}, output)
    else:
        _emit(trace.to_text(), output)


@main.command("solve")
@click.argument("fixture", required=False)
@click.option("--matrix-file", type=click.Path(exists=True), default=None)
@output_options
def cmd_solve(fixture, matrix_file, fmt, output):
    """Solve a zero-sum matrix game exactly (value, strategies, certificates)."""
    _no_csv(fmt)
    name, matrix = _load_matrix(fixture, matrix_file)
    solution = solve(matrix)
    if fmt == "json":
        _emit_json({"fixture": name, **solution.to_json_dict()}, output)
        return
    lines = [
        f"value = {solution.value}",
        f"contestant optimal: {_fmt_strategy(solution.contestant_optimal)}",
        f"host optimal:       {_fmt_strategy(solution.host_optimal)}",
        "guarantee vs columns: "
        + ", ".join(str(v) for v in solution.contestant_guarantees),
        "cap vs rows:          " + ", ".join(str(v) for v in solution.host_caps),
    ]
    _emit("\n".join(lines), output)


@main.command("enumerate-minimax")
@click.argument("fixture", required=False)
@click.option("--matrix-file", type=click.Path(exists=True), default=None)
@click.option(
    "--side",
    type=click.Choice(["contestant", "host", "both"]),
    default="both",
    show_default=True,
)
@output_options
def cmd_enumerate_minimax(fixture, matrix_file, side, fmt, output):
    """List every extreme minimax strategy of one or both sides."""
    _no_csv(fmt)
    name, matrix = _load_matrix(fixture, matrix_file)
    sides = ["contestant", "host"] if side == "both" else [side]
    results = [enumerate_minimax(matrix, s) for s in sides]
    if fmt == "json":
        _emit_json(
            {
                "fixture": name,
                "results": [
                    {
                        "side": r.side,
                        "vertices": [v.to_json_dict() for v in r.vertices],
                    }
                    for r in results
                ],
            },
            output,
        )
        return
    lines = []
    for r in results:
        lines.append(f"{r.side}: {len(r.vertices)} extreme minimax strategies")
        for v in r.vertices:
            lines.append(f"  {_fmt_strategy(v)}")
    _emit("\n".join(lines), output)


@main.command("nash")
@click.argument("fixture", required=False)
@click.option("--matrix-file", type=click.Path(exists=True), default=None)
@click.option(
    "--mode",
    type=click.Choice(["pure", "mixed", "both"]),
    default="both",
    show_default=True,
)
@output_options
def cmd_nash(fixture, matrix_file, mode, fmt, output):
    """Enumerate Nash equilibria of a bimatrix fixture or file."""
    _no_csv(fmt)
    name, bim = _load_bimatrix(fixture, matrix_file)
    data: dict = {"fixture": name}
    lines = []
    if mode in ("pure", "both"):
        pure = pure_nash(bim)
        data["pure"] = [e.to_json_dict() for e in pure]
        lines.append(f"pure equilibria: {len(pure)}")
        for e in pure:
            lines.append(
                f"  ({e.contestant.support()[0]}, {e.host.support()[0]}) "
                f"payoffs ({e.payoffs[0]}, {e.payoffs[1]})"
            )
    if mode in ("mixed", "both"):
        result = mixed_nash(bim)
        data["mixed"] = result.to_json_dict()
        lines.append(f"extreme equilibria: {len(result.equilibria)}")
        for e in result.equilibria:
            lines.append(
                f"  [component {e.component}] p = {_fmt_strategy(e.contestant)}; "
                f"q = {_fmt_strategy(e.host)}; payoffs ({e.payoffs[0]}, {e.payoffs[1]})"
            )
        for comp in result.components:
            if comp.degenerate:
                lines.append(
                    f"component {comp.index} is a continuum "
                    f"({len(comp.equilibrium_indices)} extreme points)"
                )
    if fmt == "json":
        _emit_json(data, output)
    else:
        _emit("\n".join(lines), output)


@main.command("best-response")
@click.option("--host", "host_text", default=None, help='Host mixture, e.g. "Q*:1,1,1".')
@click.option("--pi", "pi_text", default=None, help="Car-placement triple, e.g. 1/2,1/3,1/6.")
@click.option(
    "--lambda",
    "lambda_text",
    default=None,
    help="Left-reveal odds triple used with --pi.",
)
@output_options
def cmd_best_response(host_text, pi_text, lambda_text, fmt, output):
    """Contestant's exact best response to a known host mixture."""
    _no_csv(fmt)
    if host_text and pi_text:
        raise click.UsageError("give either --host or --pi/--lambda, not both")
    try:
        if host_text:
            host = parse_strategy(host_text, "host")
        elif pi_text:
            lam = _parse_triple(lambda_text) if lambda_text else (Fraction(1, 2),) * 3
            host = host_from_pi_lambda(_parse_triple(pi_text), lam)
        else:
            raise click.UsageError("a host mixture is required (--host or --pi)")
    except ValueError as exc:
        raise click.UsageError(str(exc))
    report = best_response(build_contestant_matrix(), host)
    classification = None
    if host.is_fully_supported():
        c = classify_equilibrium_response(report.pi, True)
        classification = {
            "case": c.case,
            "support": list(c.support),
            "strategy": None if c.strategy is None else c.strategy.to_json_dict(),
        }
    if fmt == "json":
        _emit_json({**report.to_json_dict(), "classification": classification}, output)
        return
    lines = [
        f"value = {report.value}",
        f"best pure responses: {', '.join(report.best_pure_set)}",
        f"pi = ({', '.join(str(x) for x in report.pi)})",
    ]
    if classification:
        lines.append(
            f"equilibrium response case {classification['case']}: "
            f"support {{{', '.join(classification['support'])}}}"
        )
    for e in report.excluded:
        lines.append(f"excluded {e.strategy} (rule {e.rule}), payoff {e.payoff}")
    _emit("\n".join(lines), output)


@main.command("simulate")
@click.option(
    "--contestant",
    "contestant_text",
    default="P*",
    show_default=True,
    help='Contestant mixture, e.g. "P*" or "1SS:1/2,2SS:1/2".',
)
@click.option(
    "--host",
    "host_text",
    default="Q*:1/2,1/2,1/2",
    show_default=True,
    help='Host mixture, e.g. "Q*:1,1,1" or "1L".',
)
@click.option("--trials", type=int, default=10_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--shards", type=int, default=1, show_default=True)
@output_options
def cmd_simulate(contestant_text, host_text, trials, seed, shards, fmt, output):
    """Monte Carlo playout of a mixed profile vs the exact expected rate."""
    _no_csv(fmt)
    try:
        contestant = parse_strategy(contestant_text, "contestant")
        host = parse_strategy(host_text, "host")
        config = SimConfig(trials, seed, contestant, host)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    result = run_simulation(config, shards=shards)
    if fmt == "json":
        _emit_json(result.to_json_dict(), output)
        return
    z = "n/a" if result.z_score is None else f"{result.z_score:+.3f}"
    _emit(
        f"wins {result.wins}/{result.trials}  "
        f"empirical {float(result.empirical_rate):.5f}  "
        f"exact {result.exact_rate} ({float(result.exact_rate):.5f})  z {z}",
        output,
    )


def build_paper_report() -> dict:
    """One document with every headline exact result of the engine."""
    win = build_contestant_matrix()
    trace = eliminate(win, "rows_then_columns", "weak")
    solution = solve(win)
    vertices = host_lambda_vertices()
    maverick = pure_nash(get_bimatrix_fixture("gamma"))
    superstitious = mixed_nash(get_bimatrix_fixture("delta"))
    q_left = HostLambdaStrategy.of(1, 1, 1).expand()
    checks = []
    for host in (
        q_left,
        host_from_pi_lambda(
            (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)), (Fraction(1, 2),) * 3
        ),
        MixedStrategy.uniform(HOST_LABELS),
    ):
        report = best_response(win, host)
        classification = None
        if host.is_fully_supported():
            c = classify_equilibrium_response(report.pi, True)
            classification = {
                "case": c.case,
                "support": list(c.support),
                "strategy": None if c.strategy is None else c.strategy.to_json_dict(),
            }
        checks.append({**report.to_json_dict(), "classification": classification})
    return {
        "win_matrix": win.to_json_dict(),
        "reduction": {"fixture": "C", **trace.to_json_dict()},
        "zero_sum": {"fixture": "C", **solution.to_json_dict()},
        "host_minimax_vertices": [v.to_json_dict() for v in vertices],
        "fixture_equilibria": {
            "maverick_pure": {
                "fixture": "gamma",
                "pure": [e.to_json_dict() for e in maverick],
            },
            "superstitious_mixed": {
                "fixture": "delta",
                "mixed": superstitious.to_json_dict(),
            },
        },
        "best_response_checks": checks,
    }


def render_paper_report_text(data: dict) -> str:
    win = PayoffMatrix.from_json_dict(data["win_matrix"])
    lines = ["MONTY HALL GAME ENGINE REPORT", "=" * 34, "", "Win matrix (12x6):", ""]
    lines.append(win.to_text_table())
    lines.append("")
    lines.append("Dominance reduction:")
    red = data["reduction"]
    for s in red["steps"]:
        lines.append(
            f"  step {s['step']}: drop {s['axis']} {s['eliminated']} "
            f"({s['kind']} vs {s['dominator']})"
        )
    lines.append(
        f"  survivors: rows {', '.join(red['surviving_rows'])}; "
        f"columns {', '.join(red['surviving_cols'])}"
    )
    lines.append("")
    zs = data["zero_sum"]
    p = MixedStrategy.from_json_dict(zs["contestant_optimal"])
    lines.append(f"Zero-sum value = {zs['value']}")
    lines.append(f"Unique contestant minimax: {_fmt_strategy(p)}")
    lines.append(f"Host extreme minimax strategies: {len(data['host_minimax_vertices'])}")
    for v in data["host_minimax_vertices"]:
        lines.append(f"  {_fmt_strategy(MixedStrategy.from_json_dict(v))}")
    lines.append("")
    mav = data["fixture_equilibria"]["maverick_pure"]["pure"]
    lines.append(f"Maverick host (gamma): {len(mav)} pure equilibria")
    for e in mav:
        p = MixedStrategy.from_json_dict(e["contestant"])
        q = MixedStrategy.from_json_dict(e["host"])
        lines.append(
            f"  ({p.support()[0]}, {q.support()[0]}) "
            f"payoffs ({e['payoffs'][0]}, {e['payoffs'][1]})"
        )
    sup = data["fixture_equilibria"]["superstitious_mixed"]["mixed"]
    lines.append(
        f"Superstitious host (delta): {len(sup['equilibria'])} extreme equilibria, "
        f"including (P*, Q*:1,1,1):"
    )
    for e in sup["equilibria"]:
        p = MixedStrategy.from_json_dict(e["contestant"])
        q = MixedStrategy.from_json_dict(e["host"])
        lines.append(f"  p = {_fmt_strategy(p)}; q = {_fmt_strategy(q)}")
    lines.append("")
    lines.append("Best-response spot checks:")
    for check in data["best_response_checks"]:
        pi = "(" + ", ".join(check["pi"]) + ")"
        lines.append(
            f"  pi = {pi}: value {check['value']}, "
            f"best {{{', '.join(check['best_pure_set'])}}}"
        )
    return "\n".join(lines)


@main.command("paper-report")
@output_options
def cmd_paper_report(fmt, output):
    """Emit the full headline-results document."""
    _no_csv(fmt)
    data = build_paper_report()
    if fmt == "json":
        _emit_json(data, output)
    else:
        _emit(render_paper_report_text(data), output)


@main.command("serve")
@click.option("--addr", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option(
    "--frontend",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Directory with the built playground UI to serve at /.",
)
@click.option("--seed", type=int, default=None, help="Base seed for session sampling.")
def cmd_serve(addr, port, frontend, seed):
    """Run the live-play HTTP service (and optionally the playground UI)."""
    import uvicorn

    from .service import create_app

    app = create_app(frontend_dir=frontend, base_seed=seed)
    uvicorn.run(app, host=addr, port=port)


if __name__ == "__main__":
    main()
