"""Command-line front end.

Exit codes: 0 success; 2 invalid pattern number; 3 excluded two-rule pair;
4 malformed params file; 5 oracle mismatch; 6 amplitude too large;
7 internal consistency failure.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .classify import classify_all, classify_one_rule
from .edges import ALL_SYMBOLS, Prototile
from .escher import (
    AmplitudeError,
    TilingConsistencyError,
    params_from_json,
    params_to_json,
    random_params,
    render,
    tiling_dump,
)
from .geometry import (
    SubstitutionRule,
    format_placements,
    generate_spread,
    oracle_relations,
)
from .relations import SolveMode, closure, solve, systems_agree

EXIT_BAD_PATTERN = 2
EXIT_EXCLUDED_PAIR = 3
EXIT_BAD_PARAMS = 4
EXIT_ORACLE_MISMATCH = 5
EXIT_AMPLITUDE = 6
EXIT_INTERNAL = 7


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _check_pattern(value: int | None, name: str) -> None:
    if value is not None and not 0 <= value <= 15:
        _fail(EXIT_BAD_PATTERN, f"pattern {name}={value} outside 0..15")


def _two_rule_rule(i: int | None, j: int | None) -> SubstitutionRule:
    if i is None or j is None:
        _fail(EXIT_BAD_PATTERN, "two-rule mode needs both -i and -j")
    _check_pattern(i, "i")
    _check_pattern(j, "j")
    if i == j or (i, j) in ((0, 15), (15, 0)):
        _fail(EXIT_EXCLUDED_PAIR, f"pair ({i},{j}) is excluded from the two-rule classification")
    return SubstitutionRule(i, j)


def _write_or_echo(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text)
        click.echo(f"wrote {out}")


@click.group()
def main() -> None:
    """Escher degree of chair (L-substitution) tilings."""


@main.command()
@click.option("--json", "as_json", is_flag=True, help="Emit the table as JSON.")
@click.option("--table", "as_table", is_flag=True, help="Emit an aligned text table (default).")
@click.option("--out", type=click.Path(path_type=Path), default=None)
def classify(as_json: bool, as_table: bool, out: Path | None) -> None:
    """Classify all 119 two-rule combination classes."""
    table = classify_all()
    text = table.to_json() + "\n" if as_json else table.to_text()
    _write_or_echo(text, out)


@main.command("classify-one-rule")
@click.option("--json", "as_json", is_flag=True, help="Emit the table as JSON.")
@click.option("--table", "as_table", is_flag=True, help="Emit an aligned text table (default).")
@click.option("--out", type=click.Path(path_type=Path), default=None)
def classify_one_rule_cmd(as_json: bool, as_table: bool, out: Path | None) -> None:
    """Classify the 14 mixed one-rule composite patterns."""
    table = classify_one_rule()
    text = table.to_json() + "\n" if as_json else table.to_text()
    _write_or_echo(text, out)


@main.command("solve")
@click.option("--mode", type=click.Choice([m.value for m in SolveMode]), required=True)
@click.option("-i", "pattern_i", type=int, default=None)
@click.option("-j", "pattern_j", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
def solve_cmd(mode: str, pattern_i: int | None, pattern_j: int | None, as_json: bool) -> None:
    """Solve one tiling's relation system and report its escher degree."""
    m = SolveMode(mode)
    if m is SolveMode.SINGLE:
        rule = None
    elif m is SolveMode.ONE_RULE:
        _check_pattern(pattern_i, "i")
        if pattern_i is None or pattern_i in (0, 15):
            _fail(EXIT_BAD_PATTERN, "one-rule mode needs a mixed pattern -i in 1..14")
        rule = SubstitutionRule(pattern_i)
    else:
        rule = _two_rule_rule(pattern_i, pattern_j)
    result = solve(m, rule)
    if as_json:
        click.echo(result.to_json())
        return
    click.echo(f"mode: {m.value}")
    if rule is not None:
        pair = f"{rule.alpha_pattern}" + (
            f",{rule.beta_pattern}" if rule.beta_pattern is not None else ""
        )
        click.echo(f"patterns: {pair}")
    click.echo(f"degree: {result.degree}")
    click.echo(f"presentation: {result.presentation}")
    if result.collapse is not None:
        click.echo(f"collapse: {str(result.collapse).lower()}")
    click.echo(f"iterations: {result.iterations}")


@main.command("render")
@click.option("--mode", type=click.Choice([m.value for m in SolveMode]), default="two-rule")
@click.option("-i", "pattern_i", type=int, default=None)
@click.option("-j", "pattern_j", type=int, default=None)
@click.option("-s", "order", type=int, default=3, show_default=True)
@click.option("--target", type=click.Choice(["alpha", "beta"]), default="alpha", show_default=True)
@click.option("--params", "params_file", type=click.Path(path_type=Path), default=None,
              help="JSON curve assignment; omit to draw random curves from --seed.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), required=True)
@click.option("--tiling-out", type=click.Path(path_type=Path), default=None,
              help="Also write the placement + curve-id text dump.")
def render_cmd(
    mode: str,
    pattern_i: int | None,
    pattern_j: int | None,
    order: int,
    target: str,
    params_file: Path | None,
    seed: int,
    out: Path,
    tiling_out: Path | None,
) -> None:
    """Render an escherized s-spread tiling to SVG."""
    m = SolveMode(mode)
    if m is SolveMode.SINGLE:
        rule = None
    elif m is SolveMode.ONE_RULE:
        if pattern_i is None or not 1 <= pattern_i <= 14:
            _fail(EXIT_BAD_PATTERN, "one-rule mode needs a mixed pattern -i in 1..14")
        rule = SubstitutionRule(pattern_i)
    else:
        rule = _two_rule_rule(pattern_i, pattern_j)
    result = solve(m, rule)
    if params_file is not None:
        try:
            params = params_from_json(params_file.read_text())
        except (OSError, ValueError) as exc:
            _fail(EXIT_BAD_PARAMS, str(exc))
        missing = set(range(len(result.system.classes()))) - set(params)
        if missing:
            _fail(EXIT_BAD_PARAMS, f"params file misses classes {sorted(missing)}")
    else:
        params = random_params(result.system, seed)
    try:
        rt, svg = render(m, rule, order, params, Prototile(target))
    except AmplitudeError as exc:
        _fail(EXIT_AMPLITUDE, str(exc))
    except TilingConsistencyError as exc:
        _fail(EXIT_INTERNAL, f"internal error: {exc}")
    except ValueError as exc:
        _fail(EXIT_BAD_PARAMS, str(exc))
    out.write_text(svg)
    if tiling_out is not None:
        tiling_out.write_text(tiling_dump(rt))
    click.echo(
        f"wrote {out} ({len(rt.placements)} tiles, degree {result.degree}, seed {seed})"
    )


@main.command("oracle-check")
@click.option("-i", "pattern_i", type=int, default=None)
@click.option("-j", "pattern_j", type=int, default=None)
@click.option("--all", "check_all", is_flag=True, help="Check every equivalence class representative.")
@click.option("--smax", type=int, default=4, show_default=True)
def oracle_check(pattern_i: int | None, pattern_j: int | None, check_all: bool, smax: int) -> None:
    """Compare the solver fixed point against the geometric matching oracle."""
    if check_all:
        from .classify import equivalence_classes

        pairs = [cls[0] for cls in equivalence_classes()]
    else:
        rule = _two_rule_rule(pattern_i, pattern_j)
        pairs = [(rule.alpha_pattern, rule.beta_pattern)]
    mismatches = []
    for i, j in pairs:
        rule = SubstitutionRule(i, j)
        relations = oracle_relations(rule, Prototile.ALPHA, smax) | oracle_relations(
            rule, Prototile.BETA, smax
        )
        oracle_system = closure(relations, ALL_SYMBOLS)
        solved = solve(SolveMode.TWO_RULE, rule).system
        if systems_agree(oracle_system, solved):
            click.echo(f"ok ({i},{j})")
        else:
            click.echo(f"MISMATCH ({i},{j})")
            mismatches.append((i, j))
    if mismatches:
        _fail(EXIT_ORACLE_MISMATCH, f"{len(mismatches)} oracle mismatches")
    click.echo(f"{len(pairs)} case(s) agree with the geometric oracle (s <= {smax})")


@main.command("spread")
@click.option("-i", "pattern_i", type=int, required=True)
@click.option("-j", "pattern_j", type=int, default=None)
@click.option("-s", "order", type=int, default=1, show_default=True)
@click.option("--target", type=click.Choice(["alpha", "beta"]), default="alpha", show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def spread_cmd(pattern_i: int, pattern_j: int | None, order: int, target: str, out: Path | None) -> None:
    """Dump the placements of an s-spread, one 'label tx ty rot' per line."""
    _check_pattern(pattern_i, "i")
    _check_pattern(pattern_j, "j")
    rule = SubstitutionRule(pattern_i, pattern_j)
    try:
        spread = generate_spread(rule, Prototile(target), order)
    except ValueError as exc:
        _fail(EXIT_BAD_PATTERN, str(exc))
    _write_or_echo(format_placements(spread.placements), out)


@main.command("params")
@click.option("--mode", type=click.Choice([m.value for m in SolveMode]), default="two-rule")
@click.option("-i", "pattern_i", type=int, default=None)
@click.option("-j", "pattern_j", type=int, default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def params_cmd(mode: str, pattern_i: int | None, pattern_j: int | None, seed: int, out: Path | None) -> None:
    """Emit a seeded random curve assignment for a tiling's classes."""
    m = SolveMode(mode)
    if m is SolveMode.SINGLE:
        rule = None
    elif m is SolveMode.ONE_RULE:
        if pattern_i is None or not 1 <= pattern_i <= 14:
            _fail(EXIT_BAD_PATTERN, "one-rule mode needs a mixed pattern -i in 1..14")
        rule = SubstitutionRule(pattern_i)
    else:
        rule = _two_rule_rule(pattern_i, pattern_j)
    result = solve(m, rule)
    _write_or_echo(params_to_json(random_params(result.system, seed)) + "\n", out)


if __name__ == "__main__":
    main()
