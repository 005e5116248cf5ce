"""Command-line front end.

Exit codes: 0 every verdict passed, 1 some verdict failed, 2 parse or
semantic error in a script, 3 I/O or bad flags, 4 sampler exhausted or more
than 1% of trials degenerate.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import centers, constructions
from .centers import Triangle
from .dsl import ScriptError, format_diagnostic, parse
from .engine import SamplerConfig, TrialReport, run_trials
from .errors import GeometryError, SamplerExhausted
from .kernel import Point

EXIT_PASS, EXIT_FAIL, EXIT_PARSE, EXIT_CONFIG, EXIT_DEGENERATE = 0, 1, 2, 3, 4
MAX_SKIP_FRACTION = 0.01

CORPUS = (
    "lemma1.geo",
    "lemma1_identities.geo",
    "lemma2.geo",
    "fuhrmann_def.geo",
    "stevanovic.geo",
    "negative_control.geo",
)


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    scripts: list[str] = field(default_factory=list)
    trials: int = 10_000
    seed: int = 42
    epsilon: float = 1e-9
    format: str = "text"
    fixed: tuple[Point, Point, Point] | None = None
    jobs: int = 1
    min_arc: float = 0.15
    allow_obtuse: bool = False

    def sampler(self) -> SamplerConfig:
        try:
            return SamplerConfig(
                seed=self.seed, trials=self.trials, min_arc=self.min_arc, allow_obtuse=self.allow_obtuse
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from None


def corpus_source(name: str) -> str:
    return resources.files("fuhrmann").joinpath("corpus", name).read_text(encoding="utf-8")


def parse_fixed(text: str) -> tuple[Point, Point, Point]:
    """Parse ``"x1,y1 x2,y2 x3,y3"``."""
    parts = text.split()
    if len(parts) != 3:
        raise ConfigError(f"--fixed needs three 'x,y' pairs, got {text!r}")
    points = []
    for part in parts:
        try:
            x, y = (float(v) for v in part.split(","))
            points.append(Point(x, y))
        except (ValueError, GeometryError):
            raise ConfigError(f"bad point {part!r} in --fixed") from None
    return tuple(points)


# ---------------------------------------------------------------- output


def _json(value) -> str:
    """JSON text with every float written to 17 significant digits."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return json.dumps(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot serialise {value}")
        text = format(value, ".17g")
        if not any(ch in text for ch in ".en"):
            text += ".0"
        return text
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in value) + "]"
    raise TypeError(f"cannot serialise {type(value).__name__}")


def fixture_figure(points) -> dict:
    """Every construction on a fixed triangle, as plain coordinates.

    A construction that is degenerate on this triangle maps to None.
    """

    def pts(*ps):
        return [[p.x, p.y] for p in ps]

    try:
        t = Triangle(*points)
    except GeometryError:
        return {}
    circle = centers.circumcircle(t)
    figure = {
        "orthocenter": pts(centers.orthocenter(t))[0],
        "circumcenter": pts(circle.center)[0],
        "circumradius": circle.radius,
        "incenter": pts(centers.incenter(t))[0],
        "arc_midpoints": pts(*(centers.arc_midpoint(t, i) for i in range(3))),
    }
    for key, build in (
        ("reflected_orthocenter", constructions.reflected_orthocenter_triangle),
        ("double_reflection", constructions.double_reflection_triangle),
        ("fuhrmann", constructions.fuhrmann_triangle),
    ):
        try:
            figure[key] = pts(*build(t))
        except GeometryError:
            figure[key] = None
    return figure


def _fmt(x) -> str:
    return "-" if x is None else f"{x:.3g}"


def render_figure(figure: dict) -> str:
    def show(value):
        if value is None:
            return "degenerate"
        if isinstance(value, float):
            return f"{value:.10g}"
        if value and isinstance(value[0], float):
            return f"({value[0]:.10g}, {value[1]:.10g})"
        return " ".join(show(v) for v in value)

    return "\n".join(["figure:"] + [f"  {key}: {show(value)}" for key, value in figure.items()])


def render_text(report: TrialReport) -> str:
    lines = [
        f"== {report.script}: {report.verdict.upper()} (expect {report.expect}; "
        f"{report.trials} trials, seed {report.seed}, epsilon {report.epsilon:g}, "
        f"{report.degenerate_rejections} degenerate rejections)"
    ]
    lines.append(f"  {'#':>3} {'passes':>7} {'failures':>8} {'skips':>6} {'max_resid':>10} {'worst':>6}  label")
    for r in report.assertions:
        worst = "-" if r.worst_trial_index is None else str(r.worst_trial_index)
        lines.append(
            f"  {r.index:>3} {r.passes:>7} {r.failures:>8} {r.degenerate_skips:>6} "
            f"{_fmt(r.max_residual):>10} {worst:>6}  {r.label}"
        )
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def render_summary(rows: list[tuple[str, TrialReport | None]]) -> str:
    lines = [f"{'script':<24} {'expect':<6} {'verdict':<8} {'trials':>7} {'failures':>8} {'skips':>6}"]
    for name, rep in rows:
        if rep is None:
            lines.append(f"{name:<24} {'-':<6} {'error':<8}")
            continue
        skips = max((r.degenerate_skips for r in rep.assertions), default=0)
        lines.append(
            f"{name:<24} {rep.expect:<6} {rep.verdict:<8} {rep.trials:>7} {rep.failures:>8} {skips:>6}"
        )
    return "\n".join(lines)


# ---------------------------------------------------------------- commands


def _execute(sources: list[tuple[str, str]], config: RunConfig, out, err, summary: bool) -> int:
    scripts = []
    bad = False
    for name, text in sources:
        try:
            scripts.append((name, parse(text)))
        except ScriptError as exc:
            print(format_diagnostic(exc, name), file=err)
            bad = True
    if bad:
        return EXIT_PARSE

    cfg = config.sampler()
    figure = fixture_figure(config.fixed) if config.fixed is not None else None
    code = EXIT_PASS
    rows = []
    for name, script in scripts:
        try:
            report = run_trials(script, cfg, config.epsilon, name=name, jobs=config.jobs, fixed=config.fixed)
        except SamplerExhausted as exc:
            print(f"{name}: {exc}", file=err)
            rows.append((name, None))
            code = EXIT_DEGENERATE
            continue
        if config.format == "json":
            payload = report.to_dict()
            if figure is not None:
                payload["figure"] = figure
            print(_json(payload), file=out)
        else:
            print(render_text(report), file=out)
        rows.append((name, report))
        if report.skip_fraction() > MAX_SKIP_FRACTION:
            print(f"{name}: {report.skip_fraction():.1%} of trials degenerate", file=err)
            code = EXIT_DEGENERATE
        elif report.verdict != "pass" and code == EXIT_PASS:
            code = EXIT_FAIL
    if config.format == "text":
        if figure:
            print(render_figure(figure), file=out)
        if summary:
            print(render_summary(rows), file=out)
    return code


def cmd_run(config: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    sources = []
    for path in config.scripts:
        try:
            sources.append((path, Path(path).read_text(encoding="utf-8")))
        except (OSError, UnicodeDecodeError) as exc:
            print(f"{path}: {exc}", file=err)
            return EXIT_CONFIG
    return _execute(sources, config, out, err, summary=len(sources) > 1)


def cmd_corpus(config: RunConfig, out=sys.stdout, err=sys.stderr) -> int:
    sources = [(name, corpus_source(name)) for name in CORPUS]
    return _execute(sources, config, out, err, summary=True)


def cmd_parse(paths: list[str], out=sys.stdout, err=sys.stderr) -> int:
    code = EXIT_PASS
    for path in paths:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            print(f"{path}: {exc}", file=err)
            return EXIT_CONFIG
        try:
            script = parse(text)
        except ScriptError as exc:
            print(format_diagnostic(exc, path), file=err)
            code = EXIT_PARSE
            continue
        print(f"{path}: ok ({len(script.bindings)} bindings, {len(script.assertions)} assertions)", file=out)
    return code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuhrmann", description="Falsification tests for triangle-centre theorems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--trials", type=int, default=None, help="number of random triangles (default 10000)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--epsilon", type=float, default=1e-9)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--fixed", default=None, metavar='"x,y x,y x,y"', help="run one trial on this triangle")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--min-arc", type=float, default=0.15)
    common.add_argument("--allow-obtuse", action="store_true")

    run = sub.add_parser("run", parents=[common], help="run script files")
    run.add_argument("files", nargs="+")
    sub.add_parser("corpus", parents=[common], help="run the bundled scripts")
    check = sub.add_parser("parse", help="parse script files only")
    check.add_argument("files", nargs="+")
    return parser


def config_from_args(args) -> RunConfig:
    fixed = parse_fixed(args.fixed) if args.fixed is not None else None
    trials = args.trials
    if fixed is not None:
        if trials is not None and trials != 1:
            raise ConfigError("--fixed runs exactly one trial; drop --trials or set it to 1")
        trials = 1
    elif trials is None:
        trials = 10_000
    if args.jobs < 1:
        raise ConfigError("--jobs must be at least 1")
    if not 0 < args.epsilon <= 1e-2:
        raise ConfigError("--epsilon must lie in (0, 1e-2]")
    config = RunConfig(
        scripts=list(getattr(args, "files", [])),
        trials=trials,
        seed=args.seed,
        epsilon=args.epsilon,
        format=args.format,
        fixed=fixed,
        jobs=args.jobs,
        min_arc=args.min_arc,
        allow_obtuse=args.allow_obtuse,
    )
    config.sampler()
    return config


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "parse":
            return cmd_parse(args.files, out, err)
        config = config_from_args(args)
    except ConfigError as exc:
        print(f"fuhrmann: {exc}", file=err)
        return EXIT_CONFIG
    if args.command == "run":
        return cmd_run(config, out, err)
    return cmd_corpus(config, out, err)


if __name__ == "__main__":
    sys.exit(main())
