"""Evaluate scripts on triangles and aggregate randomized trials.

Residuals are dimensionless so one tolerance works across the sampler's
whole scale range:

* perpendicular: ``|u.v| / (|u| |v|)``
* coincides: ``|p - q| / R`` with R the base triangle's circumradius
* equal: ``|a - b| / max(1, |a|, |b|)``
* on_circle: ``||p - center| - radius| / radius``

Trials draw their triangle from a generator seeded by ``(seed, trial_index)``
alone, so a report does not depend on evaluation order or worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from . import centers
from .centers import Triangle
from .dsl import ASSERTIONS, BUILTINS, Assertion, Binding, Expr, Ident, Number, Script, format_expr
from .errors import (
    DegenerateOperand,
    DegenerateTriangle,
    EvaluationError,
    GeometryError,
    NonFiniteValue,
    SamplerExhausted,
)
from .kernel import (
    FLOOR,
    Circle,
    Line,
    Point,
    Vector,
    angle_at,
    distance,
    dot,
    foot,
    intersect_lines,
    line_through,
    midpoint,
    reflect,
    vector_between,
)

MAX_REJECTIONS = 10_000


@dataclass(frozen=True)
class ToleranceContext:
    epsilon: float = 1e-9
    scale: float = 1.0

    def __post_init__(self):
        if not 0 < self.epsilon <= 1e-2:
            raise ValueError(f"epsilon must lie in (0, 1e-2], got {self.epsilon}")
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    residual: float


# ---------------------------------------------------------------- checks


def check_perpendicular(u: Vector, v: Vector, tol: ToleranceContext) -> CheckResult:
    nu, nv = u.norm(), v.norm()
    floor = FLOOR * tol.scale
    if nu <= floor or nv <= floor:
        raise DegenerateOperand("perpendicularity of a zero-length vector is undefined")
    residual = abs(dot(u, v)) / (nu * nv)
    return CheckResult(residual <= tol.epsilon, residual)


def check_coincides(p: Point, q: Point, tol: ToleranceContext) -> CheckResult:
    residual = distance(p, q) / tol.scale
    return CheckResult(residual <= tol.epsilon, residual)


def check_equal(a: float, b: float, tol: ToleranceContext) -> CheckResult:
    residual = abs(a - b) / max(1.0, abs(a), abs(b))
    return CheckResult(residual <= tol.epsilon, residual)


def check_on_circle(p: Point, c: Circle, tol: ToleranceContext) -> CheckResult:
    residual = abs(distance(p, c.center) - c.radius) / c.radius
    return CheckResult(residual <= tol.epsilon, residual)


CHECKS = {
    "perpendicular": check_perpendicular,
    "coincides": check_coincides,
    "equal": check_equal,
    "on_circle": check_on_circle,
}


# ---------------------------------------------------------------- builtins


def _tri(p, q, r):
    return Triangle(p, q, r)


def _div(a, b):
    if b == 0:
        raise DegenerateOperand("division by zero")
    return a / b


BUILTIN_IMPLS = {
    "orthocenter": lambda p, q, r: centers.orthocenter(_tri(p, q, r)),
    "incenter": lambda p, q, r: centers.incenter(_tri(p, q, r)),
    "circumcenter": lambda p, q, r: centers.circumcenter(_tri(p, q, r)),
    "circumradius": lambda p, q, r: centers.circumcircle(_tri(p, q, r)).radius,
    "circumcircle": lambda p, q, r: centers.circumcircle(_tri(p, q, r)),
    "arc_midpoint": lambda p, q, r: centers.arc_midpoint(_tri(p, q, r), 0),
    "reflect": reflect,
    "line": line_through,
    "intersect": intersect_lines,
    "foot": foot,
    "midpoint": midpoint,
    "vec": vector_between,
    "dot": dot,
    "length": lambda v: v.norm(),
    "dist": distance,
    # vertex is the middle argument: angle(B, A, C) is the angle at A
    "angle": lambda p, o, q: angle_at(o, p, q),
    "sin": math.sin,
    "cos": math.cos,
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": _div,
}

KIND_NAMES = {"P": "Point", "V": "Vector", "L": "Line", "C": "Circle", "S": "Scalar"}
_KIND_TYPES = {"P": Point, "V": Vector, "L": Line, "C": Circle, "S": float}


def kind_of(value) -> str:
    for kind, typ in _KIND_TYPES.items():
        if isinstance(value, typ):
            return kind
    raise TypeError(f"not a script value: {value!r}")


class _Unavailable(Exception):
    """An expression depends on a binding that failed to construct."""


@dataclass(frozen=True)
class Outcome:
    index: int
    label: str
    status: str  # "pass", "fail" or "skip"
    residual: float | None = None
    reason: str | None = None


def _check_kinds(values, kinds, what, origin):
    for pos, (value, want) in enumerate(zip(values, kinds), start=1):
        got = kind_of(value)
        if got != want:
            raise EvaluationError(
                origin,
                f"{what} argument {pos}: expected {KIND_NAMES[want]}, got {KIND_NAMES[got]}",
            )


def _eval(expr: Expr, env: dict, origin: str):
    if isinstance(expr, Number):
        return expr.value
    if isinstance(expr, Ident):
        value = env[expr.name]
        if isinstance(value, GeometryError):
            raise _Unavailable(expr.name)
        return value
    args = [_eval(a, env, origin) for a in expr.args]
    _check_kinds(args, BUILTINS[expr.name][0], expr.name, origin)
    result = BUILTIN_IMPLS[expr.name](*args)
    if isinstance(result, float) and not math.isfinite(result):
        raise NonFiniteValue(f"{expr.name} produced {result}")
    return float(result) if isinstance(result, (int, np.floating)) else result


def assertion_label(stmt: Assertion, index: int) -> str:
    if stmt.label:
        return stmt.label
    return f"{stmt.kind}({', '.join(format_expr(a) for a in stmt.args)})"


def evaluate(script: Script, base: Triangle, tol: ToleranceContext) -> list[Outcome]:
    """Run every statement of ``script`` on ``base``; one Outcome per assertion.

    A binding whose construction is degenerate is remembered as failed and
    every assertion that depends on it is skipped; the other assertions still
    run. Wrong value kinds raise :class:`EvaluationError`.
    """
    env: dict = dict(zip(script.triangle, base.vertices))
    outcomes = []
    for stmt in script.statements:
        if isinstance(stmt, Binding):
            try:
                env[stmt.name] = _eval(stmt.expr, env, stmt.name)
            except _Unavailable as exc:
                env[stmt.name] = GeometryError(f"depends on degenerate binding '{exc}'")
            except GeometryError as exc:
                env[stmt.name] = exc
            continue
        index = len(outcomes) + 1
        label = assertion_label(stmt, index)
        origin = f"assertion {index}"
        try:
            args = [_eval(a, env, origin) for a in stmt.args]
            _check_kinds(args, ASSERTIONS[stmt.kind], stmt.kind, origin)
            result = CHECKS[stmt.kind](*args, tol)
        except _Unavailable as exc:
            outcomes.append(Outcome(index, label, "skip", reason=f"degenerate binding '{exc}'"))
            continue
        except GeometryError as exc:
            outcomes.append(Outcome(index, label, "skip", reason=str(exc)))
            continue
        status = "pass" if result.passed else "fail"
        outcomes.append(Outcome(index, label, status, result.residual))
    return outcomes


# ---------------------------------------------------------------- sampling


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 42
    trials: int = 10_000
    min_arc: float = 0.15
    transform: bool = True
    allow_obtuse: bool = False

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if not 0 < self.min_arc < 2 * math.pi / 3:
            raise ValueError(f"min_arc must lie in (0, 2*pi/3), got {self.min_arc}")


def _arcs_ok(arcs: np.ndarray, cfg: SamplerConfig) -> bool:
    if cfg.allow_obtuse:
        return bool(np.all(arcs > cfg.min_arc))
    return bool(np.all((arcs > cfg.min_arc) & (arcs < math.pi - cfg.min_arc)))


def sample_points(cfg: SamplerConfig, trial_index: int) -> tuple[Point, Point, Point]:
    """The three vertices drawn for one trial (not yet checked for degeneracy)."""
    if not 0 <= trial_index < cfg.trials:
        raise IndexError(f"trial index {trial_index} outside [0, {cfg.trials})")
    rng = np.random.default_rng([cfg.seed, trial_index])
    for _ in range(MAX_REJECTIONS):
        theta = np.sort(rng.uniform(0.0, 2 * math.pi, 3))
        arcs = np.array([theta[1] - theta[0], theta[2] - theta[1], 2 * math.pi - theta[2] + theta[0]])
        if _arcs_ok(arcs, cfg):
            break
    else:
        raise SamplerExhausted(
            f"no admissible triangle after {MAX_REJECTIONS} rejections (min_arc={cfg.min_arc})"
        )
    xs, ys = np.cos(theta), np.sin(theta)
    if cfg.transform:
        scale = rng.uniform(0.5, 10.0)
        phi = rng.uniform(0.0, 2 * math.pi)
        tx, ty = rng.uniform(-100.0, 100.0, 2)
        c, s = math.cos(phi), math.sin(phi)
        xs, ys = scale * (c * xs - s * ys) + tx, scale * (s * xs + c * ys) + ty
    return tuple(Point(float(x), float(y)) for x, y in zip(xs, ys))


def sample_triangle(cfg: SamplerConfig, trial_index: int) -> Triangle:
    return Triangle(*sample_points(cfg, trial_index))


# ---------------------------------------------------------------- reports


@dataclass
class AssertionRecord:
    index: int
    label: str
    passes: int = 0
    failures: int = 0
    degenerate_skips: int = 0
    max_residual: float | None = None
    worst_trial_index: int | None = None
    worst_triangle: tuple[Point, Point, Point] | None = None
    first_failure_index: int | None = None

    def add(self, outcome: Outcome, trial_index: int, points):
        if outcome.status == "skip":
            self.degenerate_skips += 1
            return
        if outcome.status == "pass":
            self.passes += 1
        else:
            self.failures += 1
            if self.first_failure_index is None or trial_index < self.first_failure_index:
                self.first_failure_index = trial_index
        self._consider(outcome.residual, trial_index, points)

    def _consider(self, residual, trial_index, points):
        if residual is None:
            return
        if (
            self.max_residual is None
            or residual > self.max_residual
            or (residual == self.max_residual and trial_index < self.worst_trial_index)
        ):
            self.max_residual = residual
            self.worst_trial_index = trial_index
            self.worst_triangle = tuple(points)

    def merge(self, other: AssertionRecord):
        self.passes += other.passes
        self.failures += other.failures
        self.degenerate_skips += other.degenerate_skips
        if other.first_failure_index is not None and (
            self.first_failure_index is None or other.first_failure_index < self.first_failure_index
        ):
            self.first_failure_index = other.first_failure_index
        self._consider(other.max_residual, other.worst_trial_index, other.worst_triangle or ())


@dataclass
class TrialReport:
    script: str
    seed: int
    trials: int
    epsilon: float
    expect: str
    degenerate_rejections: int
    assertions: list[AssertionRecord]
    verdict: str = "fail"
    notes: list[str] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self.assertions)

    @property
    def effective(self) -> bool:
        return any(r.passes + r.failures for r in self.assertions)

    def skip_fraction(self) -> float:
        """Largest share of trials any single assertion had to skip."""
        worst = max((r.degenerate_skips for r in self.assertions), default=0)
        return max(worst, self.degenerate_rejections) / self.trials

    def to_dict(self) -> dict:
        out = {
            "script": self.script,
            "seed": self.seed,
            "trials": self.trials,
            "epsilon": self.epsilon,
            "expect": self.expect,
            "verdict": self.verdict,
            "degenerate_rejections": self.degenerate_rejections,
            "assertions": [],
            "notes": list(self.notes),
        }
        for r in self.assertions:
            rec = asdict(r)
            rec["worst_triangle"] = (
                None if r.worst_triangle is None else [[p.x, p.y] for p in r.worst_triangle]
            )
            out["assertions"].append(rec)
        return out


def _decide(report: TrialReport):
    if not report.effective:
        report.verdict = "fail"
        report.notes.append("no effective trials")
        return
    if report.expect == "pass":
        report.verdict = "pass" if report.failures == 0 else "fail"
    else:
        report.verdict = "pass" if report.failures > 0 else "fail"


def _run_chunk(script: Script, cfg: SamplerConfig, epsilon: float, start: int, stop: int, fixed=None):
    records = [AssertionRecord(i + 1, assertion_label(a, i + 1)) for i, a in enumerate(script.assertions)]
    rejections = 0
    for k in range(start, stop):
        points = tuple(fixed) if fixed is not None else sample_points(cfg, k)
        try:
            base = Triangle(*points)
            scale = centers.circumcircle(base).radius
        except DegenerateTriangle:
            rejections += 1
            for r in records:
                r.degenerate_skips += 1
            continue
        for rec, outcome in zip(records, evaluate(script, base, ToleranceContext(epsilon, scale))):
            rec.add(outcome, k, points)
    return records, rejections


def run_trials(
    script: Script,
    cfg: SamplerConfig,
    epsilon: float = 1e-9,
    *,
    name: str = "<script>",
    jobs: int = 1,
    fixed: Sequence[Point] | None = None,
) -> TrialReport:
    """Evaluate ``script`` on ``cfg.trials`` sampled triangles (or one fixed one).

    With ``jobs > 1`` contiguous blocks of trial indices go to worker
    processes; merging is order-independent, so the report is identical to a
    sequential run.
    """
    ToleranceContext(epsilon)
    if fixed is not None:
        if cfg.trials != 1:
            raise ValueError("a fixed triangle runs exactly one trial")
        fixed = tuple(fixed)
    if jobs <= 1 or cfg.trials < 2 or fixed is not None:
        chunks = [_run_chunk(script, cfg, epsilon, 0, cfg.trials, fixed)]
    else:
        n = min(jobs, cfg.trials)
        bounds = [cfg.trials * i // n for i in range(n + 1)]
        with ProcessPoolExecutor(max_workers=n) as pool:
            futures = [
                pool.submit(_run_chunk, script, cfg, epsilon, bounds[i], bounds[i + 1]) for i in range(n)
            ]
            chunks = [f.result() for f in futures]
    records, rejections = chunks[0]
    for other, rej in chunks[1:]:
        for mine, theirs in zip(records, other):
            mine.merge(theirs)
        rejections += rej
    report = TrialReport(
        script=name,
        seed=cfg.seed,
        trials=cfg.trials,
        epsilon=epsilon,
        expect=script.expectation,
        degenerate_rejections=rejections,
        assertions=records,
    )
    _decide(report)
    return report
