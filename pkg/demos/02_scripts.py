"""
Writing a construction script
=============================

A script names the base triangle, binds derived objects with `let` and
states claims with `assert`. Here the claim is that the incenter is the
orthocenter of the arc-midpoint triangle, checked on one fixed triangle
and then on random ones.
"""

from fuhrmann import (
    Point, SamplerConfig, ScriptError, ToleranceContext, Triangle,
    circumcircle, evaluate, format_diagnostic, parse, run_trials,
)
from fuhrmann.dsl import format_script

SOURCE = """
triangle A B C
let I = incenter(A, B, C)
let Ma = arc_midpoint(A, B, C)
let Mb = arc_midpoint(B, C, A)
let Mc = arc_midpoint(C, A, B)
assert perpendicular(vec(Ma, I), vec(Mb, Mc)) : "MaI perp MbMc"
assert coincides(orthocenter(Ma, Mb, Mc), I) : "I is the orthocenter"
"""

script = parse(SOURCE)
print(format_script(script))

t = Triangle(Point(0, 0), Point(4, 0), Point(1, 3))
for outcome in evaluate(script, t, ToleranceContext(1e-9, circumcircle(t).radius)):
    print(outcome)

report = run_trials(script, SamplerConfig(seed=1, trials=2000), 1e-9)
print(report.verdict, [(r.passes, r.failures, f"{r.max_residual:.1e}") for r in report.assertions])

# mistakes are reported with the line and column
try:
    parse("triangle A B C\nlet H = orthocentre(A, B, C)\n")
except ScriptError as err:
    print(format_diagnostic(err, "<demo>"))
