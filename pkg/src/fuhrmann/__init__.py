"""Construct the orthocenter-reflection, arc-midpoint and Fuhrmann triangles
and falsification-test the identities relating their centres."""

from .centers import (
    Triangle,
    arc_measures,
    arc_midpoint,
    circumcenter,
    circumcircle,
    incenter,
    is_acute,
    orthocenter,
)
from .constructions import (
    double_reflection_triangle,
    fuhrmann_triangle,
    incenter_arc_triangle,
    reflected_orthocenter_triangle,
)
from .dsl import Script, ScriptError, format_diagnostic, parse
from .engine import SamplerConfig, ToleranceContext, evaluate, run_trials, sample_triangle
from .errors import (
    CoincidentPoints,
    DegenerateAngle,
    DegenerateConstruction,
    DegenerateOperand,
    DegenerateTriangle,
    EvaluationError,
    GeometryError,
    ParallelLines,
    SamplerExhausted,
)
from .kernel import Circle, Line, Point, Vector

__version__ = "0.1.0"
