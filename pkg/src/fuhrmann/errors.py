"""Exception hierarchy shared by the geometry, script and trial layers."""


class GeometryError(ValueError):
    """A construction cannot be carried out because its inputs are degenerate."""


class NonFiniteValue(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class DegenerateAngle(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class DegenerateConstruction(GeometryError):
    """A derived triangle collapsed.

    ``points`` keeps the computed (collapsed) vertices so callers can still
    inspect them.
    """

    def __init__(self, message, points=None):
        super().__init__(message)
        self.points = points


class DegenerateOperand(GeometryError):
    pass


class SamplerExhausted(RuntimeError):
    pass


class EvaluationError(TypeError):
    """A script applied a builtin to a value of the wrong kind."""

    def __init__(self, binding, message):
        super().__init__(f"{binding}: {message}" if binding else message)
        self.binding = binding
        self.detail = message
