"""Exception hierarchy shared by all modules."""


class PoissonColorError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(PoissonColorError, ZeroDivisionError):
    pass


class FieldMismatch(PoissonColorError, ValueError):
    pass


class SpecMismatch(PoissonColorError, ValueError):
    """Group elements or algebra elements from incompatible parents."""


class BicharacterError(PoissonColorError, ValueError):
    """Raised by validation with the full list of violated constraints."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid bicharacter: {lines}")


class StructureError(PoissonColorError, ValueError):
    """A structurally malformed algebra (bad indices, grading, characteristic)."""


class AmbientMismatch(PoissonColorError, ValueError):
    pass


class AlphaOutOfRange(PoissonColorError, ValueError):
    pass


class SourceNotInSigma(PoissonColorError, ValueError):
    pass


class TargetNotInSigma(PoissonColorError, ValueError):
    pass


class SameClass(PoissonColorError, ValueError):
    pass


class ZeroGenerator(PoissonColorError, ValueError):
    pass


class OracleNeedsFiniteField(PoissonColorError, ValueError):
    pass


class HypothesesNotMet(PoissonColorError):
    """Some structural hypothesis of a theorem fails; ``failed`` names them."""

    def __init__(self, failed):
        self.failed = tuple(failed)
        super().__init__("hypotheses not met: " + ", ".join(self.failed))


class CriterionHypothesesNotMet(HypothesesNotMet):
    pass


class ParseError(PoissonColorError, ValueError):
    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path or '/'}: {message}")


class ValidationError(ParseError):
    pass


class UnknownExample(PoissonColorError, KeyError):
    pass
