"""Exception hierarchy shared by all homhopf modules."""


class HomHopfError(Exception):
    pass


class DimensionMismatch(HomHopfError):
    pass


class SingularMap(HomHopfError):
    """A linear map that was required to be invertible is rank deficient."""


class SingularQ(SingularMap):
    pass


class NonBijective(HomHopfError):
    """A structure map required to be bijective is not."""


class NonBijectiveAlpha(NonBijective):
    pass


class NonBijectiveAntipode(NonBijective):
    pass


class PrerequisiteFailed(HomHopfError):
    """A construction was attempted on data whose entry checks fail.

    Carries the failing AxiomReport as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotAnEndomorphism(HomHopfError):
    """Twisting was attempted with a map that does not commute with the structure."""

    def __init__(self, axiom, witness, lhs=None, rhs=None):
        super().__init__(f"endomorphism compatibility {axiom!r} fails at {witness}")
        self.axiom = axiom
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs


class IncompatibleEndomorphisms(NotAnEndomorphism):
    pass


class BraidConditionFailed(HomHopfError):
    def __init__(self, witness):
        super().__init__(f"braid condition fails at basis triple {witness}")
        self.witness = witness


class TwistorCheckFailed(PrerequisiteFailed):
    pass


class UnitalActionMissing(HomHopfError):
    """The unit of the base does not act as the carrier structure map."""

    def __init__(self, witness=None):
        super().__init__(f"unit action identity fails (witness {witness})")
        self.witness = witness


class CompatibilityFailed(HomHopfError):
    def __init__(self, witness, lhs=None, rhs=None):
        super().__init__(f"module compatibility fails at basis triple {witness}")
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs


class QTCheckFailed(PrerequisiteFailed):
    pass


class DimensionTooLarge(HomHopfError):
    pass


class ConsistencyError(HomHopfError):
    """An identity that is a theorem for valid input failed; the input is inconsistent."""


class ParseError(HomHopfError):
    def __init__(self, message, line=None, column=None, path=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}, column {column})"
        elif path:
            loc = f" (at {path})"
        super().__init__(message + loc)
        self.line = line
        self.column = column
        self.path = path


class ValidationError(HomHopfError):
    """Structurally well-formed input violating a documented invariant."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        super().__init__("; ".join(violations))
        self.violations = list(violations)
