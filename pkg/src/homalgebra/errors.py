"""Exception types shared across the package."""


class HomAlgebraError(Exception):
    """Base class for all errors raised by this package."""


# --- scalar field -----------------------------------------------------------

class ZeroDenominator(HomAlgebraError):
    """A rational function was built with a zero denominator polynomial."""


class DivisionByZero(HomAlgebraError):
    """Division of scalars by the zero scalar."""


class SpecializedDenominatorZero(HomAlgebraError):
    """A denominator vanished at the requested parameter values.

    Usually signals that a declared nonzero assumption was violated.
    """


class UnboundParameter(HomAlgebraError):
    """A parameter occurring in a scalar was missing from the bindings."""


# --- linear algebra / algebra core ------------------------------------------

class DimensionMismatch(HomAlgebraError):
    """Vector, map or algebra dimensions do not agree."""


class SingularMap(HomAlgebraError):
    """Inversion of a linear map whose determinant is the zero scalar."""


class MissingTwistMap(HomAlgebraError):
    """An operation needed the twisting map but the algebra has none."""


class NotEndomorphism(HomAlgebraError):
    """Twist refused: the supplied map is not an algebra endomorphism."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# --- identities --------------------------------------------------------------

class UnknownIdentity(HomAlgebraError):
    """No builtin identity with the requested name."""


class NotMultilinear(HomAlgebraError):
    """Basis-evaluation strategy requested for a non-multilinear identity."""


class UnboundVariable(HomAlgebraError):
    """An identity variable was missing from the bindings."""


# --- parsing / files ----------------------------------------------------------

class ParseError(HomAlgebraError):
    """Syntax error with a precise input position."""

    def __init__(self, message, offset, line, column, expected=None, found=None):
        super().__init__(message)
        self.offset = offset
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found

    def __str__(self):
        return "%s (line %d, column %d)" % (self.args[0], self.line, self.column)


class UndeclaredParameter(ParseError):
    """An identifier in a scalar expression is not a declared parameter."""


class ArityError(ParseError):
    """mu/al applied to the wrong number of arguments."""


class ValidationError(HomAlgebraError):
    """An algebra file parsed but violates the format's invariants."""


class UnknownKey(HomAlgebraError):
    """No catalog entry with the requested key."""
