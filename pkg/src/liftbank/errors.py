"""Exception types shared across the package."""


class LiftbankError(Exception):
    """Base class for all library errors."""


class EmptySupport(LiftbankError):
    """Support/order/radius queried on the zero polynomial."""


class NotUnimodular(LiftbankError):
    """Operation requires determinant identically 1."""


class NotIrreducible(LiftbankError):
    """Operation requires an irreducible lifting cascade."""


class NotAdmissible(LiftbankError):
    """Cascade does not belong to the required group lifting structure."""


class NotWSDelayMinimized(LiftbankError):
    """Input bank is not whole-sample symmetric with delays (0, -1)."""


class NotHSConcentric(LiftbankError):
    """Input bank is not concentric half-sample symmetric."""


class FactorizationStuck(LiftbankError):
    """Internal-logic breach: a peel step could not be solved on input
    that passed the preconditions."""


class DCZero(LiftbankError):
    """Base lowpass DC response is zero; DC normalization impossible."""


class NotDyadic(LiftbankError):
    """Reversible mode requires dyadic lifting filters and K = 1."""


class NonIntegerInput(LiftbankError):
    """Reversible mode requires integer-valued signals."""


class BaseNotIdentity(LiftbankError):
    """Operation requires a fully factored cascade (base = I)."""


class ParseError(LiftbankError):
    """Malformed bank or cascade file."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" at line {line}"
            if column is not None:
                loc += f", column {column}"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class DuplicateTap(ParseError):
    """Same tap index listed twice in one filter block."""


class ZeroTap(ParseError):
    """Explicit zero coefficient; canonical files store no zeros."""
