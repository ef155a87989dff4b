"""Exception hierarchy for the calculus, QTM and compiler modules."""


class QpcError(Exception):
    """Base class for every error raised by this package."""


# State errors
class PrefixTooLong(QpcError):
    pass


class LengthMismatch(QpcError):
    pass


class TooLarge(QpcError):
    pass


# Term errors
class InvalidTerm(QpcError):
    """Raised by eval when validate reports diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else None
        message = f"{first.path}: {first.message}" if first else "invalid term"
        if len(self.diagnostics) > 1:
            message += f" (+{len(self.diagnostics) - 1} more)"
        super().__init__(message)


class NotInvertible(QpcError):
    pass


class ParseError(QpcError):
    """Syntax error in a term, state or QTM spec file."""


# Standard library errors
class UnknownGate(QpcError):
    pass


class EmptyList(QpcError):
    pass


class IncompleteFamily(QpcError):
    pass


class NotBijective(QpcError):
    pass


# QTM errors
class HeadOutOfRegion(QpcError):
    pass


class NotSimultaneous(QpcError):
    pass


class NotStationary(QpcError):
    pass


class NotClean(QpcError):
    pass


class TimeBoundExceeded(QpcError):
    pass


class InvalidCode(QpcError):
    pass


class UnsupportedRow(QpcError):
    pass


# CLI
class CheckFailed(QpcError):
    """A check ran and reported a violation; its diagnostics are already reported."""
