"""Exception hierarchy.

Every domain error derives from :class:`DirCritError`; the CLI prints the
class name of whatever it catches, so names are part of the interface.
"""


class DirCritError(Exception):
    """Base class for all domain errors."""


# -- allowable sequence validation -------------------------------------------

class ValidationError(DirCritError):
    """An allowable-sequence axiom is violated.

    ``axiom`` is the number of the violated axiom (1-4), ``move`` the 1-based
    move index (or None) and ``pair`` the offending labels (or None).
    """

    axiom = 0

    def __init__(self, message, move=None, pair=None):
        super().__init__(message)
        self.move = move
        self.pair = pair


class NonPermutationRow(ValidationError):
    axiom = 1


class LastNotReversalOfFirst(ValidationError):
    axiom = 2


class NotBlockReversal(ValidationError):
    axiom = 3


class PairSwitchedTwice(ValidationError):
    axiom = 4


# -- sequence queries ---------------------------------------------------------

class OddPointCount(DirCritError):
    pass


class NotCentrallySymmetric(DirCritError):
    pass


class NoCrossingSwitch(DirCritError):
    pass


class OffsetMismatch(DirCritError):
    """Crossing moves of an even-near-critical sequence are not at the
    offsets its signature predicts."""


class UnknownLabel(DirCritError):
    pass


class TooFewLabels(DirCritError):
    pass


class SizeMismatch(DirCritError):
    pass


class InvalidSignature(DirCritError):
    pass


class DegenerateSignature(InvalidSignature):
    """A single crossing switch (two points) has no signature with t >= 2."""


# -- constructors and verifiers ----------------------------------------------

class InternalInconsistency(DirCritError):
    pass


class PreconditionViolated(DirCritError):
    pass


# -- exact geometry -----------------------------------------------------------

class DivisionByZero(DirCritError, ZeroDivisionError):
    pass


class MixedDiscriminants(DirCritError):
    pass


class AllCollinear(DirCritError):
    pass


class InvalidParams(DirCritError):
    pass


# -- classifier / search ------------------------------------------------------

class NotRealizable(DirCritError):
    pass


class BudgetExceeded(DirCritError):
    pass


class FormatError(DirCritError):
    """Malformed halfperiod or configuration file."""
