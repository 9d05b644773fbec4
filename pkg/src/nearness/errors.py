"""Exception hierarchy shared by every module of the package."""


class NearnessError(Exception):
    """Base class for all errors raised by :mod:`nearness`."""


class NotACover(NearnessError, ValueError):
    """A family of subsets is empty or does not cover the ground set."""


class GroundSetMismatch(NearnessError, ValueError):
    """Two operands live over different ground sets."""


class EmptyGenerators(NearnessError, ValueError):
    """A structure was requested from an empty set of generating covers."""


class GroundSetTooLarge(NearnessError, ValueError):
    """An exhaustive algorithm was asked to run beyond its size gate."""


class BudgetExceeded(NearnessError, ValueError):
    """A map enumeration would produce more maps than the allowed budget."""


class AlgorithmDisagreement(NearnessError):
    """The iterative and maximal reflectors returned different structures."""

    def __init__(self, iterative, maximal):
        super().__init__(
            f"reflectors disagree: iterative={iterative!r} maximal={maximal!r}"
        )
        self.iterative = iterative
        self.maximal = maximal


class ParseError(NearnessError, ValueError):
    """Malformed structure or map text. ``line`` is 1-based, or None."""

    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
