"""
errors.py - Exception hierarchy raised by the lpbetti core modules.

The BLL catches these and turns them into (result, error_message) tuples;
the CLI turns the failing step into an exit code.
"""


class LetterplaceError(Exception):
    """Base class for every error raised by lpbetti."""


# --- Poset errors ---

class PosetError(LetterplaceError, ValueError):
    """Invalid poset input or query."""


class PosetParseError(PosetError):
    """A poset file line could not be understood."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DuplicateElementError(PosetError):
    pass


class UnknownElementError(PosetError):
    pass


class CycleError(PosetError):
    """The declared relations contain a cycle; `cycle` lists it."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        path = " < ".join(self.cycle + self.cycle[:1])
        super().__init__(f"cycle detected: {path}")


class EmptySubsetError(PosetError):
    pass


# --- Computation errors ---

class SizeGuardError(LetterplaceError):
    """An input exceeds a configured size guard (see lpbetti.config)."""


class FieldError(LetterplaceError, ValueError):
    pass


class ComplexError(LetterplaceError, ValueError):
    pass


class ConventionError(LetterplaceError, ValueError):
    pass


class NotAForestError(LetterplaceError, ValueError):
    pass


class InvariantError(LetterplaceError, AssertionError):
    """A proven identity failed to hold on computed data."""
