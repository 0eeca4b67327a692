"""Exception types shared across the package."""


class FlooditError(Exception):
    """Base class for all package-specific errors."""


class InputError(FlooditError, ValueError):
    """A caller supplied an invalid value (bad vertex, colour, border...)."""


class ParseError(InputError):
    """A text input (board or graph file) is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(FlooditError):
    """An input exceeds a hard implementation cap (e.g. palette size)."""


class BudgetExceededError(FlooditError):
    """A computation ran out of its state/time budget before finishing."""


class EnumerationLimitError(FlooditError):
    """An enumeration (e.g. spanning trees) produced more items than allowed."""


class ReconstructionError(FlooditError):
    """A reconstructed move sequence failed replay validation."""

    def __init__(self, message, sequence=None, final_colouring=None):
        super().__init__(message)
        self.sequence = sequence
        self.final_colouring = final_colouring
