"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: config errors -> 2, data errors -> 3,
numerical errors -> 4, degenerate estimates -> 5.
"""


class SemicrError(Exception):
    """Base class for all package errors."""


class ConfigError(SemicrError):
    """Invalid run configuration or config file."""


class SchemaError(SemicrError):
    """Input file does not match the declared covariate schema."""


class RowValidationError(SemicrError):
    """A data row violates an invariant; carries the zero-based row index."""

    def __init__(self, row_index, message):
        self.row_index = row_index
        super().__init__(f"row {row_index}: {message}")


class UnsupportedModeError(SemicrError):
    """Operation not defined for the dataset's terminal-event mode."""


class InitializationError(SemicrError):
    """Priors cannot be initialized from the data (e.g. too few events)."""


class NumericalError(SemicrError):
    """Non-finite or underflowed quantity where a finite one is required."""


class DegenerateEstimateError(SemicrError):
    """Estimate unusable (e.g. empty conditioning stratum)."""


class InsufficientDrawsError(SemicrError):
    """Too few posterior draws for the requested diagnostic."""
