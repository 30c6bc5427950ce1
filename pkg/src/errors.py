"""
Exception hierarchy for the speckle monitoring toolkit.

Every error is also a ValueError so callers that only guard against
ValueError keep working.
"""

from typing import Optional


class IlsiError(ValueError):
    """Base class for all toolkit errors."""


class ImageFormatError(IlsiError):
    """An image file could not be decoded."""


class PgmHeaderError(ImageFormatError):
    """Malformed PGM header field."""

    def __init__(self, field: str, offset: int, detail: str = ""):
        self.field = field
        self.offset = offset
        message = f"PGM header: bad {field} at byte offset {offset}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class PgmMaxvalError(ImageFormatError):
    """PGM maxval other than 255."""

    def __init__(self, maxval: int, offset: int):
        self.maxval = maxval
        self.offset = offset
        super().__init__(
            f"PGM header: maxval {maxval} at byte offset {offset} is unsupported (need 255)"
        )


class PgmTruncatedError(ImageFormatError):
    """PGM payload shorter than width x height."""

    def __init__(self, expected: int, actual: int, offset: int):
        self.expected = expected
        self.actual = actual
        self.offset = offset
        super().__init__(
            f"PGM payload truncated: expected {expected} bytes from offset {offset}, "
            f"found {actual}"
        )


class RoiError(IlsiError):
    """Region of interest invalid or outside the image."""


class KernelError(IlsiError):
    """Kernel size invalid or larger than the window."""


class SchemaMismatchError(IlsiError):
    """Attribute names of a vector and a model/params do not agree."""

    def __init__(self, expected, actual, context: str = ""):
        self.expected = list(expected)
        self.actual = list(actual)
        where = f"{context}: " if context else ""
        first_diff = next(
            (i for i, (a, b) in enumerate(zip(self.expected, self.actual)) if a != b),
            min(len(self.expected), len(self.actual)),
        )
        super().__init__(
            f"{where}schema mismatch ({len(self.expected)} expected attributes, "
            f"{len(self.actual)} given; first difference at position {first_diff})"
        )


class DatasetError(IlsiError):
    """Dataset too small or otherwise unusable for the requested operation."""


class CsvFormatError(IlsiError):
    """CSV file could not be parsed."""

    def __init__(self, path: str, line: int, detail: str, column: Optional[str] = None):
        self.path = path
        self.line = line
        self.column = column
        where = f"{path}:{line}"
        if column:
            where += f" column '{column}'"
        super().__init__(f"{where}: {detail}")


class TrainingError(IlsiError):
    """Classifier training preconditions not met."""


class StreamError(IlsiError):
    """Frame stream empty or out of order."""


class TrendError(IlsiError):
    """Trend fitting or evaluation preconditions not met."""


class ModelFormatError(IlsiError):
    """Saved model document unreadable or of an unknown version."""
