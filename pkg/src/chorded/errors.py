"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed caller input: bad labels, unknown vertex ids, empty ideals."""


class PurityError(ValueError):
    """An operation that requires a pure d-dimensional complex got something else."""


class ShapeError(ValueError):
    """Matrix/vector dimension mismatch."""


class ParseError(ValueError):
    """Facet-file syntax error, carrying the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CapExceeded(RuntimeError):
    """A configured enumeration cap would be exceeded.

    Callers must treat this as "inconclusive", never as a negative verdict.
    """

    def __init__(self, message: str, needed: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.cap = cap
