"""Exception hierarchy.

Everything raised for bad input data derives from :class:`IvfssError`
(itself a ``ValueError``); numerical breakdowns derive from
:class:`NumericalError`. The CLI maps the first family to exit code 1 and
the second to exit code 3.
"""

from __future__ import annotations


class IvfssError(ValueError):
    """Malformed or inconsistent input data.

    ``row`` and ``col`` are zero-based grid coordinates, set when the error
    can be pinned to a single cell or row.
    """

    def __init__(self, message: str, *, row: int | None = None, col: int | None = None):
        super().__init__(message)
        self.row = row
        self.col = col

    def at(self, row: int | None, col: int | None = None, where: str = "") -> "IvfssError":
        """Return a copy of this error located at a grid cell."""
        text = str(self)
        if where:
            text = f"{where}: {text}"
        return type(self)(text, row=row, col=col)


class OutOfRange(IvfssError):
    pass


class Inverted(IvfssError):
    pass


class EmptyUniverse(IvfssError):
    pass


class EmptyParameters(IvfssError):
    pass


class DuplicateLabel(IvfssError):
    pass


class ShapeMismatch(IvfssError):
    pass


class UnknownLabel(IvfssError):
    pass


class UniverseTooSmall(IvfssError):
    pass


class LabelMismatch(IvfssError):
    """Two rankings do not cover the same label set."""


class MalformedSyntax(IvfssError):
    pass


class SchemaViolation(IvfssError):
    pass


class MalformedCell(IvfssError):
    pass


class RaggedRow(IvfssError):
    pass


class UnknownFixture(IvfssError):
    pass


class NumericalError(ArithmeticError):
    pass


class NonSymmetric(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass
