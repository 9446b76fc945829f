"""Exception hierarchy shared by all coverpoly modules."""

from __future__ import annotations


class CoverpolyError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(CoverpolyError, ValueError):
    pass


class FormatError(CoverpolyError, ValueError):
    pass


class InfeasibleRow(FormatError):
    """A covering matrix row is all zeros, so ``Ax >= 1`` has no solution."""

    def __init__(self, row: int):
        super().__init__(f"row {row} is all zeros")
        self.row = row


class NotPointed(CoverpolyError):
    pass


class EmptyInput(CoverpolyError, ValueError):
    pass


class NotMember(CoverpolyError, ValueError):
    pass


class NotVertex(CoverpolyError, ValueError):
    pass


class NotUpMonotone(CoverpolyError, ValueError):
    pass


class NonBinaryVertex(CoverpolyError, ValueError):
    pass


class RowSumNotTwo(CoverpolyError, ValueError):
    pass


class CapExceeded(CoverpolyError):
    pass


class MethodDisagreement(CoverpolyError):
    """Two adjacency tests returned different verdicts for the same pair.

    This indicates a bug, never bad user input.
    """

    def __init__(self, pair, verdicts: dict[str, bool]):
        self.pair = pair
        self.verdicts = dict(verdicts)
        super().__init__(f"adjacency methods disagree on {pair}: {self.verdicts}")
