from __future__ import annotations


class GBlocksError(ValueError):
    """Base class for every data or invariant error raised by gblocks."""


class GroupError(GBlocksError):
    pass


class CyclotomicError(GBlocksError):
    pass


class CategoryError(GBlocksError):
    def __init__(self, invariant: str, detail: str) -> None:
        super().__init__(f"{invariant}: {detail}")
        self.invariant = invariant
        self.detail = detail


class CoverError(GBlocksError):
    pass


class LabelingError(GBlocksError):
    pass


class ReconstructionError(GBlocksError):
    pass
