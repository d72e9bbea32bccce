"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class MathieuError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatch(MathieuError):
    pass


class DimensionMismatch(MathieuError):
    pass


class AlgebraMismatch(MathieuError):
    pass


class BadParameter(MathieuError):
    pass


class NotAssociative(MathieuError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
        self.triple = (i, j, k)


class BadUnit(MathieuError):
    def __init__(self, i: int):
        super().__init__(f"one does not act as identity on basis element e{i}")
        self.index = i


class NotAnIdeal(MathieuError):
    pass


class SolveFailed(MathieuError):
    """Internal inconsistency: a solve that must succeed did not."""


class PreconditionFailed(MathieuError):
    pass


class TooLarge(MathieuError):
    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: {count} exceeds the configured cap {cap}")
        self.count = count
        self.cap = cap


class InfiniteRing(MathieuError):
    pass


class SpecMismatch(MathieuError):
    pass


class NegativeValue(MathieuError):
    pass


class SchemaError(MathieuError):
    pass
