"""Exception types raised by the histeq package."""


class HisteqError(Exception):
    """Base class for all histeq errors."""


class EmptyHistogram(HisteqError):
    """Histogram with zero total pixels cannot be normalized."""


class ZeroMassSegment(HisteqError):
    """Requested statistic of a segment whose probability mass is zero."""


class LevelMismatch(HisteqError):
    """Image and lookup table disagree on the number of gray levels."""


class DimensionMismatch(HisteqError):
    """Two images being compared do not share shape or gray levels."""


class PnmError(HisteqError):
    """Base class for PNM codec errors; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class MalformedHeader(PnmError):
    pass


class TruncatedPayload(PnmError):
    pass


class UnsupportedMaxval(PnmError):
    pass


class SampleOutOfRange(PnmError):
    pass
