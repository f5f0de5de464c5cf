"""Exception types raised by netentropy.

Every error derives from :class:`NetEntropyError`, which is itself a
``ValueError`` so callers that only care about bad input can catch that.
"""


class NetEntropyError(ValueError):
    """Base class for all netentropy errors."""


# graph ingestion
class MalformedLineError(NetEntropyError):
    def __init__(self, lineno, line):
        super().__init__(f"line {lineno}: expected two labels, got {line!r}")
        self.lineno = lineno
        self.line = line


class SelfLoopError(NetEntropyError):
    def __init__(self, lineno, label):
        super().__init__(f"line {lineno}: self-loop on {label!r}")
        self.lineno = lineno
        self.label = label


class EmptyInputError(NetEntropyError):
    pass


# metrics
class DisconnectedGraphError(NetEntropyError):
    pass


class TooFewNodesError(NetEntropyError):
    pass


class InvalidSampleSizeError(NetEntropyError):
    pass


# entropy
class InvalidLogBaseError(NetEntropyError):
    pass


class InvalidCountError(NetEntropyError):
    pass


class InvalidCoefficientError(NetEntropyError):
    pass


class InvalidDistributionError(NetEntropyError):
    pass


class NegativeEntropyError(NetEntropyError):
    pass


# dynamics
class InvalidQuantityError(NetEntropyError):
    pass


class InvalidIntervalError(NetEntropyError):
    pass


class InvalidRateError(NetEntropyError):
    pass


class InvalidMultiplierError(NetEntropyError):
    pass


class InvalidAgeError(NetEntropyError):
    pass


# generators
class InvalidDegreeError(NetEntropyError):
    pass


class InvalidProbabilityError(NetEntropyError):
    pass


class HierarchyOverflowError(NetEntropyError):
    pass
