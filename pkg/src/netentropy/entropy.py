"""Network entropy ``H = C * log_L(n)`` and related quantities.

All logarithms are natural internally; ``log_L(x)`` is ``ln(x) / ln(L)``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import (
    InvalidCoefficientError,
    InvalidCountError,
    InvalidDistributionError,
    InvalidLogBaseError,
    InvalidRateError,
    NegativeEntropyError,
)

DISTRIBUTION_TOLERANCE = 1e-9


def _check_count(n, name="n", minimum=1):
    if not (n >= minimum) or math.isinf(n):
        raise InvalidCountError(f"{name} must be a finite number >= {minimum}, got {n}")


def _check_base(L):
    if not (L > 1) or math.isinf(L):
        raise InvalidLogBaseError(
            f"log base must be finite and > 1, got {L}; "
            "for a complete graph (L = 1) use the ideal benchmark ln(n)")


def _check_coefficient(C):
    if not 0 <= C <= 1:
        raise InvalidCoefficientError(f"clustering coefficient must lie in [0, 1], got {C}")


@dataclass(frozen=True)
class EntropyReport:
    """Entropy of a network with ``n`` nodes, path length ``L``, clustering ``C``.

    ``eta`` is the number of nested cluster generations ``log_L(n)``; ``H``
    is ``C * eta``; ``H_ideal`` is ``ln(n)``, the value for an idealized
    network with ``L = e`` and ``C = 1``.
    """

    n: float
    L: float
    C: float
    eta: float
    H: float
    H_ideal: float

    def as_dict(self) -> dict:
        return asdict(self)


def eta(n: float, L: float) -> float:
    """Number of cluster generations, ``log_L(n)``.

    >>> eta(27, 3)
    3.0
    """
    _check_count(n)
    _check_base(L)
    # exact for integer powers of an integer base, e.g. eta(27, 3) == 3.0
    if float(L).is_integer() and float(n).is_integer():
        k = round(math.log(n) / math.log(L))
        if int(L) ** k == int(n):
            return float(k)
    return math.log(n) / math.log(L)


def network_entropy(n: float, L: float, C: float) -> EntropyReport:
    """Evaluate ``H = C * log_L(n)``.

    Raises
    ------
    InvalidCountError
        ``n < 1``.
    InvalidLogBaseError
        ``L <= 1``; the formula is undefined for a complete graph.
    InvalidCoefficientError
        ``C`` outside ``[0, 1]``.
    """
    _check_count(n)
    _check_base(L)
    _check_coefficient(C)
    generations = eta(n, L)
    return EntropyReport(n=n, L=L, C=C, eta=generations, H=C * generations,
                         H_ideal=math.log(n))


def ideal_entropy(n: float) -> float:
    """Entropy of an idealized network, ``ln(n)``."""
    _check_count(n)
    return math.log(n)


@dataclass(frozen=True)
class Distribution:
    """A finite probability distribution."""

    probabilities: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probabilities)
        if not probs:
            raise InvalidDistributionError("distribution is empty")
        if any(not p >= 0 for p in probs):
            raise InvalidDistributionError("probabilities must be non-negative")
        total = math.fsum(probs)
        if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
            raise InvalidDistributionError(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        _check_count(n)
        return cls((1.0 / n,) * int(n))

    def __len__(self):
        return len(self.probabilities)


def shannon_entropy(d: Distribution | Sequence[float], r: float = 2.0,
                    K: float = 1.0) -> float:
    """``K * sum(-p * log_r(p))`` with ``0 * log 0 = 0``.

    The sum is negated so the result is non-negative and the uniform
    distribution over ``n`` outcomes gives ``K * log_r(n)``.
    """
    if not isinstance(d, Distribution):
        d = Distribution(tuple(d))
    _check_base(r)
    if not K > 0:
        raise InvalidCoefficientError(f"K must be positive, got {K}")
    # group equal probabilities so the uniform case is one multiplication
    counts: dict[float, int] = {}
    for p in d.probabilities:
        if p > 0:
            counts[p] = counts.get(p, 0) + 1
    total = math.fsum(-c * p * math.log(p) for p, c in counts.items())
    return K * total / math.log(r)


def conceptual_multiplier(H_social: float, H_conceptual: float) -> float:
    """Entropy of concepts shared across a society: the product of the two entropies."""
    if H_social < 0 or H_conceptual < 0:
        raise NegativeEntropyError("entropies must be non-negative")
    return H_social * H_conceptual


def value_delta(m: float, C: float, L: float, n1: float, A: float) -> float:
    """Change in process rate from growing a network of ``n1`` nodes by ``A``.

    Returns ``m * C * log_L(1 + A / n1)``, i.e. ``m * (H(n1 + A) - H(n1))``
    with ``L`` and ``C`` held fixed.
    """
    if not m >= 0:
        raise InvalidRateError(f"rate m must be non-negative, got {m}")
    _check_base(L)
    _check_coefficient(C)
    _check_count(n1, "n1")
    _check_count(A, "A", minimum=0)
    return m * C * math.log1p(A / n1) / math.log(L)
