"""Exponential growth rates, entropy dating and glottochronology arithmetic.

Rates are continuous: a quantity growing at rate ``m`` per unit multiplies
by ``exp(m * t)`` over ``t`` units. Converting a rate to another time unit
is a plain rescaling (``m`` per year is ``10 * m`` per decade).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Literal

from .errors import (
    InvalidAgeError,
    InvalidIntervalError,
    InvalidMultiplierError,
    InvalidQuantityError,
    InvalidRateError,
)

# length of each unit in years
TIME_UNITS = {
    "year": 1.0,
    "decade": 10.0,
    "millennium": 1_000.0,
    "kyr": 1_000.0,
    "Myr": 1_000_000.0,
}


def convert_rate(m: float, from_unit: str, to_unit: str) -> float:
    """Rescale a continuous rate, e.g. per year to per decade."""
    try:
        return m * TIME_UNITS[to_unit] / TIME_UNITS[from_unit]
    except KeyError as exc:
        raise ValueError(f"unknown time unit {exc.args[0]!r}; "
                         f"choose from {sorted(TIME_UNITS)}") from None


@dataclass(frozen=True)
class RateResult:
    """Exponential rate ``m`` per ``time_unit`` observed over ``window``."""

    m: float
    time_unit: str
    window: tuple[float, float]

    def __post_init__(self):
        if not math.isfinite(self.m):
            raise InvalidRateError(f"rate must be finite, got {self.m}")
        t1, t2 = self.window
        if not t2 > t1:
            raise InvalidIntervalError(f"window end {t2} must follow start {t1}")

    def per(self, unit: str) -> float:
        return convert_rate(self.m, self.time_unit, unit)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["window"] = list(self.window)
        return d


@dataclass(frozen=True)
class DatingResult:
    """Estimated duration of a growth process.

    ``interpretation`` records which formula produced ``duration``:
    ``"exponential"`` solves ``q_end = q_start * exp(m t)``; ``"paper-linear"``
    is ``H_end / m``.
    """

    duration: float
    interpretation: Literal["exponential", "paper-linear"]
    inputs: dict = field(default_factory=dict)
    time_unit: str = "year"

    def __post_init__(self):
        if not self.duration >= 0:
            raise InvalidIntervalError(f"duration must be non-negative, got {self.duration}")

    def as_dict(self) -> dict:
        return asdict(self)


def _positive(value, name, error=InvalidQuantityError):
    if not (value > 0) or math.isinf(value):
        raise error(f"{name} must be a finite positive number, got {value}")


def exponential_rate(q1: float, q2: float, t: float, time_unit: str = "year",
                     start: float = 0.0) -> RateResult:
    """Rate ``m`` such that ``q2 = q1 * exp(m * t)``.

    Works for node counts and for entropies alike. ``start`` only positions
    the reported window ``(start, start + t)``.
    """
    _positive(q1, "q1")
    _positive(q2, "q2")
    _positive(t, "t", InvalidIntervalError)
    if time_unit not in TIME_UNITS:
        raise ValueError(f"unknown time unit {time_unit!r}")
    # log of the ratio >= 1, negated for decline, keeps swap(q1, q2) == -m exactly
    m = math.log(q2 / q1) / t if q2 >= q1 else -math.log(q1 / q2) / t
    return RateResult(m, time_unit, (start, start + t))


def process_rate(m: float, H: float) -> float:
    """Rate of a networked process, ``m * H``."""
    return m * H


def date_duration(m: float, q_start: float, q_end: float,
                  time_unit: str = "year") -> DatingResult:
    """Time for a quantity to grow from ``q_start`` to ``q_end`` at rate ``m``.

    Solves ``q_end = q_start * exp(m t)`` for ``t``; the duration is in the
    time unit ``m`` is expressed in.
    """
    _positive(m, "m", InvalidRateError)
    _positive(q_start, "q_start")
    _positive(q_end, "q_end")
    if q_end < q_start:
        raise InvalidQuantityError("q_end must not be smaller than q_start")
    return DatingResult(math.log(q_end / q_start) / m, "exponential",
                        {"m": m, "q_start": q_start, "q_end": q_end}, time_unit)


def paper_linear_duration(m: float, H_end: float, time_unit: str = "year") -> DatingResult:
    """Duration ``H_end / m``, the arithmetic behind the 995 Myr neuronal estimate.

    This is not the solution of the exponential growth law; use
    :func:`date_duration` for that. The result is tagged ``"paper-linear"``.
    """
    _positive(m, "m", InvalidRateError)
    _positive(H_end, "H_end")
    return DatingResult(H_end / m, "paper-linear", {"m": m, "H_end": H_end}, time_unit)


def basal_rate(observed: float, multiplier: float) -> float:
    """Per-node rate before network amplification: ``observed / multiplier``."""
    _positive(multiplier, "multiplier", InvalidMultiplierError)
    return observed / multiplier


def glotto_adjust(divergence: float, old_age: float, new_age: float) -> float:
    """Rescale a divergence rate calibrated on ``old_age`` to a revised ``new_age``."""
    _positive(divergence, "divergence", InvalidAgeError)
    _positive(old_age, "old_age", InvalidAgeError)
    _positive(new_age, "new_age", InvalidAgeError)
    return divergence * old_age / new_age


def per_daughter_rate(divergence: float) -> float:
    """Divergence attributable to each of two daughter languages."""
    return divergence / 2
