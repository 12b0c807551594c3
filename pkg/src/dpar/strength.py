"""Strength scoring: log2 probability, rank in bits, category, crack time.

A password's probability is the product of its five dimension
probabilities. Its strength is the log2 of its rank among all
dimension-key combinations ordered by decreasing probability, estimated
by convolving the per-dimension log2p histograms. The support covered by
the rank is every combination of observed keys plus one floor pseudo-key
per dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decompose import PasswordParts, dimension_keys
from .model import DIMENSIONS, Model, bin_index

WEAK_MAX_BITS = 29.0
FAIR_MAX_BITS = 37.0
DEFAULT_CRACK_RATE = 3.6e6  # guesses per second

_MINUTE = 60
_HOUR = 60 * _MINUTE
_DAY = 24 * _HOUR
_YEAR = 365 * _DAY


@dataclass(frozen=True)
class StrengthReport:
    log2p: float
    strength_bits: float
    category: str
    crack_seconds: float
    crack_human: str


class RankEstimator:
    """Rank-in-bits lookup built from the convolved dimension histograms."""

    def __init__(self, cumulative: np.ndarray, bin_width: float):
        self.cumulative = cumulative
        self.bin_width = bin_width
        self.total_combinations = float(cumulative[-1])

    @classmethod
    def from_model(cls, model: Model) -> "RankEstimator":
        conv = None
        for dim in DIMENSIONS:
            hist = model.histograms[dim]
            conv = hist if conv is None else np.convolve(conv, hist)
        return cls(np.cumsum(conv), model.bin_width)

    def rank_bits(self, log2p: float) -> float:
        """Bits of rank: log2 of the mass at or above this probability."""
        idx = bin_index(log2p, self.bin_width)
        if idx < 0:
            return 0.0
        idx = min(idx, len(self.cumulative) - 1)
        return math.log2(max(float(self.cumulative[idx]), 1.0))

    def rank_bits_batch(self, log2ps: np.ndarray) -> np.ndarray:
        idx = np.rint(-np.asarray(log2ps, dtype=np.float64) / self.bin_width).astype(np.int64)
        clipped = np.clip(idx, 0, len(self.cumulative) - 1)
        mass = np.where(idx < 0, 0.0, self.cumulative[clipped])
        return np.log2(np.maximum(mass, 1.0))


def password_log2p(model: Model, parts: PasswordParts) -> float:
    """Sum of the five per-dimension log2 probabilities."""
    return sum(dims_log2p(model, parts).values())


def dims_log2p(model: Model, parts: PasswordParts) -> dict[str, float]:
    keys = dimension_keys(parts, model.l33t_table)
    return {dim: model.tables[dim].log2p(keys[dim]) for dim in DIMENSIONS}


def estimate_rank_bits(estimator: RankEstimator, log2p: float) -> float:
    return estimator.rank_bits(log2p)


def exact_rank_bits(model: Model, log2p: float, *,
                    max_combinations: int = 10_000_000) -> float:
    """Brute-force oracle: enumerate every dimension-key combination.

    Counts combinations whose summed log2 probability is at or above the
    query, over the same support the estimator uses (observed keys plus
    the floor pseudo-key per dimension). Refuses models whose support
    exceeds ``max_combinations``.
    """
    value_arrays = []
    n_combos = 1
    for dim in DIMENSIONS:
        table = model.tables[dim]
        values = [table.log2p(key) for key in table.counts]
        values.append(table.floor_log2p)
        n_combos *= len(values)
        if n_combos > max_combinations:
            raise ValueError(
                f"support of {n_combos}+ combinations exceeds the "
                f"{max_combinations} enumeration guard")
        value_arrays.append(np.array(values, dtype=np.float64))
    sums = value_arrays[0]
    for values in value_arrays[1:]:
        sums = (sums[:, None] + values[None, :]).ravel()
    count = int(np.count_nonzero(sums >= log2p - 1e-9))
    return math.log2(max(count, 1))


def categorize(strength_bits: float, weak_max: float = WEAK_MAX_BITS,
               fair_max: float = FAIR_MAX_BITS) -> str:
    if strength_bits <= weak_max:
        return "weak"
    if strength_bits <= fair_max:
        return "fair"
    return "strong"


def crack_time(strength_bits: float,
               crack_rate: float = DEFAULT_CRACK_RATE) -> tuple[float, str]:
    """Seconds to guess (2^bits / rate) and a ceiling-rounded phrase."""
    if crack_rate <= 0:
        raise ValueError("crack rate must be positive")
    try:
        seconds = 2.0 ** strength_bits / crack_rate
    except OverflowError:
        seconds = math.inf
    if math.isinf(seconds):
        return seconds, "more than a billion years"
    if seconds < 1.0:
        return seconds, "less than a second"
    for unit_seconds, unit in ((_YEAR, "year"), (_DAY, "day"), (_HOUR, "hour"),
                               (_MINUTE, "minute"), (1, "second")):
        if seconds >= unit_seconds:
            value = math.ceil(seconds / unit_seconds)
            return seconds, f"{value} {unit}{'s' if value != 1 else ''}"
    raise AssertionError("unreachable")


def evaluate(model: Model, estimator: RankEstimator, parts: PasswordParts, *,
             crack_rate: float = DEFAULT_CRACK_RATE,
             weak_max: float = WEAK_MAX_BITS,
             fair_max: float = FAIR_MAX_BITS) -> StrengthReport:
    """Full strength report for one decomposed password."""
    log2p = password_log2p(model, parts)
    bits = estimator.rank_bits(log2p)
    seconds, human = crack_time(bits, crack_rate)
    return StrengthReport(log2p=log2p, strength_bits=bits,
                          category=categorize(bits, weak_max, fair_max),
                          crack_seconds=seconds, crack_human=human)


def feedback_text(report: StrengthReport) -> str:
    return (f"Your password is {report.category}. Hackers may guess "
            f"your password within {report.crack_human}.")
