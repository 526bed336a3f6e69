"""Closed forms for the causal AR(1) process and its truncated moving average.

``X(t) = alpha X(t-1) + eps(t) = sum_{j>=0} alpha^j eps(t-j)`` is approximated
by the m-dependent ``Y(t) = sum_{j=0}^{m} alpha^j eps(t-j)``.  Every formula
uses the convention ``0**0 == 1`` (Python's float power already does).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .innovations import InnovationModel
from .partitions import MIN2_EVEN, indecomposable_partitions

__all__ = [
    "AR1Model",
    "MDepApprox",
    "gamma",
    "lag_product_moment",
    "mdep_error",
    "cum_X",
    "cum_Y",
    "moment_Y",
    "norm_X",
]


@dataclass(frozen=True)
class AR1Model:
    alpha: float
    innovations: InnovationModel = InnovationModel()

    def __post_init__(self):
        if not -1.0 < self.alpha < 1.0:
            raise ValueError(f"|alpha| < 1 required for causality, got {self.alpha}")

    @property
    def kappa(self) -> np.ndarray:
        return _kappa(self.innovations)

    def mdep(self, m: int) -> "MDepApprox":
        return MDepApprox(self, m)


@dataclass(frozen=True)
class MDepApprox:
    model: AR1Model
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be nonnegative")


@lru_cache(maxsize=None)
def _kappa(innov: InnovationModel) -> np.ndarray:
    k = innov.cumulants()
    k.setflags(write=False)
    return k


@lru_cache(maxsize=None)
def _block_size_counts(size: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Multiplicity of each multiset of block sizes over the partitions of
    ``{1..size}`` into even blocks (odd cumulants vanish for our innovations)."""
    counts = Counter(tuple(sorted(p.block_sizes)) for p in indecomposable_partitions(1, size, MIN2_EVEN))
    return tuple(sorted(counts.items()))


def _partition_sum(size: int, weight) -> float:
    total = 0.0
    for sizes, mult in _block_size_counts(size):
        term = float(mult)
        for s in sizes:
            term *= weight(s)
        total += term
    return total


def gamma(model: AR1Model, k: int) -> float:
    """Autocovariance ``alpha^|k| kappa_2 / (1 - alpha^2)``."""
    a = model.alpha
    return a ** abs(k) * model.kappa[2] / (1.0 - a * a)


def norm_X(model: AR1Model, q: int = 2) -> float:
    """``||X(0)||_q`` for even ``q <= 8``."""
    if q not in (2, 4, 6, 8):
        raise ValueError("q must be one of 2, 4, 6, 8")
    return lag_product_moment(model, 0, q // 2) ** (1.0 / q)


def _check_times(times):
    p = len(times)
    if not 2 <= p <= 8:
        raise ValueError(f"cumulant order must be in 2..8, got {p}")
    lo = min(times)
    return p, lo, max(times) - lo, sum(t - lo for t in times)


def cum_X(model: AR1Model, times) -> float:
    """Joint cumulant ``cum(X(u_1), ..., X(u_p))``."""
    p, _, _, s = _check_times(times)
    a = model.alpha
    return model.kappa[p] * a**s / (1.0 - a**p)


def cum_Y(approx: MDepApprox, times) -> float:
    """Joint cumulant ``cum(Y(u_1), ..., Y(u_p))``; zero once the spread exceeds m."""
    p, _, spread, s = _check_times(times)
    m = approx.m
    if spread > m:
        return 0.0
    a = approx.model.alpha
    return approx.model.kappa[p] * a**s * (1.0 - a ** (p * (m - spread + 1))) / (1.0 - a**p)


def lag_product_moment(model: AR1Model, k: int, q: int) -> float:
    """``E[(X(t+k) X(t))^q]`` for ``q`` in 1..4.

    Moment-cumulant expansion over all partitions of the ``2q`` factors
    (``q`` copies at time ``k``, ``q`` at time 0).  For ``k = 0`` this is the
    familiar sum over partitions of ``{1..2q}`` of ``prod kappa/(1 - alpha^|block|)``.
    """
    if q not in (1, 2, 3, 4):
        raise ValueError(f"q must be in 1..4, got {q!r}")
    times = [abs(k)] * q + [0] * q
    total = 0.0
    for p in indecomposable_partitions(1, 2 * q, MIN2_EVEN):
        term = 1.0
        for b in p.blocks:
            term *= cum_X(model, [times[i] for i in b])
        total += term
    return total


def _check_even(q):
    if q not in (2, 4, 6, 8):
        raise ValueError(f"q must be an even integer in 2..8, got {q!r}")


def mdep_error(approx: MDepApprox, q: int) -> float:
    """``||X(0) - Y(0)||_q = |alpha|^(m+1) (sum_nu prod kappa/(1-alpha^|nu_r|))^(1/q)``."""
    _check_even(q)
    a = approx.model.alpha
    if a == 0.0:
        return 0.0
    kap = approx.model.kappa
    inner = _partition_sum(q, lambda s: kap[s] / (1.0 - a**s))
    return abs(a) ** (approx.m + 1) * inner ** (1.0 / q)


def moment_Y(approx: MDepApprox, q: int) -> float:
    """``E[Y(0)^q]`` for even ``q <= 8``."""
    _check_even(q)
    a = approx.model.alpha
    kap = approx.model.kappa
    m = approx.m
    return _partition_sum(q, lambda s: kap[s] * (1.0 - a ** (s * (m + 1))) / (1.0 - a**s))
