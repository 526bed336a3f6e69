"""Upper bounds on the local-dependence term Q_t of the Stein step.

Method 1 is the crude Hoelder bound in the sixth moment of Y(0).  Method 2
bounds Q_t through variances of local sums of ``Z(t) = Y(t+k)Y(t) - E[.]``,
which reduce to the lag covariances ``c_tilde(u)`` and the fourth-order
cumulant sums ``d_tilde(u1, u2)`` of the Z's (eighth order in Y).  The
``(c, D)`` tables depend only on ``(model, m, k)`` and are cached, so a sweep
over n reuses them.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import _kernels
from .ar1 import MDepApprox, moment_Y
from .partitions import MIN2_EVEN, partition_labels
from .variance import bartlett_sum, c_tilde_array

__all__ = [
    "QMethod",
    "QTermContext",
    "MTerms",
    "QTables",
    "d_tilde",
    "q_tables",
    "m_terms",
    "q_bound_method1",
    "q_bound_method2",
    "q_bound_sum",
]

RADICAND_TOL = 1e-12


class QMethod(str, Enum):
    METHOD1 = "method1"
    METHOD2 = "method2"


@dataclass(frozen=True)
class QTermContext:
    approx: MDepApprox
    k: int
    n: int
    t: int

    def __post_init__(self):
        if self.k < 0 or self.n <= self.k:
            raise ValueError(f"need n > k >= 0, got n={self.n}, k={self.k}")
        if not 1 <= self.t <= self.n - self.k:
            raise ValueError(f"t must lie in 1..{self.n - self.k}, got {self.t}")

    @property
    def width(self) -> int:
        return self.approx.m + self.k

    def _interval(self, w):
        return range(max(1, self.t - w), min(self.n - self.k, self.t + w) + 1)

    @property
    def A(self) -> range:
        return self._interval(self.width)

    @property
    def B(self) -> range:
        return self._interval(2 * self.width)


@dataclass(frozen=True)
class MTerms:
    m1: float
    m2a: float
    m2b: float
    m3: float


@dataclass(frozen=True)
class QTables:
    """``c[u]`` for ``u = 0..4(m+k)`` and ``D[u1+L, u2+L]`` for ``|u_i| <= L = m+k``."""

    m: int
    k: int
    c: np.ndarray
    D: np.ndarray

    @property
    def width(self) -> int:
        return self.m + self.k


def d_tilde(approx: MDepApprox, k: int, u1: int, u2: int) -> float:
    """Fourth joint cumulant ``cum(Z(0), Z(0), Z(u1), Z(u2))`` via indecomposable partitions."""
    labels = partition_labels(4, 2, MIN2_EVEN)
    times = _kernels.pair_times(k, [u1], [u2])
    return float(_kernels.d_tilde_values(times, labels, approx.model.alpha, approx.model.kappa, approx.m)[0])


@lru_cache(maxsize=4096)
def q_tables(approx: MDepApprox, k: int) -> QTables:
    L = approx.m + k
    c = c_tilde_array(approx, k, 4 * L)
    iu, ju = np.triu_indices(2 * L + 1)
    vals = _kernels.d_tilde_values(
        _kernels.pair_times(k, iu - L, ju - L),
        partition_labels(4, 2, MIN2_EVEN),
        approx.model.alpha,
        approx.model.kappa,
        approx.m,
    )
    D = np.zeros((2 * L + 1, 2 * L + 1))
    D[iu, ju] = vals
    D[ju, iu] = vals
    c.setflags(write=False)
    D.setflags(write=False)
    return QTables(approx.m, k, c, D)


def _local_variance(c, size):
    """``var(sum of `size` consecutive Z's) = size * sum_{|u|<size} (1-|u|/size) c(u)``."""
    return size * bartlett_sum(c, size, size - 1)


def _mterms_from_offsets(tab: QTables, lo: int, hi: int, size_b: int) -> MTerms:
    L = tab.width
    size_a = hi - lo + 1
    m1 = float(tab.D[lo + L:hi + L + 1, lo + L:hi + L + 1].sum())
    m3 = float(sum(tab.c[abs(u)] for u in range(lo, hi + 1)))
    return MTerms(m1, _local_variance(tab.c, size_a), _local_variance(tab.c, size_b), m3)


def _offsets(t, n, k, w):
    return max(1 - t, -w), min(n - k - t, w)


def m_terms(ctx: QTermContext) -> MTerms:
    tab = q_tables(ctx.approx, ctx.k)
    lo, hi = _offsets(ctx.t, ctx.n, ctx.k, ctx.width)
    blo, bhi = _offsets(ctx.t, ctx.n, ctx.k, 2 * ctx.width)
    return _mterms_from_offsets(tab, lo, hi, bhi - blo + 1)


def _root(x, scale):
    if x < 0.0:
        if x < -RADICAND_TOL * max(1.0, scale):
            raise ArithmeticError(f"negative variance {x!r} in the Q_t bound")
        return 0.0
    return float(np.sqrt(x))


def _method2(mt: MTerms, c0: float) -> float:
    scale = abs(mt.m1) + abs(c0 * mt.m2a) + mt.m3**2
    v1 = _root(mt.m1 + c0 * mt.m2a + mt.m3**2, scale)
    v2 = _root(mt.m1 + c0 * mt.m2a + 2.0 * mt.m3**2, scale)
    return v1 * _root(mt.m2b, abs(mt.m2b)) + 0.5 * v2 * _root(mt.m2a, abs(mt.m2a))


def q_bound_method2(ctx: QTermContext) -> float:
    tab = q_tables(ctx.approx, ctx.k)
    return _method2(m_terms(ctx), float(tab.c[0]))


def q_bound_method1(m: int, k: int, y6: float) -> float:
    """``5/2 (4m + 4k + 1)^2 E[Y(0)^6]``."""
    if y6 < 0:
        raise ValueError("sixth moment must be nonnegative")
    return 2.5 * (4 * m + 4 * k + 1) ** 2 * y6


def q_bound_sum(approx: MDepApprox, k: int, n: int, method=QMethod.METHOD2) -> float:
    """``sum_{t=1}^{n-k}`` of the chosen Q_t bound.

    Method 2 groups t by the shape of ``(A_t - t, |B_t|)``: only O(m+k)
    boundary positions differ from the interior value.
    """
    method = QMethod(method)
    if k < 0 or n <= k:
        raise ValueError(f"need n > k >= 0, got n={n}, k={k}")
    N = n - k
    if method is QMethod.METHOD1:
        return N * q_bound_method1(approx.m, k, moment_Y(approx, 6))
    tab = q_tables(approx, k)
    w = tab.width
    t = np.arange(1, N + 1)
    lo = np.maximum(1 - t, -w)
    hi = np.minimum(N - t, w)
    size_b = np.minimum(N - t, 2 * w) - np.maximum(1 - t, -2 * w) + 1
    keys, counts = np.unique(np.stack([lo, hi, size_b], axis=1), axis=0, return_counts=True)
    c0 = float(tab.c[0])
    total = 0.0
    for (a, b, sb), cnt in zip(keys.tolist(), counts.tolist()):
        total += cnt * _method2(_mterms_from_offsets(tab, a, b, sb), c0)
    return total
