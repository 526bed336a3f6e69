"""Monte Carlo estimate of the Wasserstein-1 distance between the law of
``sqrt(n) (gamma_hat(k) - gamma(k))`` and its Gaussian limit.

Each replicate draws R independent AR(1) paths of length n, forms the
statistic for each, sorts the R values and compares them with the matching
quantiles of ``N(0, Sigma(k))``.  Replicate ``i`` uses stream ``i`` of the
seed, so results do not depend on how replicates are scheduled.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._accel import thread_count
from .ar1 import AR1Model, gamma
from .innovations import RngHandle, draw
from .variance import sigma_asymptotic

__all__ = [
    "W1Estimate",
    "burn_in",
    "simulate_ar1",
    "statistic",
    "normal_quantile",
    "w1_vs_normal",
    "replicate_w1",
    "estimate_w1",
]

# innovations generated per batch of paths (bounds peak memory)
_BATCH_VALUES = 1 << 21
_QUANTILE_CHUNK = 1 << 16


@dataclass(frozen=True)
class W1Estimate:
    per_replicate: tuple[float, ...]
    mean: float
    sd: float
    R: int
    B: int
    seed: int

    def __post_init__(self):
        if self.R < 2 or self.B < 1:
            raise ValueError("need R >= 2 and B >= 1")
        if len(self.per_replicate) != self.B:
            raise ValueError("per_replicate must have length B")


def burn_in(alpha: float) -> int:
    """Steps discarded so that ``|alpha|**burn <= 2**-52`` (at least 100)."""
    a = abs(alpha)
    rate = -math.log2(a) if a > 0 else math.inf
    return math.ceil(max(100.0, 52.0 / max(1e-12, rate)))


def simulate_ar1(model: AR1Model, n: int, rng: RngHandle | np.random.Generator) -> np.ndarray:
    """One path of length n, started at zero after :func:`burn_in` steps."""
    if n < 1:
        raise ValueError("n must be positive")
    gen = rng.generator() if isinstance(rng, RngHandle) else rng
    burn = burn_in(model.alpha)
    eps = draw(model.innovations, gen, burn + n)
    return _kernels.ar1_path(eps, model.alpha, burn, n)


def statistic(x, k: int, gamma_k: float) -> float:
    """``sqrt(n) (n^-1 sum_{t=1}^{n-k} x(t+k) x(t) - gamma_k)``."""
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    s = float(np.dot(x[k:], x[:n - k]))
    return math.sqrt(n) * (s / n - gamma_k)


# Wichura's AS241 (PPND16) coefficients
_A = (3.3871328727963666080, 133.14166789178437745, 1971.5909503065514427,
      13731.693765509461125, 45921.953931549871457, 67265.770927008700853,
      33430.575583588128105, 2509.0809287301226727)
_B = (1.0, 42.313330701600911252, 687.18700749205790830, 5394.1960214247511077,
      21213.794301586595867, 39307.895800092710610, 28729.085735721942674,
      5226.4952788528545610)
_C = (1.42343711074968357734, 4.63033784615654529590, 5.76949722146069140550,
      3.64784832476320460504, 1.27045825245236838258, 0.241780725177450611770,
      0.0227238449892691845833, 7.74545014278341407640e-4)
_D = (1.0, 2.05319162663775882187, 1.67638483018380384940, 0.689767334985100004550,
      0.148103976427480074590, 0.0151986665636164571966, 5.47593808499534494600e-4,
      1.05075007164441684324e-9)
_E = (6.65790464350110377720, 5.46378491116411436990, 1.78482653991729133580,
      0.296560571828504891230, 0.0265321895265761230930, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7)
_F = (1.0, 0.599832206555887937690, 0.136929880922735805310, 0.0148753612908506148525,
      7.86869131145613259100e-4, 1.84631831751005468180e-5, 1.42151175831644588870e-7,
      2.04426310338993978564e-15)


def _ratio(num, den, x):
    # coefficients are stored lowest order first; Horner wants the reverse
    return np.polyval(num[::-1], x) / np.polyval(den[::-1], x)


def normal_quantile(u):
    """Standard normal quantile ``Phi^-1(u)``, scalar or array, for ``0 < u < 1``."""
    scalar = np.ndim(u) == 0
    u = np.asarray(u, dtype=float)
    if not np.all((u > 0.0) & (u < 1.0)):
        raise ValueError("normal_quantile needs 0 < u < 1")
    q = u - 0.5
    out = np.empty_like(u)
    central = np.abs(q) <= 0.425
    if central.any():
        qc = q[central]
        out[central] = qc * _ratio(_A, _B, 0.180625 - qc * qc)
    tail = ~central
    if tail.any():
        qt = q[tail]
        r = np.sqrt(-np.log(np.where(qt < 0, u[tail], 1.0 - u[tail])))
        val = np.where(r <= 5.0,
                       _ratio(_C, _D, r - 1.6),
                       _ratio(_E, _F, r - 5.0))
        out[tail] = np.where(qt < 0, -val, val)
    return float(out) if scalar else out


def w1_vs_normal(samples, sigma2: float, *, overwrite: bool = False) -> float:
    """``R^-1 sum_r |Z_(r) - sqrt(sigma2) Phi^-1((2r-1)/(2R))|``.

    With ``overwrite=True`` and a float64 array the samples are sorted in
    place, so a large buffer is never copied; quantiles are generated in
    chunks.
    """
    if not sigma2 > 0:
        raise ValueError("sigma2 must be positive")
    if overwrite and isinstance(samples, np.ndarray) and samples.dtype == np.float64 and samples.ndim == 1:
        z = samples
    else:
        z = np.array(samples, dtype=float).ravel()
    R = z.shape[0]
    if R < 2:
        raise ValueError("need at least two samples")
    z.sort()
    scale = math.sqrt(sigma2)
    total = 0.0
    for start in range(0, R, _QUANTILE_CHUNK):
        stop = min(R, start + _QUANTILE_CHUNK)
        u = (2.0 * np.arange(start + 1, stop + 1) - 1.0) / (2.0 * R)
        total += float(np.abs(z[start:stop] - scale * normal_quantile(u)).sum())
    return total / R


def replicate_w1(model: AR1Model, k: int, n: int, R: int, rng: RngHandle,
                 gamma_k: float | None = None, sigma: float | None = None) -> float:
    """One replicate of the estimator on the stream ``rng``."""
    if gamma_k is None:
        gamma_k = gamma(model, k)
    if sigma is None:
        sigma = sigma_asymptotic(model, k)
    gen = rng.generator()
    burn = burn_in(model.alpha)
    batch = max(1, _BATCH_VALUES // (burn + n))
    z = np.empty(R)
    for start in range(0, R, batch):
        stop = min(R, start + batch)
        eps = draw(model.innovations, gen, (stop - start, burn + n))
        _kernels.ar1_statistics(eps, model.alpha, burn, n, k, gamma_k, out=z[start:stop])
    return w1_vs_normal(z, sigma, overwrite=True)


def estimate_w1(model: AR1Model, k: int, n: int, R: int, B: int, seed: int,
                workers: int | None = None) -> W1Estimate:
    """Average of B independent replicates, replicate ``i`` on stream ``i``."""
    if R < 2 or B < 1:
        raise ValueError("need R >= 2 and B >= 1")
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    g = gamma(model, k)
    sig = sigma_asymptotic(model, k)
    streams = [RngHandle(seed, i) for i in range(B)]

    def one(h):
        return replicate_w1(model, k, n, R, h, g, sig)

    workers = min(B, thread_count() if workers is None else max(1, workers))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            vals = list(pool.map(one, streams))
    else:
        vals = [one(h) for h in streams]
    arr = np.asarray(vals)
    sd = float(arr.std(ddof=1)) if B > 1 else 0.0
    return W1Estimate(tuple(float(v) for v in vals), float(arr.mean()), sd, R, B, seed)
