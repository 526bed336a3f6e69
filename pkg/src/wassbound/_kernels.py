"""Hot numeric loops, each with a numba kernel and a pure-numpy twin.

``d_tilde_table`` evaluates the eighth-order cumulant sums over the cached
indecomposable partitions for every lag pair; ``ar1_statistics`` runs the
AR(1) recursion and the lag-product statistic for a batch of paths.  The
public functions pick the numba kernel when :data:`USE_NUMBA` is set and the
numpy path otherwise; both are importable directly for benchmarking.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

_CHUNK_PAIRS = 128


def pair_times(k, u1, u2):
    """Times of the eight table cells, row by row: ``(k, 0, k, 0, u1+k, u1, u2+k, u2)``."""
    u1 = np.asarray(u1, dtype=np.int64)
    u2 = np.asarray(u2, dtype=np.int64)
    zero = np.zeros_like(u1)
    return np.stack([zero + k, zero, zero + k, zero, u1 + k, u1, u2 + k, u2], axis=-1)


@njit(cache=True, nogil=True)
def _d_tilde_numba(times, labels, nblocks, alpha, kappa, m):
    npairs = times.shape[0]
    nparts, ncell = labels.shape
    out = np.zeros(npairs)
    cnt = np.zeros(ncell, dtype=np.int64)
    lo = np.zeros(ncell, dtype=np.int64)
    hi = np.zeros(ncell, dtype=np.int64)
    sm = np.zeros(ncell, dtype=np.int64)
    for q in range(npairs):
        total = 0.0
        for p in range(nparts):
            nb = nblocks[p]
            for b in range(nb):
                cnt[b] = 0
                sm[b] = 0
            for c in range(ncell):
                b = labels[p, c]
                t = times[q, c]
                if cnt[b] == 0:
                    lo[b] = t
                    hi[b] = t
                else:
                    if t < lo[b]:
                        lo[b] = t
                    if t > hi[b]:
                        hi[b] = t
                cnt[b] += 1
                sm[b] += t
            prod = 1.0
            for b in range(nb):
                spread = hi[b] - lo[b]
                if spread > m:
                    prod = 0.0
                    break
                s = cnt[b]
                S = sm[b] - s * lo[b]
                prod *= kappa[s] * alpha**S * (1.0 - alpha ** (s * (m - spread + 1))) / (1.0 - alpha**s)
                if prod == 0.0:
                    break
            total += prod
        out[q] = total
    return out


def _d_tilde_numpy(times, labels, nblocks, alpha, kappa, m):
    times = np.asarray(times, dtype=np.int64)
    nparts, ncell = labels.shape
    bmax = int(nblocks.max()) if nparts else 0
    masks = [labels == b for b in range(bmax)]
    out = np.empty(len(times))
    big = np.iinfo(np.int64).max // 4
    for start in range(0, len(times), _CHUNK_PAIRS):
        T = times[start:start + _CHUNK_PAIRS][:, None, :]
        prod = np.ones((T.shape[0], nparts))
        for M in masks:
            cnt = M.sum(axis=1)
            present = cnt > 0
            lo = np.where(M, T, big).min(axis=-1)
            hi = np.where(M, T, -big).max(axis=-1)
            S = np.where(M, T, 0).sum(axis=-1) - cnt * lo
            spread = np.where(present, hi - lo, 0)
            e = np.where(present, cnt * (m - spread + 1), 0)
            with np.errstate(divide="ignore", invalid="ignore"):
                val = kappa[cnt] * alpha ** np.where(present, S, 0) * (1.0 - alpha**e) / (1.0 - alpha**cnt)
            val = np.where(spread > m, 0.0, val)
            prod *= np.where(present, val, 1.0)
        out[start:start + T.shape[0]] = prod.sum(axis=1)
    return out


def d_tilde_values(times, labels, alpha, kappa, m, use_numba=None):
    """D-tilde for each row of ``times`` (shape ``(npairs, 8)``)."""
    if use_numba is None:
        use_numba = USE_NUMBA
    labels = np.ascontiguousarray(labels, dtype=np.int64)
    nblocks = (labels.max(axis=1) + 1) if len(labels) else np.zeros(0, dtype=np.int64)
    times = np.ascontiguousarray(times, dtype=np.int64)
    kappa = np.ascontiguousarray(kappa, dtype=np.float64)
    fn = _d_tilde_numba if use_numba else _d_tilde_numpy
    return fn(times, labels, nblocks.astype(np.int64), float(alpha), kappa, int(m))


@njit(cache=True, nogil=True)
def _ar1_stats_numba(eps, alpha, burn, n, k, gamma, out):
    R = eps.shape[0]
    path = np.empty(n)
    root_n = np.sqrt(n)
    for r in range(R):
        x = 0.0
        for i in range(burn):
            x = alpha * x + eps[r, i]
        for i in range(n):
            x = alpha * x + eps[r, burn + i]
            path[i] = x
        s = 0.0
        for t in range(n - k):
            s += path[t + k] * path[t]
        out[r] = root_n * (s / n - gamma)


def _ar1_stats_numpy(eps, alpha, burn, n, k, gamma, out):
    x = np.zeros(eps.shape[0])
    for i in range(burn):
        x = alpha * x + eps[:, i]
    path = np.empty((eps.shape[0], n))
    for i in range(n):
        x = alpha * x + eps[:, burn + i]
        path[:, i] = x
    s = np.einsum("ij,ij->i", path[:, k:], path[:, :n - k])
    out[:] = np.sqrt(n) * (s / n - gamma)


def ar1_statistics(eps, alpha, burn, n, k, gamma, out=None, use_numba=None):
    """``sqrt(n) (n^-1 sum_t x(t+k) x(t) - gamma)`` for each row of innovations.

    ``eps`` has shape ``(paths, burn + n)``; the first ``burn`` steps of each
    recursion (started at zero) are discarded.
    """
    if use_numba is None:
        use_numba = USE_NUMBA
    eps = np.ascontiguousarray(eps, dtype=np.float64)
    if out is None:
        out = np.empty(eps.shape[0])
    fn = _ar1_stats_numba if use_numba else _ar1_stats_numpy
    fn(eps, float(alpha), int(burn), int(n), int(k), float(gamma), out)
    return out


@njit(cache=True, nogil=True)
def _ar1_path_numba(eps, alpha, burn, out):
    x = 0.0
    for i in range(burn):
        x = alpha * x + eps[i]
    for i in range(out.shape[0]):
        x = alpha * x + eps[burn + i]
        out[i] = x


_PATH_BLOCK = 64


def _ar1_path_numpy(eps, alpha, burn, out):
    # blocks of the recursion are one triangular Toeplitz product each;
    # only the carry between blocks is sequential
    b = _PATH_BLOCK
    total = eps.shape[0]
    nblk = -(-total // b)
    padded = np.zeros(nblk * b)
    padded[:total] = eps
    i = np.arange(b)
    with np.errstate(under="ignore"):
        lag = np.subtract.outer(i, i)
        T = np.where(lag >= 0, float(alpha) ** np.maximum(lag, 0), 0.0)
        carry_w = float(alpha) ** (i + 1)
    blocks = padded.reshape(nblk, b) @ T.T
    x = 0.0
    for j in range(nblk):
        blocks[j] += carry_w * x
        x = blocks[j, -1]
    out[:] = blocks.ravel()[burn:burn + out.shape[0]]


def ar1_path(eps, alpha, burn, n, use_numba=None):
    """AR(1) recursion from zero over ``eps`` (length ``burn + n``), burn-in dropped."""
    if use_numba is None:
        use_numba = USE_NUMBA
    eps = np.ascontiguousarray(eps, dtype=np.float64)
    if eps.shape != (burn + n,):
        raise ValueError("eps must have length burn + n")
    out = np.empty(n)
    fn = _ar1_path_numba if use_numba else _ar1_path_numpy
    fn(eps, float(alpha), int(burn), out)
    return out
