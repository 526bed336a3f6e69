"""Optional numba acceleration.

Hot kernels are written once in a numba-compatible subset of Python and
decorated with :func:`njit`.  When numba is missing, or when the environment
variable ``WASSBOUND_DISABLE_NUMBA`` is set to a truthy value, :func:`njit`
is a no-op and callers dispatch to the pure-numpy implementations instead.
"""
import os


def _noop_jit(*args, **kwargs):
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrap(f):
        return f

    return wrap


def _numba_requested():
    flag = os.environ.get("WASSBOUND_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no", "off")


def _have_numba():
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


# True when kernels are compiled with numba
USE_NUMBA = _numba_requested() and _have_numba()

if USE_NUMBA:
    from numba import njit
else:
    njit = _noop_jit


def thread_count():
    """Worker cap from ``WASSBOUND_THREADS`` (defaults to the CPU count)."""
    raw = os.environ.get("WASSBOUND_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1
