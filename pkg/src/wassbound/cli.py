"""``wassbound`` command line: single bounds, bound-vs-m curves, table grids
and Monte Carlo W1 grids, all written as CSV."""
from __future__ import annotations

import argparse
import csv
import io
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from ._accel import thread_count
from .ar1 import AR1Model
from .bound import MStarWarning, bound_curve, optimize_m
from .innovations import InnovationModel, parse_dist
from .qbound import QMethod
from .reference import ALPHA_GRID, K_GRID, N_GRID
from .wasserstein import estimate_w1

__all__ = ["RunConfig", "build_parser", "main", "format_number", "parse_m"]

DESK_SCALE = (10**5, 10)
FULL_SCALE = (4 * 10**6, 50)


@dataclass(frozen=True)
class RunConfig:
    dist: InnovationModel
    alpha: tuple[float, ...]
    k: tuple[int, ...]
    n: tuple[int, ...]
    m: object  # int, range or "auto"
    m_max: int = 30
    q_method: QMethod = QMethod.METHOD2
    R: int = DESK_SCALE[0]
    B: int = DESK_SCALE[1]
    seed: int = 20240101
    output: str | None = None
    precision: int | None = None

    def __post_init__(self):
        if not (self.alpha and self.k and self.n):
            raise ValueError("alpha, k and n grids must be nonempty")
        for a in self.alpha:
            if not -1.0 < a < 1.0:
                raise ValueError(f"alpha must lie in (-1, 1), got {a}")
        if min(self.k) < 0:
            raise ValueError("k must be nonnegative")
        if min(self.n) <= max(self.k):
            raise ValueError("every n must exceed every k")
        if self.m_max < 0:
            raise ValueError("--m-max must be nonnegative")
        if self.R < 2 or self.B < 1:
            raise ValueError("need R >= 2 and B >= 1")
        if self.precision is not None and not 0 <= self.precision <= 17:
            raise ValueError("--precision must be in 0..17")


def parse_m(text: str):
    s = text.strip().lower()
    if s == "auto":
        return "auto"
    if ".." in s:
        lo, hi = (int(v) for v in s.split("..", 1))
        if lo < 0 or hi < lo:
            raise ValueError(f"bad m range {text!r}")
        return range(lo, hi + 1)
    m = int(s)
    if m < 0:
        raise ValueError("m must be nonnegative")
    return m


def _list(conv):
    def parse(text):
        return tuple(conv(v) for v in text.split(",") if v.strip())
    return parse


def format_number(x: float, precision: int | None) -> str:
    """Half-away-from-zero rounding at ``precision`` decimals; shortest repr when None."""
    if precision is None or precision >= 17:
        return repr(float(x))
    q = Decimal(1).scaleb(-precision)
    return str(Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP))


def _map(fn, items):
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(workers) as pool:
        return list(pool.map(fn, items))


def _optimize(model, k, n, cfg):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", MStarWarning)
        m_star, b = optimize_m(model, k, n, cfg.m_max, cfg.q_method)
    for w in caught:
        print(f"warning: alpha={model.alpha} k={k} n={n}: {w.message}", file=sys.stderr)
    return m_star, b


def cmd_bound(cfg: RunConfig):
    header = ["dist", "alpha", "k", "n", "m", "term1", "term2", "term3", "term4", "total", "is_min"]
    cells = [(a, k, n) for k in cfg.k for a in cfg.alpha for n in cfg.n]
    fmt = lambda x: format_number(x, cfg.precision)  # noqa: E731

    def run(cell):
        a, k, n = cell
        model = AR1Model(a, cfg.dist)
        if cfg.m == "auto":
            _, b = _optimize(model, k, n, cfg)
            curve, best = [b], b.m
        else:
            ms = cfg.m if isinstance(cfg.m, range) else range(cfg.m, cfg.m + 1)
            curve = bound_curve(model, k, n, ms, cfg.q_method)
            best = min(curve, key=lambda b: b.total).m
        return [[cfg.dist.label, repr(a), k, n, b.m, *map(fmt, b.terms), fmt(b.total), int(b.m == best)]
                for b in curve]

    rows = [r for block in _map(run, cells) for r in block]
    return header, rows


def cmd_table(cfg: RunConfig, which: str):
    header = ["k", "alpha", *(str(n) for n in cfg.n)]
    prec = 3 if cfg.precision is None else cfg.precision
    cells = [(k, a, n) for k in cfg.k for a in cfg.alpha for n in cfg.n]

    def run(cell):
        k, a, n = cell
        model = AR1Model(a, cfg.dist)
        if which == "bound":
            return _optimize(model, k, n, cfg)[1].total
        return estimate_w1(model, k, n, cfg.R, cfg.B, cfg.seed, workers=1).mean

    vals = iter(_map(run, cells))
    rows = [[k, repr(a), *(format_number(next(vals), prec) for _ in cfg.n)]
            for k in cfg.k for a in cfg.alpha]
    return header, rows


def cmd_simulate(cfg: RunConfig):
    header = ["dist", "k", "alpha", "n", "R", "B", "seed", "mean", "sd"]
    cells = [(k, a, n) for k in cfg.k for a in cfg.alpha for n in cfg.n]
    fmt = lambda x: format_number(x, cfg.precision)  # noqa: E731

    def run(cell):
        k, a, n = cell
        est = estimate_w1(AR1Model(a, cfg.dist), k, n, cfg.R, cfg.B, cfg.seed)
        return [cfg.dist.label, k, repr(a), n, cfg.R, cfg.B, cfg.seed, fmt(est.mean), fmt(est.sd)]

    # replicates inside a cell already use the worker pool
    return header, [run(c) for c in cells]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wassbound", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, m_default):
        sp.add_argument("--dist", default="t9", help="normal, t9, t14 or t:<nu>")
        sp.add_argument("--alpha", type=_list(float), default=ALPHA_GRID)
        sp.add_argument("--k", type=_list(int), default=K_GRID)
        sp.add_argument("--n", type=_list(int), default=N_GRID)
        sp.add_argument("--m", type=parse_m, default=m_default, help="integer, a..b, or auto")
        sp.add_argument("--m-max", type=int, default=30)
        sp.add_argument("--q-method", choices=[q.value for q in QMethod], default="method2")
        sp.add_argument("--R", type=int, default=DESK_SCALE[0])
        sp.add_argument("--B", type=int, default=DESK_SCALE[1])
        sp.add_argument("--seed", type=int, default=20240101)
        sp.add_argument("--output", "-o", default=None)
        sp.add_argument("--precision", type=int, default=None)

    common(sub.add_parser("bound", help="bound breakdown for one m, a range of m, or m*"), "auto")
    tp = sub.add_parser("table", help="grid of bounds at m* or of simulated W1")
    common(tp, "auto")
    tp.add_argument("--which", choices=["bound", "w1"], default="bound")
    tp.add_argument("--replication", choices=["desk", "full"], default=None,
                    help="run the published grid for --dist at desk (R=1e5, B=10) or full (R=4e6, B=50) MC scale")
    common(sub.add_parser("simulate", help="Monte Carlo W1 per grid cell"), "auto")
    return p


def _config(args) -> RunConfig:
    R, B = args.R, args.B
    alpha, k, n = args.alpha, args.k, args.n
    if getattr(args, "replication", None):
        alpha, k, n = ALPHA_GRID, K_GRID, N_GRID
        R, B = DESK_SCALE if args.replication == "desk" else FULL_SCALE
    return RunConfig(
        dist=parse_dist(args.dist), alpha=tuple(alpha), k=tuple(k), n=tuple(n), m=args.m,
        m_max=args.m_max, q_method=QMethod(args.q_method), R=R, B=B, seed=args.seed,
        output=args.output, precision=args.precision,
    )


def _write(header, rows, path):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    if path is None or path == "-":
        sys.stdout.write(buf.getvalue())
    else:
        with open(path, "w", newline="", encoding="ascii") as fh:
            fh.write(buf.getvalue())


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        if args.command == "bound":
            header, rows = cmd_bound(cfg)
        elif args.command == "table":
            header, rows = cmd_table(cfg, args.which)
        else:
            header, rows = cmd_simulate(cfg)
        _write(header, rows, cfg.output)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"wassbound: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
