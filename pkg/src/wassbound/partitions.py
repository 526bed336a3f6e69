"""Set partitions of small index tables and the indecomposability test.

Cumulants of products of random variables are sums over the indecomposable
partitions of the table whose rows are the products and whose entries are the
factors.  This module enumerates set partitions in restricted-growth-string
order, tests indecomposability with a union-find over rows, and caches the
filtered lists (and a dense integer encoding used by the numeric kernels).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_SET_SIZE = 12

__all__ = [
    "IndexedTable",
    "Partition",
    "PartitionFilter",
    "MIN2",
    "MIN2_EVEN",
    "PAIRS",
    "bell_number",
    "restricted_growth_strings",
    "enumerate_partitions",
    "is_indecomposable",
    "filter_partitions",
    "indecomposable_partitions",
    "partition_labels",
]


@dataclass(frozen=True)
class IndexedTable:
    """A ``rows x cols`` grid of cells.

    Cells are addressed by 1-based ``(row, col)`` pairs; partitions work on
    the flat 0-based index ``(row - 1) * cols + (col - 1)``.
    """

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("table needs at least one row and one column")
        if self.rows * self.cols > MAX_SET_SIZE:
            raise ValueError(f"table has more than {MAX_SET_SIZE} cells")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    @property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple((r + 1, c + 1) for r in range(self.rows) for c in range(self.cols))

    def flat(self, cell: tuple[int, int]) -> int:
        r, c = cell
        if not (1 <= r <= self.rows and 1 <= c <= self.cols):
            raise ValueError(f"cell {cell} outside {self.rows}x{self.cols} table")
        return (r - 1) * self.cols + (c - 1)

    def row_of(self, index: int) -> int:
        return index // self.cols

    def partition(self, blocks) -> "Partition":
        """Build a :class:`Partition` from blocks of ``(row, col)`` pairs."""
        return Partition(tuple(tuple(sorted(self.flat(c) for c in b)) for b in blocks))


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks of flat cell indices covering ``0..size-1``."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            for i in b:
                if i in seen:
                    raise ValueError(f"cell {i} appears in more than one block")
                seen.add(i)
        if seen != set(range(len(seen))):
            raise ValueError("blocks do not cover a contiguous index set 0..n-1")

    @classmethod
    def from_rgs(cls, rgs) -> "Partition":
        blocks: dict[int, list[int]] = {}
        for i, label in enumerate(rgs):
            blocks.setdefault(int(label), []).append(i)
        return cls(tuple(tuple(blocks[j]) for j in sorted(blocks)))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def labels(self) -> np.ndarray:
        out = np.empty(self.size, dtype=np.int64)
        for j, b in enumerate(self.blocks):
            out[list(b)] = j
        return out


@dataclass(frozen=True)
class PartitionFilter:
    min_block_size: int = 1
    even_blocks_only: bool = False
    pairs_only: bool = False

    def __post_init__(self):
        if self.min_block_size < 1:
            raise ValueError("min_block_size must be >= 1")
        if self.pairs_only and self.min_block_size > 2:
            raise ValueError("pairs_only requires min_block_size <= 2")

    def accepts(self, sizes) -> bool:
        if self.pairs_only:
            return all(s == 2 for s in sizes)
        if any(s < self.min_block_size for s in sizes):
            return False
        if self.even_blocks_only and any(s % 2 for s in sizes):
            return False
        return True


MIN2 = PartitionFilter(min_block_size=2)
MIN2_EVEN = PartitionFilter(min_block_size=2, even_blocks_only=True)
PAIRS = PartitionFilter(min_block_size=2, pairs_only=True)


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _check_size(set_size):
    if not isinstance(set_size, (int, np.integer)) or not 1 <= set_size <= MAX_SET_SIZE:
        raise ValueError(f"set_size must be an integer in 1..{MAX_SET_SIZE}, got {set_size!r}")


def restricted_growth_strings(set_size: int) -> np.ndarray:
    """All restricted growth strings of length ``set_size`` in lexicographic order.

    Row ``i`` of the result labels the blocks of the ``i``-th partition:
    ``a[0] = 0`` and ``a[j] <= 1 + max(a[:j])``.
    """
    _check_size(set_size)
    rgs = np.zeros((1, 1), dtype=np.int8)
    top = np.zeros(1, dtype=np.int8)
    for _ in range(1, set_size):
        fan = top.astype(np.int64) + 2
        parent = np.repeat(np.arange(len(rgs)), fan)
        starts = np.cumsum(fan) - fan
        value = (np.arange(fan.sum()) - np.repeat(starts, fan)).astype(np.int8)
        rgs = np.column_stack([rgs[parent], value])
        top = np.maximum(top[parent], value)
    return rgs


def enumerate_partitions(set_size: int) -> list[Partition]:
    """Every set partition of ``{0, ..., set_size-1}``, each exactly once."""
    return [Partition.from_rgs(r) for r in restricted_growth_strings(set_size)]


def _covers(p: Partition, table: IndexedTable):
    if p.size != table.size:
        raise ValueError(
            f"partition covers {p.size} cells but the table has {table.size}"
        )


def _connected_rows(blocks, table: IndexedTable) -> bool:
    parent = list(range(table.rows))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for b in blocks:
        r0 = find(table.row_of(b[0]))
        for i in b[1:]:
            r = find(table.row_of(i))
            if r != r0:
                parent[r] = r0
    root = find(0)
    return all(find(r) == root for r in range(table.rows))


def is_indecomposable(p: Partition, table: IndexedTable) -> bool:
    """True iff no proper nonempty set of rows is a union of whole blocks."""
    _covers(p, table)
    return _connected_rows(p.blocks, table)


def filter_partitions(ps, table: IndexedTable, f: PartitionFilter) -> list[Partition]:
    """Indecomposable partitions in ``ps`` whose block sizes pass ``f``, order kept."""
    out = []
    for p in ps:
        _covers(p, table)
        if f.accepts(p.block_sizes) and _connected_rows(p.blocks, table):
            out.append(p)
    return out


@lru_cache(maxsize=None)
def indecomposable_partitions(rows: int, cols: int, f: PartitionFilter = MIN2) -> tuple[Partition, ...]:
    """Cached ``filter_partitions`` over every partition of a ``rows x cols`` table."""
    table = IndexedTable(rows, cols)
    return tuple(filter_partitions(enumerate_partitions(table.size), table, f))


@lru_cache(maxsize=None)
def partition_labels(rows: int, cols: int, f: PartitionFilter = MIN2) -> np.ndarray:
    """Dense block labels, shape ``(n_partitions, rows * cols)``, read-only.

    Labels follow restricted-growth order, so block ``j`` of each partition is
    the ``j``-th distinct label encountered left to right.
    """
    ps = indecomposable_partitions(rows, cols, f)
    if ps:
        labels = np.stack([p.labels() for p in ps])
    else:
        labels = np.zeros((0, rows * cols), dtype=np.int64)
    labels.setflags(write=False)
    return labels
