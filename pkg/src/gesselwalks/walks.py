"""Ground-truth enumeration of quarter-plane walks with steps E, W, NE, SW.

``count_walks`` is the oracle the rest of the package is measured against: a
dynamic program over the step recurrence

    F(m; n1, n2) = F(m-1; n1+1, n2) + F(m-1; n1-1, n2)
                 + F(m-1; n1+1, n2+1) + F(m-1; n1-1, n2-1)

with F(0; n1, n2) = [n1 = n2 = 0] and zero outside the quadrant.  Also here:
the shortest-walk closed forms and the packed boundary-count matrix used by
the triangular-system pipeline.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass
from typing import IO, Iterator

__all__ = [
    "reachable",
    "count_walks",
    "shortest_walk",
    "f_tilde",
    "f_entry",
    "FMatrix",
    "build_f_matrix",
    "WalkTable",
    "shared_table",
    "install_shared_table",
    "dump_walk_table",
    "load_walk_table",
]

Position = tuple[int, int]
Layer = dict[Position, int]


def reachable(m: int, n1: int, n2: int) -> bool:
    """Support conditions for a nonzero count: parity m = n1 (mod 2),
    0 <= n1 <= m, and the cone bound 2*n2 <= n1 + m.

    These are necessary; within the quadrant they are also sufficient, which
    the test suite checks empirically rather than assuming.
    """
    return (
        m >= 0
        and 0 <= n1 <= m
        and 0 <= n2
        and (m - n1) % 2 == 0
        and 2 * n2 <= n1 + m
    )


class WalkTable:
    """Layered table of walk counts for 0 <= m <= m_max.

    Layer m stores only its support box, so memory is O(m^2) per layer.
    With keep_layers=False every layer except the newest is dropped as
    construction advances; ``value`` then serves only m = m_max.
    Construction is single-writer; a built table may be read from any
    number of threads.
    """

    def __init__(self, m_max: int = 0, keep_layers: bool = True) -> None:
        self._keep = keep_layers
        self._layers: dict[int, Layer] = {0: {(0, 0): 1}}
        self._m_max = 0
        self.extend(m_max)

    @property
    def m_max(self) -> int:
        return self._m_max

    def extend(self, m_max: int) -> None:
        """Grow the table to m_max layers; a no-op if it is already there."""
        while self._m_max < m_max:
            m = self._m_max + 1
            prev = self._layers[self._m_max]
            cur: Layer = {}
            for n1 in range(m % 2, m + 1, 2):
                for n2 in range((n1 + m) // 2 + 1):
                    total = (
                        prev.get((n1 + 1, n2), 0)
                        + prev.get((n1 - 1, n2), 0)
                        + prev.get((n1 + 1, n2 + 1), 0)
                        + prev.get((n1 - 1, n2 - 1), 0)
                    )
                    if total:
                        cur[(n1, n2)] = total
            if not self._keep:
                self._layers.pop(self._m_max, None)
            self._layers[m] = cur
            self._m_max = m

    def value(self, m: int, n1: int, n2: int) -> int:
        if not 0 <= m <= self._m_max:
            raise ValueError(f"layer {m} not in table (m_max={self._m_max})")
        layer = self._layers.get(m)
        if layer is None:
            raise ValueError(f"layer {m} was dropped (keep_layers=False)")
        return layer.get((n1, n2), 0)

    def nonzero_records(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield (m, n1, n2, count) for every retained nonzero entry, sorted."""
        for m in sorted(self._layers):
            layer = self._layers[m]
            for n1, n2 in sorted(layer):
                yield m, n1, n2, layer[(n1, n2)]


_shared = WalkTable(0)
_shared_lock = threading.Lock()


def count_walks(m: int, n1: int, n2: int) -> int:
    """Number of m-step quarter-plane walks from the origin to (n1, n2).

    Exact and memoized across calls.  Arguments outside the support
    (negative coordinates, parity mismatch, points beyond the cone) return
    0 without growing the shared table.
    """
    if not reachable(m, n1, n2):
        return 0
    if m > _shared.m_max:
        with _shared_lock:
            _shared.extend(m)
    return _shared.value(m, n1, n2)


def shared_table() -> WalkTable:
    """The process-wide memo table behind ``count_walks``."""
    return _shared


def install_shared_table(table: WalkTable) -> None:
    """Replace the process-wide memo table, e.g. with one loaded from disk.

    Only tables that keep all layers can serve as the shared memo.
    """
    global _shared
    if not table._keep:
        raise ValueError("the shared table must keep all layers")
    with _shared_lock:
        _shared = table


def shortest_walk(n1: int, n2: int) -> tuple[int, int]:
    """Length of the shortest walk to (n1, n2) and the number of walks of
    that length.

    For n1 >= n2 the shortest walks have length n1 and number C(n1, n2);
    for n1 <= n2 they have length 2*n2 - n1 and number
    (n1+1)/(2*n2-n1+1) * C(2*n2-n1+1, n2+1).  The branches agree on the
    diagonal.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError("target must lie in the quadrant")
    if n1 >= n2:
        return n1, math.comb(n1, n2)
    length = 2 * n2 - n1
    count, rem = divmod((n1 + 1) * math.comb(length + 1, n2 + 1), length + 1)
    if rem:  # the ballot-style count is always integral
        raise AssertionError("non-integral shortest-walk count")
    return length, count


def f_tilde(m: int, n1: int, n2: int) -> int:
    """Coefficients of the boundary-supported transform of the walk series.

    Zero off the axes; on the axes a one-step shift of the plain counts:
    f_tilde(m, n1, 0) = F(m-1; n1, 0) and
    f_tilde(m, 0, n2) = F(m-1; 0, n2) + F(m-1; 0, n2-1).
    In particular f_tilde(0, ., .) = 0 and f_tilde(2n+1, 0, 0) = F(2n; 0, 0).
    """
    if m < 0 or n1 < 0 or n2 < 0:
        raise ValueError("f_tilde needs nonnegative arguments")
    if n1 and n2:
        return 0
    if n2 == 0:
        return count_walks(m - 1, n1, 0)
    return count_walks(m - 1, 0, n2) + count_walks(m - 1, 0, n2 - 1)


def f_entry(i: int, j: int) -> int:
    """Entry (i, j) of the packed boundary matrix.

    Above the diagonal row i holds the vertical-axis transform values
    f_tilde(i; 0, j-i); below it column j holds the horizontal-axis values
    f_tilde(j; i-j, 0).  Both readings agree on the diagonal.
    """
    if i < 0 or j < 0:
        raise ValueError("f_entry needs nonnegative indices")
    if i <= j:
        return f_tilde(i, 0, j - i)
    return f_tilde(j, i - j, 0)


@dataclass(frozen=True)
class FMatrix:
    """The packed boundary-count matrix materialized on [0, size]^2."""

    size: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]


def build_f_matrix(size: int) -> FMatrix:
    if size < 0:
        raise ValueError("size must be nonnegative")
    entries = tuple(
        tuple(f_entry(i, j) for j in range(size + 1)) for i in range(size + 1)
    )
    return FMatrix(size, entries)


def dump_walk_table(table: WalkTable, fp: IO[str]) -> int:
    """Write the table as JSON lines, one record per nonzero entry.

    Counts are serialized as decimal strings because they outgrow 64-bit
    integers quickly.  Returns the number of records written.
    """
    written = 0
    for m, n1, n2, value in table.nonzero_records():
        fp.write(json.dumps({"m": m, "n1": n1, "n2": n2, "F": str(value)}) + "\n")
        written += 1
    return written


def load_walk_table(fp: IO[str]) -> WalkTable:
    """Rebuild a table from ``dump_walk_table`` output."""
    layers: dict[int, Layer] = {}
    top = 0
    for line in fp:
        line = line.strip()
        if not line:
            continue
        rec = json.loads(line)
        m = int(rec["m"])
        layers.setdefault(m, {})[(int(rec["n1"]), int(rec["n2"]))] = int(rec["F"])
        top = max(top, m)
    table = WalkTable(0)
    rebuilt = {m: layers.get(m, {}) for m in range(top + 1)}
    if not rebuilt[0]:
        rebuilt[0] = {(0, 0): 1}
    table._layers = rebuilt
    table._m_max = top
    return table
