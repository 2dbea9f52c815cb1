"""chi_ed of complete bipartite graphs through equitable integer partitions.

In ``K_{a,b}`` a color class cannot straddle the two sides, and every vertex
dominates every class on the opposite side, so any proper coloring is already a
dominator coloring. What remains is to split ``a`` and ``b`` into parts whose
sizes, taken together, differ by at most one, using as few parts as possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coloring import Coloring

__all__ = [
    "PARTITION_CAP",
    "EquitablePair",
    "bipartite_coloring",
    "chi_ed_complete_bipartite",
    "equitable_pair_fast",
    "equitable_partitions",
    "equitable_partitions_by_filter",
    "integer_partitions",
    "min_equitable_pair",
    "near_equal_split",
]

PARTITION_CAP = 40

Partition = tuple[int, ...]


def _check_cap(n: int) -> None:
    if not 1 <= n <= PARTITION_CAP:
        raise ValueError(f"n must lie in 1..{PARTITION_CAP}, got {n}")


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out: list[Partition] = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def integer_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, parts non-increasing, in reverse lexicographic order."""
    _check_cap(n)
    return list(_partitions(n, n))


def near_equal_split(n: int, k: int) -> Partition:
    """``n`` into ``k`` parts of sizes ``ceil(n/k)`` and ``floor(n/k)``."""
    q, r = divmod(n, k)
    return (q + 1,) * r + (q,) * (k - r)


def equitable_partitions(n: int) -> list[Partition]:
    """One partition per part count ``k = 1..n``; the only ones with spread at most 1."""
    _check_cap(n)
    return [near_equal_split(n, k) for k in range(1, n + 1)]


def equitable_partitions_by_filter(n: int) -> list[Partition]:
    return [p for p in integer_partitions(n) if p[0] - p[-1] <= 1]


@dataclass(frozen=True)
class EquitablePair:
    part_a: Partition
    part_b: Partition

    def __post_init__(self) -> None:
        parts = self.part_a + self.part_b
        if not self.part_a or not self.part_b or min(parts) < 1:
            raise ValueError("both sides need at least one positive part")
        if max(parts) - min(parts) > 1:
            raise ValueError(f"combined parts {parts} differ by more than one")

    @property
    def color_count(self) -> int:
        return len(self.part_a) + len(self.part_b)

    @property
    def min_part(self) -> int:
        return min(self.part_a + self.part_b)


def min_equitable_pair(a: int, b: int) -> EquitablePair:
    """Fewest-part pair by enumerating partitions of both sides.

    Ties go to the larger minimum part, then the lexicographically smallest
    ``part_a``.
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if a + b > PARTITION_CAP:
        raise ValueError(f"a + b must not exceed {PARTITION_CAP}, got {a + b}")
    best: tuple | None = None
    for pa in equitable_partitions_by_filter(a):
        for pb in equitable_partitions_by_filter(b):
            parts = pa + pb
            if max(parts) - min(parts) > 1:
                continue
            key = (len(parts), -min(parts), pa, pb)
            if best is None or key < best:
                best = key
    assert best is not None  # all-ones always qualifies
    return EquitablePair(best[2], best[3])


def _min_parts(x: int, s: int) -> int | None:
    """Fewest parts from ``{s, s+1}`` summing to ``x``, or None."""
    p = -(-x // (s + 1))
    return p if p * s <= x else None


def equitable_pair_fast(a: int, b: int) -> EquitablePair:
    """Direct construction: scan the smaller part size ``s`` and split both sides near-equally."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    best: tuple[int, int, int] | None = None
    for s in range(1, max(a, b) + 1):
        pa, pb = _min_parts(a, s), _min_parts(b, s)
        if pa is None or pb is None:
            continue
        if best is None or pa + pb < best[0]:
            best = (pa + pb, pa, pb)
    assert best is not None
    return EquitablePair(near_equal_split(a, best[1]), near_equal_split(b, best[2]))


def chi_ed_complete_bipartite(a: int, b: int) -> int:
    return equitable_pair_fast(a, b).color_count


def bipartite_coloring(a: int, b: int) -> Coloring:
    """Optimal equitable dominator coloring of ``K_{a,b}`` (side A = ``1..a``)."""
    pair = min_equitable_pair(a, b) if a + b <= PARTITION_CAP else equitable_pair_fast(a, b)
    colors: list[int] = []
    for color, size in enumerate(pair.part_a + pair.part_b, start=1):
        colors.extend([color] * size)
    return Coloring(tuple(colors))
