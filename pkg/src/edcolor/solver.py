"""Exact chromatic numbers chi, chi_e, chi_d and chi_ed by backtracking.

The search scans ``k`` upward from a sound lower bound and, for each ``k``,
exhaustively looks for a coloring with exactly ``k`` non-empty classes. Colorings
are enumerated canonically (a new color index is opened only after all lower
ones are in use), so no two branches differ by a color permutation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import Coloring, validate
from .graph import Graph

__all__ = [
    "BudgetExhausted",
    "CHI",
    "CHI_D",
    "CHI_E",
    "CHI_ED",
    "DEFAULT_BUDGET",
    "ConstraintSet",
    "OracleTooLarge",
    "SolveResult",
    "exhaustive_oracle",
    "lower_bound",
    "solve",
]

DEFAULT_BUDGET = 10_000_000
ORACLE_MAX_N = 10


@dataclass(frozen=True)
class ConstraintSet:
    """Extra conditions on top of properness."""

    equitable: bool = False
    dominator: bool = False

    @property
    def name(self) -> str:
        return {(False, False): "chi", (True, False): "chi-e",
                (False, True): "chi-d", (True, True): "chi-ed"}[(self.equitable, self.dominator)]

    @classmethod
    def from_name(cls, name: str) -> ConstraintSet:
        for cs in (CHI, CHI_E, CHI_D, CHI_ED):
            if cs.name == name:
                return cs
        raise ValueError(f"unknown invariant {name!r}; expected chi, chi-e, chi-d or chi-ed")

    def satisfied_by(self, g: Graph, c: Coloring) -> bool:
        report = validate(g, c)
        return (report.proper
                and (report.equitable or not self.equitable)
                and (report.dominator or not self.dominator))


CHI = ConstraintSet(False, False)
CHI_E = ConstraintSet(True, False)
CHI_D = ConstraintSet(False, True)
CHI_ED = ConstraintSet(True, True)


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Coloring
    nodes: int
    elapsed: float


class BudgetExhausted(RuntimeError):
    """The node budget ran out; the answer is only known to lie in ``[lower, upper]``."""

    def __init__(self, lower: int, upper: int, nodes: int) -> None:
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        super().__init__(f"search budget of {nodes} nodes exhausted; value in [{lower}, {upper}]")


class OracleTooLarge(ValueError):
    pass


def _greedy_clique(g: Graph) -> int:
    best = 1
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    for start in order:
        clique = [start]
        candidates = set(g.adj[start - 1])
        for v in order:
            if v in candidates:
                clique.append(v)
                candidates &= g.adj[v - 1]
        best = max(best, len(clique))
    return best


def lower_bound(g: Graph, cs: ConstraintSet = CHI_ED) -> int:
    """Sound lower bound used to seed the k-scan: a greedily grown clique.

    Every constraint set includes properness, so a clique bound holds for all four
    invariants.
    """
    return _greedy_clique(g)


class _Search:
    def __init__(self, g: Graph, cs: ConstraintSet, budget: int) -> None:
        self.n = g.n
        self.cs = cs
        self.budget = budget
        self.nodes = 0
        self.adj = g.masks()
        self.closed = [m | (1 << v) for v, m in enumerate(self.adj)]
        self.closed[0] = 0
        self.order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))

    def run(self, k: int) -> list[int] | None:
        n = self.n
        self.k = k
        self.hi = -(-n // k)
        self.lo = n // k
        # number of classes that end at size hi when sizes are equitable
        self.max_at_hi = n - k * self.lo if self.hi > self.lo else k
        self.color = [0] * (n + 1)
        self.cls = [0] * (k + 1)
        self.size = [0] * (k + 1)
        self.at_hi = 0
        self.uncolored = sum(1 << v for v in range(1, n + 1))
        self.hint = [1] * (n + 1)
        if self._extend(0, 0):
            return self.color[1:]
        return None

    def _dominator_alive(self, used: int) -> bool:
        # v stays satisfiable while some class is (or can still become) a subset of N[v]
        cls, k, unc = self.cls, self.k, self.uncolored
        for v in range(1, self.n + 1):
            outside = ~self.closed[v]
            h = self.hint[v]
            if cls[h] and not cls[h] & outside:
                continue
            for c in range(1, used + 1):
                if not cls[c] & outside:
                    self.hint[v] = c
                    break
            else:
                if not (used < k and unc & self.closed[v]):
                    return False
        return True

    def _leaf_ok(self) -> bool:
        if self.cs.equitable and any(not self.lo <= s <= self.hi for s in self.size[1:]):
            return False
        if self.cs.dominator:
            cls = self.cls
            for v in range(1, self.n + 1):
                outside = ~self.closed[v]
                if not any(cls[c] and not cls[c] & outside for c in range(1, self.k + 1)):
                    return False
        return True

    def _extend(self, i: int, used: int) -> bool:
        n, k = self.n, self.k
        if i == n:
            return used == k and self._leaf_ok()
        remaining = n - i - 1
        v = self.order[i]
        bit = 1 << v
        nbrs = self.adj[v]
        cls, size = self.cls, self.size
        equitable, dominator = self.cs.equitable, self.cs.dominator
        for c in range(1, min(used + 1, k) + 1):
            if cls[c] & nbrs:
                continue
            if equitable and size[c] >= self.hi:
                continue
            new_used = used + 1 if c > used else used
            if k - new_used > remaining:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted(k, n, self.nodes)
            cls[c] |= bit
            size[c] += 1
            self.color[v] = c
            self.uncolored &= ~bit
            became_hi = equitable and size[c] == self.hi
            if became_hi:
                self.at_hi += 1
            ok = True
            if equitable:
                if self.at_hi > self.max_at_hi:
                    ok = False
                else:
                    deficit = sum(self.lo - s for s in size[1:] if s < self.lo)
                    ok = deficit <= remaining
            if ok and dominator:
                ok = self._dominator_alive(new_used)
            if ok and self._extend(i + 1, new_used):
                return True
            if became_hi:
                self.at_hi -= 1
            self.uncolored |= bit
            self.color[v] = 0
            size[c] -= 1
            cls[c] &= ~bit
        return False


def solve(g: Graph, cs: ConstraintSet = CHI_ED, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum number of colors of a proper coloring meeting ``cs``, with a witness.

    Raises :class:`BudgetExhausted` when more than ``budget`` search nodes would be
    needed; every ``k`` below the reported lower bound was refuted exhaustively.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    start = time.perf_counter()
    search = _Search(g, cs, budget)
    for k in range(lower_bound(g, cs), g.n + 1):
        colors = search.run(k)
        if colors is not None:
            witness = Coloring(tuple(colors))
            if not cs.satisfied_by(g, witness):
                raise AssertionError(f"solver produced an invalid {cs.name} witness {colors}")
            return SolveResult(k, witness, search.nodes, time.perf_counter() - start)
    # n distinct colors always satisfy every constraint set
    raise AssertionError("no coloring found with n colors")


def _rgs_partitions(n: int, k: int, adj: list[set[int]]):
    """Proper colorings of 1..n in restricted-growth form with exactly k colors."""
    color = [0] * (n + 1)

    def rec(v: int, used: int):
        if v > n:
            if used == k:
                yield tuple(color[1:])
            return
        if k - used > n - v + 1:
            return
        for c in range(1, min(used + 1, k) + 1):
            if any(color[u] == c for u in adj[v] if u < v):
                continue
            color[v] = c
            yield from rec(v + 1, max(used, c))
        color[v] = 0

    yield from rec(1, 0)


def exhaustive_oracle(g: Graph, cs: ConstraintSet = CHI_ED) -> int:
    """Reference value by plain enumeration; independent of :func:`solve`'s pruning.

    Every proper assignment onto exactly ``k`` colors is generated (up to renaming
    colors, which no constraint can detect) and checked directly against the
    definitions.
    """
    n = g.n
    if n > ORACLE_MAX_N:
        raise OracleTooLarge(f"exhaustive oracle is capped at n <= {ORACLE_MAX_N}, got n={n}")
    adj = [set()] + [set(g.adj[v - 1]) for v in range(1, n + 1)]
    closed = [set()] + [adj[v] | {v} for v in range(1, n + 1)]
    for k in range(1, n + 1):
        for colors in _rgs_partitions(n, k, adj):
            classes = [{v for v in range(1, n + 1) if colors[v - 1] == c} for c in range(1, k + 1)]
            if cs.equitable:
                sizes = [len(s) for s in classes]
                if max(sizes) - min(sizes) > 1:
                    continue
            if cs.dominator and not all(any(s <= closed[v] for s in classes) for v in range(1, n + 1)):
                continue
            return k
    raise AssertionError("unreachable: n colors always suffice")

