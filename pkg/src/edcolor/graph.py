"""Simple undirected graphs on vertices 1..n, family generators and edge-list I/O."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

__all__ = [
    "FAMILIES",
    "Graph",
    "GraphClassSpec",
    "GraphFormatError",
    "build",
    "closed_neighborhood",
    "complement",
    "empty_graph",
    "is_connected",
    "random_connected_graph",
    "read_graph",
    "write_graph",
]


class GraphFormatError(ValueError):
    """Malformed graph text; ``line`` is the 1-based offending line (0 if unknown)."""

    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v - 1]`` is the neighbor set of vertex ``v``."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"a graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj, start=1):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 1 <= u <= self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} outside 1..{self.n}")
                if v not in self.adj[u - 1]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u - 1].add(v)
            rows[v - 1].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adj[v - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in ascending lexicographic order."""
        return [(u, v) for u in self.vertices for v in sorted(self.adj[u - 1]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def masks(self) -> list[int]:
        """Open-neighborhood bitmasks, bit ``v`` set for neighbor ``v`` (index 0 unused)."""
        out = [0] * (self.n + 1)
        for v, nbrs in enumerate(self.adj, start=1):
            m = 0
            for u in nbrs:
                m |= 1 << u
            out[v] = m
        return out

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")


# family name -> (parameter names, minimum value per parameter)
FAMILIES: dict[str, tuple[tuple[str, ...], tuple[int, ...]]] = {
    "path": (("n",), (1,)),
    "cycle": (("n",), (3,)),
    "complete": (("n",), (1,)),
    "complete-bipartite": (("a", "b"), (1, 1)),
    "bistar": (("a", "b"), (1, 1)),
    "wheel": (("t",), (3,)),
    "helm": (("t",), (3,)),
}


@dataclass(frozen=True, order=True)
class GraphClassSpec:
    """A named family instance, optionally complemented.

    >>> GraphClassSpec("wheel", (11,))
    GraphClassSpec(family='wheel', params=(11,), complement=False)
    """

    family: str
    params: tuple[int, ...]
    complement: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        names, minima = FAMILIES[self.family]
        if len(self.params) != len(names):
            raise ValueError(f"{self.family} takes {len(names)} parameter(s) ({', '.join(names)}), "
                             f"got {len(self.params)}")
        for name, lo, value in zip(names, minima, self.params):
            if not isinstance(value, int) or value < lo:
                raise ValueError(f"{self.family}: {name} >= {lo} required, got {value}")

    @property
    def base(self) -> GraphClassSpec:
        return GraphClassSpec(self.family, self.params)

    @property
    def name(self) -> str:
        return f"complement-{self.family}" if self.complement else self.family

    def __str__(self) -> str:
        return f"{self.name} {' '.join(map(str, self.params))}"


def _path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return _path_edges(n) + [(1, n)]


def _wheel_edges(t: int) -> list[tuple[int, int]]:
    hub = t + 1
    return _cycle_edges(t) + [(i, hub) for i in range(1, t + 1)]


def build(spec: GraphClassSpec) -> Graph:
    """Build a family instance with its canonical vertex numbering.

    Path/Cycle: ``v_i = i``. CompleteBipartite a b: sides ``1..a`` and ``a+1..a+b``.
    BiStar a b: supports 1 and 2, pendants of 1 are ``3..a+2``, pendants of 2 are
    ``a+3..a+b+2``. Wheel t: rim ``1..t`` in cycle order, hub ``t+1``. Helm t: the
    wheel plus pendant ``t+1+i`` on rim vertex ``i``.
    """
    p = spec.params
    if spec.family == "path":
        g = Graph.from_edges(p[0], _path_edges(p[0]))
    elif spec.family == "cycle":
        g = Graph.from_edges(p[0], _cycle_edges(p[0]))
    elif spec.family == "complete":
        g = Graph.from_edges(p[0], combinations(range(1, p[0] + 1), 2))
    elif spec.family == "complete-bipartite":
        a, b = p
        g = Graph.from_edges(a + b, ((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)))
    elif spec.family == "bistar":
        a, b = p
        edges = [(1, 2)]
        edges += [(1, x) for x in range(3, a + 3)]
        edges += [(2, x) for x in range(a + 3, a + b + 3)]
        g = Graph.from_edges(a + b + 2, edges)
    elif spec.family == "wheel":
        g = Graph.from_edges(p[0] + 1, _wheel_edges(p[0]))
    elif spec.family == "helm":
        t = p[0]
        g = Graph.from_edges(2 * t + 1, _wheel_edges(t) + [(i, t + 1 + i) for i in range(1, t + 1)])
    else:  # pragma: no cover - guarded by GraphClassSpec
        raise ValueError(spec.family)
    return complement(g) if spec.complement else g


def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset() for _ in range(n)))


def complement(g: Graph) -> Graph:
    everyone = frozenset(g.vertices)
    return Graph(g.n, tuple(everyone - nbrs - {v} for v, nbrs in enumerate(g.adj, start=1)))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v) | {v}


def is_connected(g: Graph) -> bool:
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u in g.adj[v - 1]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def random_connected_graph(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    """Random spanning tree on ``1..n`` plus each remaining pair independently with probability ``p``."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for pair in combinations(range(1, n + 1), 2):
        if pair not in edges and rng.random() < p:
            edges.add(pair)
    return Graph.from_edges(n, edges)


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _ints(line: str, count: int, lineno: int, what: str) -> tuple[int, ...]:
    fields = line.split()
    if len(fields) != count:
        raise GraphFormatError(f"expected {what}, got {line.strip()!r}", lineno)
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise GraphFormatError(f"non-integer field in {line.strip()!r}", lineno) from None


def read_graph(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` edge lines format written by :func:`write_graph`."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphFormatError("empty input: missing 'n m' header", 1)
    n, m = _ints(lines[0], 2, 1, "header 'n m'")
    if n < 1 or m < 0:
        raise GraphFormatError(f"invalid header n={n} m={m}", 1)
    body = lines[1:]
    if len(body) != m:
        # point at the first missing line, or at the first surplus one
        lineno = len(lines) + 1 if len(body) < m else m + 2
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow", lineno)
    seen: set[frozenset[int]] = set()
    for lineno, line in enumerate(body, start=2):
        u, v = _ints(line, 2, lineno, "edge 'u v'")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex index out of range 1..{n} in edge {u} {v}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = frozenset((u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
    return Graph.from_edges(n, (tuple(e) for e in seen))
