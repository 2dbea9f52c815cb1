"""Vertex colorings and the proper / equitable / dominator validator."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Graph, GraphFormatError

__all__ = [
    "Coloring",
    "ColoringReport",
    "dominated_classes",
    "is_equitable",
    "is_proper",
    "read_coloring",
    "validate",
    "write_coloring",
]


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color with dense colors ``1..k``.

    ``colors[v - 1]`` is the color of vertex ``v``. Construct through
    :meth:`from_sequence` or :meth:`from_mapping` to accept sparse labels; those
    relabel by first occurrence and set ``normalized``.
    """

    colors: tuple[int, ...]
    normalized: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not self.colors:
            raise ValueError("a coloring needs at least one vertex")
        used = set(self.colors)
        if used != set(range(1, len(used) + 1)):
            raise ValueError(f"colors must be dense 1..k, got {sorted(used)}")

    @classmethod
    def from_sequence(cls, colors: Sequence[int]) -> Coloring:
        colors = tuple(colors)
        if any(not isinstance(c, int) or c < 1 for c in colors):
            raise ValueError("colors must be positive integers")
        used = set(colors)
        if used == set(range(1, len(used) + 1)):
            return cls(colors)
        relabel: dict[int, int] = {}
        for c in colors:
            relabel.setdefault(c, len(relabel) + 1)
        return cls(tuple(relabel[c] for c in colors), normalized=True)

    @classmethod
    def from_mapping(cls, assignment: Mapping[int, int]) -> Coloring:
        n = len(assignment)
        if set(assignment) != set(range(1, n + 1)):
            raise ValueError("assignment must cover vertices 1..n exactly once")
        return cls.from_sequence([assignment[v] for v in range(1, n + 1)])

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        return max(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v - 1]

    def classes(self) -> list[frozenset[int]]:
        """Color classes ``V_1..V_k`` (index ``i - 1`` holds ``V_i``)."""
        out: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors, start=1):
            out[c - 1].add(v)
        return [frozenset(s) for s in out]

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.k
        for c in self.colors:
            sizes[c - 1] += 1
        return sizes


def _check_domain(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices but the graph has {g.n}")


def is_proper(g: Graph, c: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, edge)`` with the first monochromatic edge."""
    _check_domain(g, c)
    for u, v in g.edges():
        if c[u] == c[v]:
            return False, (u, v)
    return True, None


def dominated_classes(g: Graph, c: Coloring, v: int) -> frozenset[int]:
    """Colors ``i`` whose whole class lies in the closed neighborhood of ``v``."""
    _check_domain(g, c)
    closed = g.neighbors(v) | {v}
    return frozenset(i for i, cls in enumerate(c.classes(), start=1) if cls <= closed)


def is_equitable(c: Coloring) -> bool:
    sizes = c.class_sizes()
    return max(sizes) - min(sizes) <= 1


@dataclass(frozen=True)
class ColoringReport:
    proper: bool
    improper_edge: tuple[int, int] | None
    equitable: bool
    size_range: tuple[int, int]
    dominator: bool
    dom_classes: dict[int, frozenset[int]]
    class_sizes: list[int]
    normalized: bool = False

    @property
    def equitable_dominator(self) -> bool:
        return self.proper and self.equitable and self.dominator

    @property
    def num_colors(self) -> int:
        return len(self.class_sizes)

    def violations(self) -> list[dict]:
        out: list[dict] = []
        if not self.proper:
            out.append({"kind": "improper", "edge": list(self.improper_edge)})
        if not self.equitable:
            out.append({"kind": "inequitable", "min_size": self.size_range[0],
                        "max_size": self.size_range[1]})
        for v, doms in self.dom_classes.items():
            if not doms:
                out.append({"kind": "no-dom-class", "vertex": v})
        return out

    def to_dict(self) -> dict:
        return {
            "proper": self.proper,
            "equitable": self.equitable,
            "dominator": self.dominator,
            "equitable_dominator": self.equitable_dominator,
            "num_colors": self.num_colors,
            "class_sizes": list(self.class_sizes),
            "violations": self.violations(),
            "dom_classes": {str(v): sorted(d) for v, d in self.dom_classes.items()},
            "normalized": self.normalized,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def validate(g: Graph, c: Coloring) -> ColoringReport:
    _check_domain(g, c)
    proper, edge = is_proper(g, c)
    sizes = c.class_sizes()
    classes = c.classes()
    dom: dict[int, frozenset[int]] = {}
    for v in g.vertices:
        closed = g.adj[v - 1] | {v}
        dom[v] = frozenset(i for i, cls in enumerate(classes, start=1) if cls <= closed)
    return ColoringReport(
        proper=proper,
        improper_edge=edge,
        equitable=max(sizes) - min(sizes) <= 1,
        size_range=(min(sizes), max(sizes)),
        dominator=all(dom.values()),
        dom_classes=dom,
        class_sizes=sizes,
        normalized=c.normalized,
    )


def write_coloring(c: Coloring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.colors, start=1))


def read_coloring(text: str | Iterable[str]) -> Coloring:
    """Parse ``v c`` lines, one per vertex; vertices must be exactly ``1..n``."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    assignment: dict[int, int] = {}
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected 'v c', got {line.strip()!r}", lineno)
        try:
            v, col = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"non-integer field in {line.strip()!r}", lineno) from None
        if v < 1 or col < 1:
            raise GraphFormatError(f"vertex and color must be positive, got {v} {col}", lineno)
        if v in assignment:
            raise GraphFormatError(f"vertex {v} colored twice", lineno)
        assignment[v] = col
    if not assignment:
        raise GraphFormatError("empty coloring")
    missing = set(range(1, len(assignment) + 1)) - set(assignment)
    if missing:
        raise GraphFormatError(f"vertices not colored: {sorted(missing)[:10]}")
    return Coloring.from_mapping(assignment)
