"""Closed-form chi_ed values for named families and colorings that attain them."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from .coloring import Coloring, validate
from .graph import GraphClassSpec, build
from .partitions import bipartite_coloring

__all__ = [
    "EtaTable",
    "FormulaResult",
    "NoClosedForm",
    "OutOfRange",
    "bistar_printed_formula",
    "chi_ed_formula",
    "color_bistar",
    "color_complement",
    "color_cycle",
    "color_helm",
    "color_path_case1",
    "color_wheel",
    "construct",
    "construction_range",
    "eta_table",
    "path_formula",
    "realization_graph",
]

log = logging.getLogger(__name__)


class NoClosedForm(LookupError):
    """No closed form for chi_ed is known for this family; use the solver or the partition module."""


class OutOfRange(ValueError):
    """Parameters below the range in which a construction is known to work."""


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def path_formula(n: int) -> int:
    return 2 * (n // 3) + n % 3


def wheel_formula(t: int) -> int:
    return _ceil_half(t) + 1


def bistar_printed_formula(a: int, b: int) -> int:
    """The order-sensitive printed bi-star expression ``2 + ceil(a/2) + floor(b/2)``.

    Kept only so surveys can show where it departs from the symmetric value.
    """
    return 2 + _ceil_half(a) + b // 2


@dataclass(frozen=True)
class FormulaResult:
    spec: GraphClassSpec
    value: int
    validity: str
    in_range: bool


# (family, complement) -> (value function, validity predicate, validity description)
_FORMULAS: dict[tuple[str, bool], tuple[Callable, Callable, str]] = {
    ("path", False): (path_formula, lambda n: n >= 1, "n >= 1"),
    ("cycle", False): (path_formula, lambda n: n >= 6, "n >= 6"),
    ("complete", False): (lambda n: n, lambda n: n >= 1, "n >= 1"),
    ("bistar", False): (lambda a, b: 2 + _ceil_half(a + b), lambda a, b: a >= 2 and b >= 2, "a, b >= 2"),
    ("wheel", False): (wheel_formula, lambda t: t >= 4, "t >= 4"),
    ("helm", False): (lambda t: wheel_formula(t - 1) + t, lambda t: t >= 5, "t >= 5"),
    ("path", True): (_ceil_half, lambda n: n >= 5, "n >= 5"),
    ("cycle", True): (_ceil_half, lambda n: n >= 5, "n >= 5"),
    ("bistar", True): (lambda a, b: a + b, lambda a, b: a >= 2 and b >= 2, "a, b >= 2"),
    ("wheel", True): (lambda t: 1 + _ceil_half(t), lambda t: t >= 5, "t >= 5"),
    ("helm", True): (lambda t: t + 1, lambda t: t >= 5, "t >= 5"),
}


def chi_ed_formula(spec: GraphClassSpec) -> FormulaResult:
    """Claimed chi_ed for ``spec``; ``in_range`` tells whether the claim is asserted there.

    Out-of-range instances still get the formula's value.
    """
    try:
        value, valid, text = _FORMULAS[spec.family, spec.complement]
    except KeyError:
        raise NoClosedForm(f"no closed form for {spec.name}") from None
    return FormulaResult(spec, value(*spec.params), text, bool(valid(*spec.params)))


@dataclass(frozen=True)
class EtaTable:
    """Color counts of the four path coloring patterns; ``None`` where a pattern is undefined."""

    n: int
    eta: dict[int, int | None]

    def minimum(self) -> int:
        return min(v for v in self.eta.values() if v is not None)


def _eta1(n: int) -> int:
    return 2 * (n // 3) + (0, 1, 2)[n % 3]


def eta_table(n: int) -> EtaTable:
    if n < 1:
        raise ValueError("n must be positive")
    eta1 = _eta1(n)
    eta2 = 2 * (n // 3) + 1 if n % 3 == 0 else eta1
    eta3 = None
    if n >= 7:
        eta3 = 3 * ((n - 2) // 5) + {0: 4, 1: 4, 4: 4, 2: 2, 3: 1}[n % 5]
    eta4 = eta1 if n >= 6 else None
    return EtaTable(n, {1: eta1, 2: eta2, 3: eta3, 4: eta4})


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise OutOfRange(message)


def color_path_case1(n: int) -> Coloring:
    """Blocks of three consecutive vertices get two colors: ``(1,2,1), (3,4,3), ...``."""
    _require(n >= 1, "n >= 1 required")
    colors = []
    for j in range(1, n + 1):
        colors.append(j - j // 3 - 1 if j % 3 == 0 else j - j // 3)
    return Coloring(tuple(colors))


def color_cycle(n: int) -> Coloring:
    """Path pattern on the cycle, repairing the last two vertices if the wrap edge breaks it."""
    _require(n >= 6, "n >= 6 required")
    g = build(GraphClassSpec("cycle", (n,)))
    base = color_path_case1(n)
    if validate(g, base).equitable_dominator:
        return base
    k = base.k
    for x in range(1, k + 1):
        for y in range(1, k + 1):
            colors = list(base.colors)
            colors[n - 2], colors[n - 1] = x, y
            if set(colors) != set(range(1, k + 1)):
                continue
            candidate = Coloring(tuple(colors))
            if validate(g, candidate).equitable_dominator:
                return candidate
    from .solver import solve  # local import: constructions must not depend on the solver otherwise

    log.warning("cycle %d: no repair within %d colors, falling back to solver witness", n, k)
    return solve(g).witness


def color_complete(n: int) -> Coloring:
    _require(n >= 1, "n >= 1 required")
    return Coloring(tuple(range(1, n + 1)))


def color_bistar(a: int, b: int) -> Coloring:
    """Supports get 1 and 2; pendants, listed u-side then v-side, are paired consecutively.

    When ``a`` is odd the last u-side pendant shares its color with the first
    v-side pendant, and an odd total leaves the final pendant alone.
    """
    _require(a >= 2 and b >= 2, "a, b >= 2 required")
    pendants = [3 + p // 2 for p in range(a + b)]
    return Coloring((1, 2, *pendants))


def _antipodal(t: int, first: int) -> list[int]:
    """Colors for ``t`` positions: ``i`` and ``i + floor(t/2)`` share a color; odd ``t`` ends alone."""
    half = t // 2
    colors = [0] * t
    for i in range(half):
        colors[i] = colors[i + half] = first + i
    if t % 2:
        colors[t - 1] = first + half
    return colors


def color_wheel(t: int) -> Coloring:
    """Hub gets 1, rim vertices ``v_i`` and ``v_{i+floor(t/2)}`` share ``i + 1``."""
    if t == 3:
        # W_{1,3} is K_4
        return color_complete(4)
    _require(t >= 4, "t >= 4 required")
    return Coloring(tuple(_antipodal(t, 2) + [1]))


def color_helm(t: int) -> Coloring:
    _require(t >= 5, "t >= 5 required")
    rim = [2] + _antipodal(t - 1, 3)
    first_pendant = max(rim) + 1
    pendants = [1] + [first_pendant + i for i in range(t - 1)]
    hub = [1]
    return Coloring(tuple(rim + hub + pendants))


_COMPLEMENT_RANGES = {
    "path": (lambda n: n >= 5, "n >= 5 required"),
    "cycle": (lambda n: n >= 5, "n >= 5 required"),
    "bistar": (lambda a, b: a >= 2 and b >= 2, "a, b >= 2 required"),
    "wheel": (lambda t: t >= 5, "t >= 5 required"),
    "helm": (lambda t: t >= 4, "t >= 4 required"),
}


def color_complement(family: str, params: tuple[int, ...]) -> Coloring:
    """Coloring of the complement of ``family(params)``.

    Path and cycle: consecutive pairs share a color. Wheel: the rim as for the
    cycle, the isolated hub alone. Bi-star: pendants form a clique, each support
    reuses the color of one of its own pendants. Helm: pendants and hub form a
    clique, rim vertex ``v_i`` reuses the color of its pendant ``u_i``.
    """
    if family not in _COMPLEMENT_RANGES:
        raise NoClosedForm(f"no complement construction for {family}")
    valid, message = _COMPLEMENT_RANGES[family]
    _require(valid(*params), message + " (use the solver below this range)")
    if family in ("path", "cycle"):
        (n,) = params
        return Coloring(tuple(_ceil_half(i) for i in range(1, n + 1)))
    if family == "wheel":
        (t,) = params
        return Coloring(tuple([_ceil_half(i) for i in range(1, t + 1)] + [_ceil_half(t) + 1]))
    if family == "bistar":
        a, b = params
        pendants = list(range(1, a + b + 1))
        return Coloring((1, a + 1, *pendants))
    (t,) = params
    return Coloring(tuple(list(range(1, t + 1)) + [t + 1] + list(range(1, t + 1))))


def construction_range(spec: GraphClassSpec) -> str:
    if spec.complement:
        return _COMPLEMENT_RANGES[spec.family][1] if spec.family in _COMPLEMENT_RANGES else "none"
    return {"path": "n >= 1", "cycle": "n >= 6", "complete": "n >= 1", "bistar": "a, b >= 2",
            "wheel": "t >= 3", "helm": "t >= 5", "complete-bipartite": "a, b >= 1"}[spec.family]


def construct(spec: GraphClassSpec) -> Coloring:
    """Constructive coloring for any covered family instance."""
    if spec.complement:
        return color_complement(spec.family, spec.params)
    builders: dict[str, Callable[..., Coloring]] = {
        "path": color_path_case1,
        "cycle": color_cycle,
        "complete": color_complete,
        "bistar": color_bistar,
        "wheel": color_wheel,
        "helm": color_helm,
        "complete-bipartite": bipartite_coloring,
    }
    return builders[spec.family](*spec.params)


def realization_graph(k: int) -> GraphClassSpec:
    """Complete bipartite graph whose chi_ed exceeds its chi_d by exactly ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return GraphClassSpec("complete-bipartite", (2, 2))
    return GraphClassSpec("complete-bipartite", (2, 1 + 3 * k))
