"""Formula-versus-solver surveys over family grids."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from . import __version__
from .constructions import NoClosedForm, bistar_printed_formula, chi_ed_formula
from .graph import FAMILIES, GraphClassSpec, build
from .partitions import chi_ed_complete_bipartite
from .solver import CHI_ED, DEFAULT_BUDGET, BudgetExhausted, solve

__all__ = [
    "CSV_HEADER",
    "SURVEY_FAMILIES",
    "VERDICTS",
    "DiscrepancyRecord",
    "SurveyReport",
    "parse_family",
    "run_survey",
    "survey_grid",
]

VERDICTS = ("agree", "diverge", "out-of-range-info", "unknown")
CSV_HEADER = ["family", "params", "formula", "in_range", "oracle", "verdict"]

# "bistar-printed" checks the order-sensitive printed bi-star expression
SURVEY_FAMILIES = (
    "path", "cycle", "complete", "bistar", "bistar-printed", "wheel", "helm", "complete-bipartite",
    "complement-path", "complement-cycle", "complement-bistar", "complement-wheel", "complement-helm",
)


def parse_family(name: str) -> tuple[str, bool]:
    """Split ``complement-cycle`` into ``("cycle", True)``."""
    complemented = name.startswith("complement-")
    base = name[len("complement-"):] if complemented else name
    if base not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    return base, complemented


@dataclass(frozen=True)
class DiscrepancyRecord:
    family: str
    params: tuple[int, ...]
    formula: int | None
    in_range: bool
    oracle: int | None
    verdict: str

    def row(self) -> list[str]:
        return [
            self.family,
            " ".join(map(str, self.params)),
            "none" if self.formula is None else str(self.formula),
            "true" if self.in_range else "false",
            "unknown(budget)" if self.oracle is None else str(self.oracle),
            self.verdict,
        ]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "formula": self.formula,
            "in_range": self.in_range,
            "oracle": self.oracle,
            "verdict": self.verdict,
        }


def verdict(formula: int | None, in_range: bool, oracle: int | None) -> str:
    if not in_range or formula is None:
        return "out-of-range-info"
    if oracle is None:
        return "unknown"
    return "agree" if formula == oracle else "diverge"


def _formula(family: str, spec: GraphClassSpec) -> tuple[int | None, bool]:
    if family == "complete-bipartite":
        return chi_ed_complete_bipartite(*spec.params), True
    if family == "bistar-printed":
        a, b = spec.params
        return bistar_printed_formula(a, b), a >= 2 and b >= 2
    try:
        result = chi_ed_formula(spec)
    except NoClosedForm:
        return None, False
    return result.value, result.in_range


def _spec_for(family: str, params: tuple[int, ...]) -> GraphClassSpec:
    base, complemented = parse_family("bistar" if family == "bistar-printed" else family)
    return GraphClassSpec(base, params, complemented)


def survey_grid(family: str, max_size: int, min_size: int | None = None) -> list[tuple[int, ...]]:
    """Parameter tuples for ``family`` with every parameter in ``[min, max_size]``, ascending."""
    base, _ = parse_family("bistar" if family == "bistar-printed" else family)
    _, minima = FAMILIES[base]
    ranges = [range(max(lo, min_size or lo), max_size + 1) for lo in minima]
    return list(product(*ranges))


def evaluate(family: str, params: tuple[int, ...], budget: int = DEFAULT_BUDGET) -> DiscrepancyRecord:
    spec = _spec_for(family, params)
    formula, in_range = _formula(family, spec)
    try:
        oracle: int | None = solve(build(spec), CHI_ED, budget).value
    except BudgetExhausted:
        oracle = None
    return DiscrepancyRecord(family, params, formula, in_range, oracle, verdict(formula, in_range, oracle))


def _evaluate_job(job: tuple[str, tuple[int, ...], int]) -> DiscrepancyRecord:
    return evaluate(*job)


@dataclass
class SurveyReport:
    records: list[DiscrepancyRecord]
    budget: int
    version: str = __version__
    summary: dict[str, int] = field(init=False)

    def __post_init__(self) -> None:
        tally = Counter(r.verdict for r in self.records)
        self.summary = {v: tally.get(v, 0) for v in VERDICTS}

    def to_dict(self) -> dict:
        return {
            "tool": "edcolor",
            "version": self.version,
            "budget": self.budget,
            "summary": self.summary,
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(r.row() for r in self.records)
        return buf.getvalue()


def run_survey(
    families: list[str] | tuple[str, ...] = SURVEY_FAMILIES,
    max_size: int = 7,
    budget: int = DEFAULT_BUDGET,
    min_size: int | None = None,
    jobs: int = 1,
) -> SurveyReport:
    """Compare each family's formula with the exact solver over the size grid.

    Records are ordered by family (in the order given) and then by parameters,
    whatever ``jobs`` is.
    """
    for family in families:
        if family not in SURVEY_FAMILIES:
            raise ValueError(f"unknown survey family {family!r}; choose from {', '.join(SURVEY_FAMILIES)}")
    work = [(f, p, budget) for f in families for p in survey_grid(f, max_size, min_size)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_evaluate_job, work))
    else:
        records = [_evaluate_job(job) for job in work]
    return SurveyReport(records, budget)
