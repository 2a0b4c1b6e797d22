from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import galois

from ..codes import analyze_code, hull_dimension
from ..config import get_setting
from ..constructions import ConstructionSpec, construction_for, one_dim_hull_by_spectrum
from ..errors import SearchSpaceTooLarge
from ..linalg import eigen_spectrum, format_polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SearchConfig:
    tridiag: object
    t: int
    degree: int
    coefficients: tuple
    inner: str = "E"
    budget: int | None = None
    workers: int | None = None
    use_filter: bool = True
    limit: int | None = None

    @property
    def field(self):
        return self.tridiag.field

    @property
    def space_size(self):
        return (len(self.coefficients) ** (self.degree + 1)) ** (self.t - 1)


@dataclass
class SearchRow:
    key: tuple
    polynomials: tuple
    report: object

    @property
    def text(self):
        return ";".join(format_polynomial(f) for f in self.polynomials)


def candidate_tuples(config):
    """Yield (coefficient key, polynomial tuple) for every candidate, in lexicographic key order."""
    GF = config.field.GF
    ordered = sorted(config.coefficients, key=int)
    single = list(itertools.product(ordered, repeat=config.degree + 1))
    for combo in itertools.product(single, repeat=config.t - 1):
        key = tuple(int(c) for coefficients in combo for c in coefficients)
        polys = tuple(
            galois.Poly(GF([int(c) for c in coefficients]), order="asc") for coefficients in combo
        )
        yield key, polys


def run_search(config):
    """Survivors of the LCD filter, best distance first, ties broken by the smallest coefficient vector."""
    size = config.space_size
    limit = get_setting("search_space_limit", config.limit)
    logger.info("Search space: %d candidate tuples", size)
    if size > limit:
        raise SearchSpaceTooLarge(size, limit)
    if size == 0:
        return []

    spectrum = None
    if config.use_filter and config.tridiag.b * config.tridiag.c != 0:
        spectrum = eigen_spectrum(config.tridiag, need_mu=config.field.p != 2)

    def is_survivor(spec):
        if spectrum is None:
            return hull_dimension(construction_for(spec).code()) == 0
        return one_dim_hull_by_spectrum(spec, spectrum=spectrum).decision == "lcd"

    survivors = []
    for key, polys in candidate_tuples(config):
        spec = ConstructionSpec(tridiag=config.tridiag, inner=config.inner, polynomials=polys)
        if is_survivor(spec):
            survivors.append((key, spec))
    logger.info("%d of %d candidates are LCD", len(survivors), size)

    def evaluate(item):
        key, spec = item
        report = analyze_code(construction_for(spec).code(), spec.describe(), budget=config.budget, workers=1)
        return SearchRow(key=key, polynomials=spec.polynomials, report=report)

    workers = max(1, int(get_setting("workers", config.workers)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(evaluate, survivors))
    rows.sort(key=lambda row: (-(row.report.D or 0), row.key))
    return rows
