from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field as dataclass_field

import numpy as np

from ..errors import EnumerationBudgetExceeded, QuadraticStructureError, ShapeError
from ..fields import conjugate
from ..linalg import conjugate_transpose, determinant, rank, row_space_basis, vconcat
from .weights import (
    distance_from_distribution,
    is_formally_self_dual,
    weight_distribution,
)

logger = logging.getLogger(__name__)

INNER_PRODUCTS = ("E", "H")


@dataclass(eq=False)
class LinearCode:
    """Row space of a generator matrix, tagged with the inner product used for duals and hulls.

    `generator_matrix` is kept as supplied; `G` is its reduced row echelon basis.
    """

    field: object
    inner: str
    generator_matrix: object
    G: object

    @property
    def N(self):
        return self.G.shape[1]

    @property
    def K(self):
        return self.G.shape[0]

    def __repr__(self):
        return f"LinearCode([{self.N},{self.K}] over {self.field}, inner={self.inner})"


def _check_inner(field, inner):
    if inner not in INNER_PRODUCTS:
        raise ValueError(f"Unsupported inner product: {inner}")
    if inner == "H" and field.quadratic_base is None:
        raise QuadraticStructureError(f"Hermitian inner product needs a quadratic field, got {field}")


def from_generator(field, G, inner="E"):
    _check_inner(field, inner)
    if G.ndim != 2:
        raise ShapeError(f"Generator must be a matrix, got shape {G.shape}")
    if not np.any(G.view(np.ndarray)):
        raise ValueError("Generator matrix is zero")
    return LinearCode(field=field, inner=inner, generator_matrix=G, G=row_space_basis(G))


def _zero_code(field, N, inner):
    empty = field.GF.Zeros((0, N))
    return LinearCode(field=field, inner=inner, generator_matrix=empty, G=empty)


def dual(code):
    if code.K == 0:
        full = code.field.GF.Identity(code.N)
        return LinearCode(field=code.field, inner=code.inner, generator_matrix=full, G=full)
    if code.K == code.N:
        return _zero_code(code.field, code.N, code.inner)
    # <g, y>_H = 0 iff conj(g) . y = 0
    rows = code.G if code.inner == "E" else conjugate(code.G)
    basis = rows.null_space()
    return LinearCode(field=code.field, inner=code.inner, generator_matrix=basis, G=row_space_basis(basis))


def gram_matrix(code):
    if code.inner == "E":
        return code.G @ code.G.T
    return code.G @ conjugate_transpose(code.G)


def hull_dimension(code, method="rank"):
    if method == "rank":
        return code.K - rank(gram_matrix(code))
    elif method == "intersection":
        other = dual(code)
        if code.K == 0 or other.K == 0:
            return 0
        return code.K + other.K - rank(vconcat(code.G, other.G))
    else:
        raise ValueError(f"Unsupported hull method: {method}")


def is_lcd(code):
    if code.K == 0:
        return True
    return bool(determinant(gram_matrix(code)) != 0)


def griesmer_defect(N, K, D, q):
    return N - sum(-(-D // q**i) for i in range(K))


@dataclass
class CodeReport:
    N: int
    K: int
    D: int | None
    q: int
    inner: str
    hull_dim: int
    is_lcd: bool
    is_fsd: bool | None
    griesmer_defect: int | None
    weight_distribution: list | None = dataclass_field(default=None)
    construction: str = ""
    skipped_reason: str = ""

    @property
    def params(self):
        return (self.N, self.K, self.D)

    def params_text(self):
        distance = "?" if self.D is None else self.D
        return f"[{self.N},{self.K},{distance}]"

    def summary_line(self):
        def flag(value):
            return "?" if value is None else ("y" if value else "n")

        defect = "?" if self.griesmer_defect is None else self.griesmer_defect
        return (
            f"{self.params_text()}_{self.q} inner={self.inner} hull={self.hull_dim} "
            f"lcd={flag(self.is_lcd)} fsd={flag(self.is_fsd)} griesmer_defect={defect}"
        )

    def distribution_csv(self):
        if self.weight_distribution is None:
            return ""
        return "\n".join(f"{i},{count}" for i, count in enumerate(self.weight_distribution))

    def to_dict(self):
        return asdict(self)


def analyze_code(code, construction="", budget=None, workers=None):
    """Full report for a code. An enumeration over budget leaves D, FSD and the Griesmer defect unknown."""
    hull = hull_dimension(code)
    q = code.field.order
    report = CodeReport(
        N=code.N,
        K=code.K,
        D=None,
        q=q,
        inner=code.inner,
        hull_dim=hull,
        is_lcd=hull == 0,
        is_fsd=None,
        griesmer_defect=None,
        construction=construction,
    )
    try:
        distribution = weight_distribution(code, budget=budget, workers=workers)
    except EnumerationBudgetExceeded as exc:
        logger.warning("Skipping distance for %s: %s", construction or repr(code), exc)
        report.skipped_reason = str(exc)
        return report
    report.weight_distribution = distribution
    report.D = distance_from_distribution(distribution)
    report.is_fsd = is_formally_self_dual(code, distribution=distribution)
    report.griesmer_defect = griesmer_defect(code.N, code.K, report.D, q)
    return report
