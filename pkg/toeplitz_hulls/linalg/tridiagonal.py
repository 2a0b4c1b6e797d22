from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import ShapeError
from ..fields import conjugate, format_element, require_field

KINDS = ("T", "T'")


@dataclass(frozen=True, eq=False)
class TridiagonalSpec:
    """Parameters of T_n(a, b, c) or T'_n(a, b, c).

    a sits on the diagonal, c above it and b below it; T' places c and b at offsets +2 and -2.
    """

    field: object
    kind: str
    n: int
    a: object
    b: object
    c: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unsupported matrix kind: {self.kind}")
        if self.n < 1:
            raise ShapeError(f"Matrix order must be at least 1, got {self.n}")
        for value in (self.a, self.b, self.c):
            require_field(value, self.field)

    @property
    def offset(self):
        return 1 if self.kind == "T" else 2

    def is_symmetric(self):
        return bool(self.c == self.b)

    def is_hermitian(self):
        q = self.field.quadratic_base
        if q is None:
            return False
        return bool(conjugate(self.a) == self.a and self.c == self.b**q)

    def with_order(self, n, kind="T"):
        return replace(self, n=n, kind=kind)

    def describe(self):
        return (
            f"{self.kind}_{self.n}({format_element(self.a)},"
            f"{format_element(self.b)},{format_element(self.c)})"
        )


def build_tridiagonal(spec):
    GF = spec.field.GF
    n, offset = spec.n, spec.offset
    matrix = GF.Zeros((n, n))
    for i in range(n):
        matrix[i, i] = spec.a
    for i in range(n - offset):
        matrix[i, i + offset] = spec.c
        matrix[i + offset, i] = spec.b
    return matrix


def build_toeplitz(field, first_column, first_row):
    """General Toeplitz matrix with entries first_column[i - j] below and first_row[j - i] above."""
    n = len(first_column)
    if len(first_row) != n:
        raise ShapeError("Toeplitz first row and first column differ in length")
    if first_column[0] != first_row[0]:
        raise ShapeError("Toeplitz first row and first column disagree at the corner")
    matrix = field.GF.Zeros((n, n))
    for i in range(n):
        for j in range(n):
            matrix[i, j] = first_column[i - j] if i >= j else first_row[j - i]
    return matrix


def decompose_order(n_plus_1, p):
    """Split n + 1 = p^r (m + 1) with p not dividing m + 1; returns (r, m)."""
    r = 0
    while n_plus_1 % p == 0:
        n_plus_1 //= p
        r += 1
    return r, n_plus_1 - 1
