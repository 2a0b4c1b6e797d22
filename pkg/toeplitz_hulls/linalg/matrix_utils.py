import galois
import numpy as np

from ..errors import FieldMismatchError, ShapeError
from ..fields import conjugate, descriptor_of, field_embedding


def identity(field, n):
    return field.GF.Identity(n)


def multiply(A, B):
    if type(A) is not type(B):
        raise FieldMismatchError("Matrices live in different fields")
    if A.shape[1] != B.shape[0]:
        raise ShapeError(f"Cannot multiply {A.shape} by {B.shape}")
    return A @ B


def transpose(A):
    return A.T


def conjugate_transpose(A):
    return conjugate(A).T


def _require_square(A):
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"Expected a square matrix, got shape {A.shape}")


def determinant(A):
    _require_square(A)
    if A.shape[0] == 0:
        return type(A)(1)
    return np.linalg.det(A)


def rank(A):
    if A.size == 0:
        return 0
    return int(np.linalg.matrix_rank(A))


def hconcat(*blocks):
    GF = type(blocks[0])
    rows = blocks[0].shape[0]
    for block in blocks:
        if type(block) is not GF:
            raise FieldMismatchError("Blocks live in different fields")
        if block.shape[0] != rows:
            raise ShapeError("Blocks have different row counts")
    return GF(np.hstack([block.view(np.ndarray) for block in blocks]))


def vconcat(*blocks):
    GF = type(blocks[0])
    return GF(np.vstack([block.view(np.ndarray) for block in blocks]))


def row_space_basis(G):
    """Nonzero rows of the reduced row echelon form of G."""
    if G.shape[0] == 0:
        return G
    reduced = G.row_reduce()
    nonzero = np.any(reduced.view(np.ndarray) != 0, axis=1)
    return reduced[nonzero]


def characteristic_polynomial(A):
    _require_square(A)
    if A.shape[0] == 1:
        # galois indexes past the end for 1x1 input
        return galois.Poly(type(A)([1, int(-A[0, 0])]))
    return A.characteristic_poly()


def has_eigenvalue(A, value):
    """Whether `value` (in A's field or an extension of it) is a root of A's characteristic polynomial."""
    char_poly = characteristic_polynomial(A)
    base, target = descriptor_of(A), descriptor_of(value)
    if base is not target:
        char_poly = field_embedding(base, target).poly(char_poly)
    return bool(char_poly(value) == 0)
