from .matrix_utils import (
    characteristic_polynomial,
    conjugate_transpose,
    determinant,
    has_eigenvalue,
    hconcat,
    identity,
    multiply,
    rank,
    row_space_basis,
    transpose,
    vconcat,
)
from .polynomial_utils import (
    conjugate_poly,
    dickson_eval,
    format_polynomial,
    parse_polynomial,
    poly_eval_matrix,
)
from .spectrum import (
    SpectrumComponent,
    SpectrumMultiset,
    char_poly_value,
    eigen_spectrum,
    spectrum_components,
    spectrum_consistency,
)
from .tridiagonal import TridiagonalSpec, build_tridiagonal, build_toeplitz, decompose_order
