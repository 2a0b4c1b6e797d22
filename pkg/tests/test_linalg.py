import numpy as np
import pytest

from toeplitz_hulls.errors import DegenerateSpectrumError, ParseError, ShapeError
from toeplitz_hulls.fields import field_embedding, make_field, unity_context
from toeplitz_hulls.linalg import (
    TridiagonalSpec,
    build_toeplitz,
    build_tridiagonal,
    char_poly_value,
    characteristic_polynomial,
    conjugate_transpose,
    decompose_order,
    determinant,
    dickson_eval,
    eigen_spectrum,
    format_polynomial,
    has_eigenvalue,
    hconcat,
    identity,
    multiply,
    parse_polynomial,
    poly_eval_matrix,
    rank,
    spectrum_consistency,
)

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]

# (I_6 | T_6(1,1,1)^3) over GF(2), right half
EXAMPLE_CUBE = [
    [0, 1, 1, 1, 0, 0],
    [1, 1, 0, 1, 1, 0],
    [1, 0, 1, 0, 1, 1],
    [1, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 1, 1],
    [0, 0, 1, 1, 1, 0],
]


def _spec(field, n, a, b, c=None, kind="T"):
    GF = field.GF
    c = b if c is None else c
    return TridiagonalSpec(field=field, kind=kind, n=n, a=GF(a), b=GF(b), c=GF(c))


def _random_spec(rng, field, n, kind="T", nonzero=True):
    low = 1 if nonzero else 0
    a = int(rng.integers(0, field.order))
    b, c = (int(v) for v in rng.integers(low, field.order, size=2))
    return _spec(field, n, a, b, c, kind=kind)


def _multiset(spectrum):
    return {int(value): multiplicity for value, multiplicity in spectrum.pairs}


def test_build_tridiagonal_layouts():
    field = make_field(5)
    T = build_tridiagonal(_spec(field, 3, 1, 2, 3))
    assert np.array_equal(T, field.GF([[1, 3, 0], [2, 1, 3], [0, 2, 1]]))
    T = build_tridiagonal(_spec(field, 3, 1, 2, 3, kind="T'"))
    assert np.array_equal(T, field.GF([[1, 0, 3], [0, 1, 0], [2, 0, 1]]))
    T = build_tridiagonal(_spec(field, 1, 4, 2, 3))
    assert np.array_equal(T, field.GF([[4]]))


def test_tridiagonal_spec_validation():
    field = make_field(2)
    with pytest.raises(ValueError):
        _spec(field, 3, 1, 1, kind="P")
    with pytest.raises(ShapeError):
        _spec(field, 0, 1, 1)


def test_build_toeplitz():
    field = make_field(3)
    GF = field.GF
    T = build_toeplitz(field, GF([1, 2, 0]), GF([1, 1, 2]))
    assert np.array_equal(T, GF([[1, 1, 2], [2, 1, 1], [0, 2, 1]]))
    with pytest.raises(ShapeError):
        build_toeplitz(field, GF([1, 2]), GF([2, 1]))


def test_matrix_algebra_examples():
    gf2, gf4 = make_field(2), make_field(2, 2)
    assert determinant(build_tridiagonal(_spec(gf2, 2, 1, 1))) == 0
    for n in range(1, 6):
        assert rank(identity(gf4, n)) == n
    w = gf4.generator
    hermitian = build_tridiagonal(TridiagonalSpec(gf4, "T", 6, gf4.one, w**2, w))
    assert np.array_equal(conjugate_transpose(hermitian), hermitian)


def test_matrix_algebra_shape_errors():
    field = make_field(3)
    with pytest.raises(ShapeError):
        multiply(field.GF.Ones((2, 3)), field.GF.Ones((2, 3)))
    with pytest.raises(ShapeError):
        hconcat(field.GF.Ones((2, 2)), field.GF.Ones((3, 2)))
    with pytest.raises(ShapeError):
        determinant(field.GF.Ones((2, 3)))


def test_determinant_matches_cofactor_expansion():
    field = make_field(5)
    rng = np.random.default_rng(3)

    def cofactor(M):
        if M.shape[0] == 1:
            return M[0, 0]
        total = field.zero
        for j in range(M.shape[0]):
            minor = np.delete(np.delete(M.view(np.ndarray), 0, axis=0), j, axis=1)
            term = M[0, j] * cofactor(field.GF(minor))
            total = total + term if j % 2 == 0 else total - term
        return total

    for _ in range(20):
        M = field.GF(rng.integers(0, 5, size=(4, 4)))
        assert determinant(M) == cofactor(M)


def test_poly_eval_matrix_examples():
    field = make_field(2)
    T = build_tridiagonal(_spec(field, 6, 1, 1))
    assert np.array_equal(poly_eval_matrix(parse_polynomial("x", field), T), T)
    assert np.array_equal(poly_eval_matrix(parse_polynomial("1", field), T), identity(field, 6))
    cube = poly_eval_matrix(parse_polynomial("x^3", field), T)
    assert np.array_equal(cube, field.GF(EXAMPLE_CUBE))


def test_parse_and_format_polynomials():
    gf4 = make_field(2, 2)
    f = parse_polynomial("w^2*x^4+x^3+x^2", gf4)
    assert f.degree == 4
    assert format_polynomial(f) == "w^2*x^4+x^3+x^2"
    assert format_polynomial(parse_polynomial("0", gf4)) == "0"
    gf3 = make_field(3)
    assert format_polynomial(parse_polynomial("2x^5+x+1", gf3)) == "2*x^5+x+1"
    # repeated terms add up
    assert format_polynomial(parse_polynomial("x+x+x", gf3)) == "0"


@pytest.mark.parametrize("text, position", [("x^2+", 4), ("x^2+y", 4), ("", 0), ("w^2*x^+1", 0)])
def test_parse_polynomial_errors(text, position):
    with pytest.raises(ParseError) as excinfo:
        parse_polynomial(text, make_field(2, 2))
    assert excinfo.value.position == position


def test_dickson_small_orders():
    field = make_field(7)
    rng = np.random.default_rng(5)
    for _ in range(25):
        x, alpha = (field.GF(int(v)) for v in rng.integers(0, 7, size=2))
        assert dickson_eval(0, x, alpha) == 1
        assert dickson_eval(1, x, alpha) == x
        assert dickson_eval(2, x, alpha) == x**2 - alpha
        assert dickson_eval(3, x, alpha) == x**3 - field.GF(2) * alpha * x


def test_dickson_order_four_over_gf5():
    field = make_field(5)
    one, two = field.one, field.GF(2)
    for x in field.GF.elements:
        assert dickson_eval(4, x, one) == x**4 + two * x**2 + one


@pytest.mark.parametrize("p, m", [(7, 1), (3, 2), (2, 3)])
def test_dickson_functional_identity(p, m):
    field = make_field(p, m)
    rng = np.random.default_rng(11)
    elements = field.GF.elements[1:]
    for _ in range(30):
        y, alpha = elements[rng.integers(0, len(elements))], elements[rng.integers(0, len(elements))]
        if y**2 == alpha:
            continue
        z = alpha / y
        for n in range(0, 9):
            assert dickson_eval(n, y + z, alpha) * (y - z) == y ** (n + 1) - z ** (n + 1)


def test_char_poly_value_small_cases():
    field = make_field(5)
    spec = _spec(field, 1, 3, 2, 4)
    for lam in field.GF.elements:
        assert char_poly_value(spec, lam) == spec.a - lam
    four = _spec(field, 4, 1, 2, 3, kind="T'")
    two = four.with_order(2)
    for lam in field.GF.elements:
        assert char_poly_value(four, lam) == char_poly_value(two, lam) ** 2


@pytest.mark.parametrize("p, m", FIELDS)
def test_char_poly_value_matches_the_determinant(p, m):
    field = make_field(p, m)
    rng = np.random.default_rng(p * 10 + m)
    for n in range(1, 7):
        for kind in ("T", "T'"):
            spec = _random_spec(rng, field, n, kind=kind, nonzero=False)
            T = build_tridiagonal(spec)
            for lam in field.GF.elements:
                assert char_poly_value(spec, lam) == determinant(T - lam * identity(field, n))


def test_char_poly_value_auto_embeds():
    field = make_field(2)
    spec = _spec(field, 4, 1, 1)
    ctx = unity_context(field, 5)
    T = build_tridiagonal(spec)
    embedding = field_embedding(field, ctx.ext)
    char_poly = embedding.poly(T.characteristic_poly())
    for lam in ctx.ext.GF.elements[:16]:
        assert char_poly_value(spec, lam) == char_poly(lam)


@pytest.mark.parametrize("p, m", FIELDS)
def test_tprime_factorisation_pointwise(p, m):
    field = make_field(p, m)
    rng = np.random.default_rng(7)
    ext = make_field(p, 2 * m)
    for n in range(1, 6):
        spec = _random_spec(rng, field, n)
        lams = ext.GF.elements[rng.integers(0, ext.order, size=6)]
        for lam in lams:
            even = char_poly_value(spec.with_order(2 * n, kind="T'"), lam)
            odd = char_poly_value(spec.with_order(2 * n + 1, kind="T'"), lam)
            low, high = char_poly_value(spec, lam), char_poly_value(spec.with_order(n + 1), lam)
            assert even == low**2
            assert odd == low * high


def test_decompose_order():
    assert decompose_order(4, 2) == (2, 0)
    assert decompose_order(12, 2) == (2, 2)
    assert decompose_order(9, 3) == (2, 0)
    assert decompose_order(8, 5) == (0, 7)


def test_spectrum_examples():
    field = make_field(2)
    spectrum = eigen_spectrum(_spec(field, 3, 1, 1))
    assert (spectrum.r, spectrum.m) == (2, 0)
    assert _multiset(spectrum) == {1: 3}

    spectrum = eigen_spectrum(_spec(field, 2, 1, 1))
    assert (spectrum.r, spectrum.m) == (0, 2)
    assert spectrum.ctx.ext.order == 4
    assert _multiset(spectrum) == {0: 2}
    theta = spectrum.ctx.theta
    assert theta**3 == 1 and theta + theta**2 == 1


def test_tprime_spectrum_is_the_union_of_its_blocks():
    field = make_field(2)
    spectrum = eigen_spectrum(_spec(field, 5, 1, 1, kind="T'"))
    assert _multiset(spectrum) == {0: 2, 1: 3}
    assert [component.order for component in spectrum.components] == [2, 3]


def test_spectrum_refuses_degenerate_matrices():
    field = make_field(3)
    with pytest.raises(DegenerateSpectrumError):
        eigen_spectrum(_spec(field, 4, 1, 0, 2))


@pytest.mark.parametrize("p, m", FIELDS + [(7, 1)])
def test_spectrum_invariants(p, m):
    field = make_field(p, m)
    rng = np.random.default_rng(100 + p * m)
    for n in range(1, 9):
        for kind in ("T", "T'"):
            for _ in range(2):
                spec = _random_spec(rng, field, n, kind=kind)
                spectrum = eigen_spectrum(spec)
                assert spectrum_consistency(spectrum, spec) == []


def test_spectrum_of_hermitian_matrices_uses_the_explicit_root():
    gf9 = make_field(3, 2)
    w = gf9.generator
    spec = TridiagonalSpec(gf9, "T", 6, gf9.one, w, w**3)
    spectrum = eigen_spectrum(spec)
    assert spectrum.sqrt_bc == spectrum.ctx.embed(w**2)
    assert spectrum_consistency(spectrum, spec) == []


def test_has_eigenvalue():
    field = make_field(2)
    T = build_tridiagonal(_spec(field, 2, 1, 1))
    assert has_eigenvalue(T, field.zero)
    assert not has_eigenvalue(T, field.one)
    ext = unity_context(field, 3).ext
    assert not has_eigenvalue(T, ext.generator)


@pytest.mark.parametrize("p, m", [(2, 1), (5, 1), (3, 2)])
def test_characteristic_polynomial_of_a_single_entry(p, m):
    field = make_field(p, m)
    for value in field.GF.elements:
        A = field.GF([[int(value)]])
        char_poly = characteristic_polynomial(A)
        assert char_poly.degree == 1
        assert char_poly(value) == 0
        assert has_eigenvalue(A, value)
        assert not has_eigenvalue(A, value + field.one)
