import itertools

import numpy as np
import pytest

from toeplitz_hulls.cli import parse_construction
from toeplitz_hulls.codes import (
    analyze_code,
    dual,
    from_generator,
    gram_matrix,
    griesmer_defect,
    hull_dimension,
    is_formally_self_dual,
    is_lcd,
    krawtchouk,
    macwilliams_dual_distribution,
    min_distance,
    weight_distribution,
)
from toeplitz_hulls.codes import weights
from toeplitz_hulls.constructions import construction_for
from toeplitz_hulls.errors import EnumerationBudgetExceeded, QuadraticStructureError
from toeplitz_hulls.fields import make_field
from toeplitz_hulls.linalg import identity, rank

TABLE_ONE_ROW = "q=2 kind=T n=12 a=1 b=1 inner=E f=x^9+x^8+x^4+x^3+x^2"
EXAMPLE_POWER_BINARY = "q=2 kind=T n=6 a=1 b=1 inner=E k=3"
EXAMPLE_POWER_QUINARY = "q=5 kind=T n=4 a=1 b=1 inner=E k=2"
EXAMPLE_HERMITIAN = "q=4 kind=T n=6 a=1 b=w^2 c=w inner=H f=w*x^3+x"


def _code(line):
    return construction_for(parse_construction(line)).code()


def _random_code(rng, field, inner="E", max_n=14, max_k=7):
    N = int(rng.integers(2, max_n + 1))
    K = int(rng.integers(1, min(max_k, N) + 1))
    while True:
        G = field.GF(rng.integers(0, field.order, size=(K, N)))
        if np.any(G.view(np.ndarray)):
            return from_generator(field, G, inner)


def _enumerate_distribution(code):
    """Weight distribution by listing every codeword, one message at a time."""
    GF = code.field.GF
    counts = [0] * (code.N + 1)
    for message in itertools.product(range(code.field.order), repeat=code.K):
        word = GF(list(message)) @ code.G if code.K else GF.Zeros(code.N)
        counts[int(np.count_nonzero(word.view(np.ndarray)))] += 1
    return counts


def test_from_generator_examples():
    gf2 = make_field(2)
    code = from_generator(gf2, identity(gf2, 5))
    assert (code.N, code.K) == (5, 5)
    repetition = from_generator(gf2, gf2.GF([[1, 1]]))
    assert (repetition.N, repetition.K) == (2, 1)
    code = _code(EXAMPLE_HERMITIAN)
    assert (code.N, code.K) == (12, 6)


def test_from_generator_reduces_dependent_rows():
    gf3 = make_field(3)
    G = gf3.GF([[1, 2, 0, 1], [2, 1, 0, 2], [0, 0, 1, 1]])
    code = from_generator(gf3, G)
    assert code.K == 2
    assert rank(code.G) == 2


def test_from_generator_rejects_bad_input():
    gf2 = make_field(2)
    with pytest.raises(ValueError):
        from_generator(gf2, gf2.GF.Zeros((2, 3)))
    with pytest.raises(QuadraticStructureError):
        from_generator(gf2, gf2.GF([[1, 1]]), inner="H")
    with pytest.raises(ValueError):
        from_generator(gf2, gf2.GF([[1, 1]]), inner="X")


def test_dual_examples():
    gf2, gf4 = make_field(2), make_field(2, 2)
    repetition = from_generator(gf2, gf2.GF([[1, 1]]))
    assert np.array_equal(dual(repetition).G, repetition.G)

    full = from_generator(gf2, identity(gf2, 4))
    assert dual(full).K == 0
    assert dual(dual(full)).K == 4

    w = gf4.generator
    hermitian = from_generator(gf4, gf4.GF([[1, int(w)]]), inner="H")
    assert np.array_equal(dual(hermitian).G, hermitian.G)


def test_gram_matrix_examples():
    gf2, gf4 = make_field(2), make_field(2, 2)
    repetition = from_generator(gf2, gf2.GF([[1, 1]]))
    assert np.array_equal(gram_matrix(repetition), gf2.GF([[0]]))

    gf5 = make_field(5)
    rng = np.random.default_rng(2)
    P = gf5.GF(rng.integers(0, 5, size=(3, 4)))
    code = from_generator(gf5, np.hstack([identity(gf5, 3), P]).view(gf5.GF))
    assert np.array_equal(gram_matrix(code), identity(gf5, 3) + P @ P.T)

    w = gf4.generator
    hermitian = from_generator(gf4, gf4.GF([[1, int(w)]]), inner="H")
    assert np.array_equal(gram_matrix(hermitian), gf4.GF([[0]]))


def test_hermitian_gram_matrix_is_hermitian():
    gf9 = make_field(3, 2)
    rng = np.random.default_rng(4)
    for _ in range(10):
        code = _random_code(rng, gf9, inner="H", max_n=6, max_k=4)
        gram = gram_matrix(code)
        assert np.array_equal(gram.T ** 3, gram)


def test_hull_examples():
    gf2 = make_field(2)
    repetition = from_generator(gf2, gf2.GF([[1, 1]]))
    assert hull_dimension(repetition) == 1
    assert hull_dimension(repetition, method="intersection") == 1
    assert not is_lcd(repetition)
    assert hull_dimension(_code("q=5 kind=T n=7 a=1 b=1 inner=E f=x^4+2*x^3+3*x^2+x")) == 1
    assert hull_dimension(_code("q=4 kind=T n=5 a=1 b=w c=w^2 inner=H f=w*x^5+w*x^2+x")) == 1
    with pytest.raises(ValueError):
        hull_dimension(repetition, method="guess")


def test_lcd_examples():
    assert is_lcd(_code(EXAMPLE_POWER_BINARY))
    assert is_lcd(_code(EXAMPLE_HERMITIAN))


@pytest.mark.parametrize("p, m", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_hull_methods_agree_on_random_codes(p, m):
    field = make_field(p, m)
    rng = np.random.default_rng(10 * p + m)
    inners = ("E", "H") if field.quadratic_base else ("E",)
    for index in range(50):
        code = _random_code(rng, field, inner=inners[index % len(inners)])
        hull = hull_dimension(code)
        assert hull == hull_dimension(code, method="intersection")
        assert hull == hull_dimension(dual(code))
        assert is_lcd(code) == (hull == 0)
        assert np.array_equal(dual(dual(code)).G, code.G)


def test_dual_rows_are_orthogonal():
    field = make_field(2, 2)
    rng = np.random.default_rng(8)
    for inner in ("E", "H"):
        code = _random_code(rng, field, inner=inner, max_n=8, max_k=4)
        other = dual(code)
        assert other.K == code.N - code.K
        partner = other.G if inner == "E" else other.G**2
        assert not np.any((code.G @ partner.T).view(np.ndarray))


def test_min_distance_examples():
    assert min_distance(_code(TABLE_ONE_ROW)) == 6
    gf3 = make_field(3)
    assert min_distance(from_generator(gf3, identity(gf3, 4))) == 1
    assert min_distance(_code(EXAMPLE_POWER_QUINARY)) == 4


def test_weight_distribution_examples():
    gf2, gf3 = make_field(2), make_field(3)
    assert weight_distribution(from_generator(gf2, gf2.GF([[1, 1]]))) == [1, 0, 1]
    assert weight_distribution(from_generator(gf3, gf3.GF([[1, 1, 1]]))) == [1, 0, 0, 2]
    distribution = weight_distribution(_code(EXAMPLE_POWER_BINARY))
    assert distribution[0] == 1
    assert sum(distribution) == 64
    assert min(i for i, count in enumerate(distribution) if i and count) == 4


@pytest.mark.parametrize("p, m", [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1), (2, 3)])
def test_weight_distribution_matches_direct_listing(p, m):
    field = make_field(p, m)
    rng = np.random.default_rng(p + m)
    for _ in range(4):
        code = _random_code(rng, field, max_n=7, max_k=3)
        assert weight_distribution(code) == _enumerate_distribution(code)


def test_weight_distribution_is_schedule_independent():
    code = _code(TABLE_ONE_ROW)
    assert weight_distribution(code, workers=1) == weight_distribution(code, workers=4)


def test_packed_and_generic_backends_agree(monkeypatch):
    code = _code(EXAMPLE_HERMITIAN)
    packed = weight_distribution(code)
    monkeypatch.setattr(weights, "select_backend", lambda field, N: weights.FieldBackend(field, N))
    assert weight_distribution(code) == packed


def test_enumeration_budget():
    code = _code(TABLE_ONE_ROW)
    with pytest.raises(EnumerationBudgetExceeded) as excinfo:
        weight_distribution(code, budget=1000)
    assert excinfo.value.required == 2**12
    report = analyze_code(code, "table row", budget=1000)
    assert report.D is None
    assert report.is_fsd is None
    assert report.skipped_reason
    assert report.summary_line() == "[24,12,?]_2 inner=E hull=0 lcd=y fsd=? griesmer_defect=?"


def test_min_distance_of_zero_code():
    gf2 = make_field(2)
    with pytest.raises(ValueError):
        min_distance(dual(from_generator(gf2, identity(gf2, 3))))


def test_krawtchouk_values():
    assert krawtchouk(0, 3, 5, 2) == 1
    assert krawtchouk(1, 0, 5, 3) == 10
    assert krawtchouk(1, 1, 4, 2) == 2


def test_macwilliams_examples():
    assert macwilliams_dual_distribution([1, 0, 1], 2, 1, 2) == [1, 0, 1]
    full = [1, 8, 24, 32, 16]
    assert macwilliams_dual_distribution(full, 4, 4, 3) == [1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        macwilliams_dual_distribution([1, 1, 1], 2, 1, 2)
    with pytest.raises(ValueError):
        macwilliams_dual_distribution([1, 1], 2, 1, 2)


@pytest.mark.parametrize("p, m", [(2, 1), (3, 1), (2, 2)])
def test_macwilliams_matches_dual_enumeration(p, m):
    field = make_field(p, m)
    rng = np.random.default_rng(20 + p)
    for _ in range(12):
        code = _random_code(rng, field, max_n=6, max_k=3)
        distribution = weight_distribution(code)
        transformed = macwilliams_dual_distribution(distribution, code.N, code.K, field.order)
        other = dual(code)
        assert transformed == (weight_distribution(other) if other.K else [1] + [0] * code.N)


def test_random_binary_code_macwilliams():
    gf2 = make_field(2)
    code = from_generator(gf2, gf2.GF([[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]]))
    transformed = macwilliams_dual_distribution(weight_distribution(code), 6, 3, 2)
    assert transformed == weight_distribution(dual(code))


def test_formal_self_duality_examples():
    gf2 = make_field(2)
    assert is_formally_self_dual(from_generator(gf2, gf2.GF([[1, 1]])))
    assert not is_formally_self_dual(from_generator(gf2, gf2.GF([[1, 1, 0]])))
    assert is_formally_self_dual(_code(TABLE_ONE_ROW))


@pytest.mark.parametrize(
    "N, K, D, q, defect",
    [(24, 12, 6, 2, 4), (2, 1, 2, 2, 0), (8, 4, 4, 5, 1), (12, 6, 4, 2, 2)],
)
def test_griesmer_defect(N, K, D, q, defect):
    assert griesmer_defect(N, K, D, q) == defect


def test_code_report_summary_and_outputs():
    gf2 = make_field(2)
    report = analyze_code(from_generator(gf2, gf2.GF([[1, 1]])), "repetition")
    assert report.summary_line() == "[2,1,2]_2 inner=E hull=1 lcd=n fsd=y griesmer_defect=0"
    assert report.distribution_csv() == "0,1\n1,0\n2,1"
    payload = report.to_dict()
    assert payload["weight_distribution"] == [1, 0, 1]
    assert payload["construction"] == "repetition"


def test_code_report_invariants_on_constructions():
    for line in (TABLE_ONE_ROW, EXAMPLE_POWER_BINARY, EXAMPLE_POWER_QUINARY, EXAMPLE_HERMITIAN):
        report = analyze_code(_code(line), line)
        distribution = report.weight_distribution
        assert distribution[0] == 1
        assert sum(distribution) == report.q**report.K
        assert report.is_lcd == (report.hull_dim == 0)
        assert report.griesmer_defect >= 0
