"""Vector and matrix compositions, inclusion degree, value-set closure."""

import random
from fractions import Fraction as F

import pytest

from fuzzdet import (
    BOOLEAN,
    GODEL,
    GOGUEN,
    DimensionMismatch,
    FuzzyMatrix,
    FuzzyVector,
    LatticeMismatch,
    ValueSet,
    chain,
    dot,
    identity_matrix,
    inclusion_degree,
    mat_compose,
    mat_vec,
    semiring_closure,
    vec_mat,
)
from support import random_matrix, random_vector

# the three-state product-structure fixture, built directly
DELTA_X = FuzzyMatrix.from_rows(GOGUEN, [
    ["0", "0.5", "1"], ["0", "1", "0"], ["0", "1", "0.5"]])
DELTA_Y = FuzzyMatrix.from_rows(GOGUEN, [
    ["0", "1", "0.3"], ["0", "1", "0"], ["0", "0.3", "1"]])
SIGMA = FuzzyVector.from_values(GOGUEN, ["1", "0", "0"])
TAU = FuzzyVector.from_values(GOGUEN, ["0", "1", "0"])


def test_identity_neutral():
    rng = random.Random(3)
    for _ in range(20):
        m = random_matrix(rng, GOGUEN, 3)
        i = identity_matrix(GOGUEN, 3)
        assert mat_compose(m, i) == m
        assert mat_compose(i, m) == m


def test_compose_against_plain_arithmetic():
    # independent oracle: plain max of Fraction products, no shortcuts
    product = mat_compose(DELTA_X, DELTA_X)
    for i in range(3):
        for j in range(3):
            expected = max(DELTA_X.entries[i][k] * DELTA_X.entries[k][j]
                           for k in range(3))
            assert product.entries[i][j] == expected
    assert product.row(0) == (F(0), F(1), F(1, 2))


def test_boolean_compose_is_relational_composition():
    rels = [
        {(0, 1), (1, 2)},
        {(0, 0), (1, 1), (2, 2)},
        {(2, 0), (0, 2), (1, 1)},
        {(0, 1), (1, 0), (2, 1), (2, 2)},
    ]

    def matrix(rel):
        return FuzzyMatrix(BOOLEAN, tuple(
            tuple(F(1) if (i, j) in rel else F(0) for j in range(3))
            for i in range(3)))

    for r in rels:
        for s in rels:
            composed = {(i, j) for i, k1 in r for k2, j in s if k1 == k2}
            assert mat_compose(matrix(r), matrix(s)) == matrix(composed)


def test_vec_mat_and_mat_vec_fixture_values():
    assert vec_mat(SIGMA, DELTA_X).entries == (F(0), F(1, 2), F(1))
    assert mat_vec(DELTA_X, TAU).entries == (F(1, 2), F(1), F(1))
    assert mat_vec(DELTA_Y, TAU).entries == (F(1), F(1), F(3, 10))


def test_dot_examples():
    tau_x = mat_vec(DELTA_X, TAU)
    assert dot(SIGMA, tau_x) == F(1, 2)
    assert dot(SIGMA, TAU) == F(0)
    zeros = FuzzyVector(GOGUEN, (F(0), F(0), F(0)))
    assert dot(tau_x, zeros) == F(0)


def test_dot_symmetric():
    rng = random.Random(5)
    for _ in range(100):
        f = random_vector(rng, GOGUEN, 4)
        g = random_vector(rng, GOGUEN, 4)
        assert dot(f, g) == dot(g, f)


def test_compose_associative():
    rng = random.Random(9)
    for lat in (GOGUEN, GODEL, chain(4)):
        for _ in range(30):
            a = random_matrix(rng, lat, 3)
            b = random_matrix(rng, lat, 3)
            c = random_matrix(rng, lat, 3)
            assert mat_compose(mat_compose(a, b), c) == mat_compose(a, mat_compose(b, c))
            f = random_vector(rng, lat, 3)
            assert vec_mat(vec_mat(f, a), b) == vec_mat(f, mat_compose(a, b))
            g = random_vector(rng, lat, 3)
            assert mat_vec(a, mat_vec(b, g)) == mat_vec(mat_compose(a, b), g)


def test_inclusion_degree_examples():
    f = FuzzyVector.from_values(GOGUEN, ["0.5", "1"])
    g = FuzzyVector.from_values(GOGUEN, ["0.3", "1"])
    assert inclusion_degree(f, g) == F(3, 5)
    assert inclusion_degree(g, f) == F(1)


def test_inclusion_degree_top_iff_pointwise_leq():
    rng = random.Random(15)
    for lat in (GOGUEN, GODEL, chain(4)):
        for _ in range(200):
            f = random_vector(rng, lat, 3)
            g = random_vector(rng, lat, 3)
            contained = all(a <= b for a, b in zip(f, g))
            assert (inclusion_degree(f, g) == lat.top) == contained


def test_inclusion_degree_of_fixture_root():
    # meet over the four right-language vectors of the fixture,
    # first component: the value the canonization starts from
    tau_x = mat_vec(DELTA_X, TAU)
    tau_y = mat_vec(DELTA_Y, TAU)
    tau_xx = mat_vec(DELTA_X, tau_x)
    states = [TAU, tau_x, tau_y, tau_xx]
    lat = GOGUEN
    component = lat.top
    for mu in states:
        component = lat.meet(component, lat.resid(mu[0], dot(SIGMA, mu)))
    assert component == F(1)


def test_dimension_errors():
    short = FuzzyVector.from_values(GOGUEN, ["1", "0"])
    with pytest.raises(DimensionMismatch):
        vec_mat(short, DELTA_X)
    with pytest.raises(DimensionMismatch):
        mat_vec(DELTA_X, short)
    with pytest.raises(DimensionMismatch):
        dot(short, TAU)
    with pytest.raises(DimensionMismatch):
        inclusion_degree(short, TAU)
    two = FuzzyMatrix.from_rows(GOGUEN, [["0", "1"], ["1", "0"]])
    with pytest.raises(DimensionMismatch):
        mat_compose(DELTA_X, two)
    with pytest.raises(DimensionMismatch):
        FuzzyMatrix.from_rows(GOGUEN, [["0", "1"], ["1"]])
    with pytest.raises(DimensionMismatch):
        FuzzyVector.from_values(GOGUEN, [])


def test_lattice_mismatch_errors():
    godel_vec = FuzzyVector.from_values(GODEL, ["1", "0", "0"])
    with pytest.raises(LatticeMismatch):
        vec_mat(godel_vec, DELTA_X)
    with pytest.raises(LatticeMismatch):
        dot(godel_vec, TAU)


def test_closure_boolean_and_chain_close():
    result = semiring_closure(BOOLEAN, [F(0), F(1)], 10)
    assert result.closed and result.k == 2
    result = semiring_closure(chain(4), [0, 2, 4], 100)
    assert result.closed
    assert set(result.values) <= set(range(5))
    result = semiring_closure(GODEL, [F(1, 3), F(1, 2)], 100)
    assert result.closed and result.k == 4  # godel adds nothing new


def test_closure_caps_on_product_fixture_values():
    seed = ValueSet.of(GOGUEN, ["0", "0.3", "0.5", "1"])
    result = semiring_closure(GOGUEN, seed, 1000)
    assert not result.closed
    assert result.values is None
    assert result.reached > 1000
    assert result.k is None


def test_closure_monotone_and_idempotent():
    small = semiring_closure(chain(6), [1, 2], 1000)
    large = semiring_closure(chain(6), [1, 2, 5], 1000)
    assert small.closed and large.closed
    assert set(small.values) <= set(large.values)
    again = semiring_closure(chain(6), small.values, 1000)
    assert again.closed
    assert set(again.values) == set(small.values)


def test_closure_contains_seed_and_constants():
    result = semiring_closure(GODEL, [F(1, 4)], 10)
    assert result.closed
    assert F(0) in result.values and F(1) in result.values and F(1, 4) in result.values
