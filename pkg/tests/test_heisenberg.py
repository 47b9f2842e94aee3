import pytest

import utils.heisenberg as heisenberg
from utils.exceptions import CertificationError
from utils.heisenberg import (IDENTITY, T, X, Y, Z, GElement, g_commutator, g_eval, g_inv, g_mul, g_pow,
                              g_is_torsion_free_sample, g_square_exponent, heisenberg_matrix)
from utils.unipotent import u_mul


def _random_element(rng, tbit=None):
    return GElement(int(rng.integers(0, 2)) if tbit is None else tbit,
                    *(int(v) for v in rng.integers(-4, 5, size=3)))


def test_defining_relations():
    assert g_mul(g_mul(T, X), g_inv(T)) == g_inv(X)
    assert g_mul(g_mul(T, Y), g_inv(T)) == g_inv(Y)
    assert g_mul(T, T) == Z
    assert g_commutator(X, Y) == Z
    for g in (T, X, Y):
        assert g_mul(Z, g) == g_mul(g, Z)


@pytest.mark.parametrize("n, m, expected", [(0, 0, 1), (3, 2, 7), (-2, 5, -9), (2, -1, -1)])
def test_square_exponent(n, m, expected):
    assert g_square_exponent(n, m) == expected
    assert g_pow(GElement(1, n, m, 0), 2) == GElement(0, 0, 0, expected)


def test_square_of_gamma_elements_is_an_odd_power_of_z():
    for p in range(-3, 4):
        for q in range(-3, 4):
            for r in range(-3, 4):
                square = g_pow(GElement(1, 2 * p, q, r), 2)
                assert square == GElement(0, 0, 0, 2 * p * q + 2 * r + 1)


def test_group_axioms(rng):
    for _ in range(10_000):
        a, b, c = (_random_element(rng) for _ in range(3))
        assert g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c))
        assert g_mul(a, g_inv(a)) == IDENTITY
        assert g_mul(g_inv(a), a) == IDENTITY


def test_word_evaluation():
    assert g_eval("t x^2") == GElement(1, 2, 0, 0)
    assert g_eval("y x") == GElement(0, 1, 1, -1)
    assert g_eval("x^-1 y^-1 x y") == Z
    with pytest.raises(ValueError):
        g_eval("w")


def test_printing():
    assert str(GElement(1, 2, -1, 3)) == "t x^2 y^-1 z^3"
    assert str(IDENTITY) == "1"


def test_subgroup_predicates():
    assert GElement(1, 2, 0, 0).in_gamma()
    assert not X.in_gamma()
    assert GElement(0, -2, 3, 1).in_h0()
    assert not T.in_h0()


def test_torsion_free_sample():
    result = g_is_torsion_free_sample(2)
    assert result["passes"]
    assert result["details"]["checked"] > 0
    with pytest.raises(ValueError):
        g_is_torsion_free_sample(0)


def test_matrix_embedding_is_a_homomorphism(rng):
    for _ in range(100):
        a, b = _random_element(rng, tbit=0), _random_element(rng, tbit=0)
        assert heisenberg_matrix(g_mul(a, b)) == u_mul(heisenberg_matrix(a), heisenberg_matrix(b))


def test_matrix_embedding_rejects_t():
    with pytest.raises(ValueError):
        heisenberg_matrix(T)


def test_square_exponent_reports_a_bad_product(monkeypatch):
    monkeypatch.setattr(heisenberg, "g_mul", lambda a, b: IDENTITY)
    with pytest.raises(CertificationError):
        g_square_exponent(3, 2)


def test_gamma_is_closed_under_products_and_inverses(rng):
    for _ in range(2000):
        a, b = _random_element(rng), _random_element(rng)
        a, b = GElement(a.tbit, 2 * a.m, a.q, a.r), GElement(b.tbit, 2 * b.m, b.q, b.r)
        assert a.in_gamma() and b.in_gamma()
        assert g_mul(a, b).in_gamma()
        assert g_inv(a).in_gamma()


def test_large_powers():
    assert g_pow(X, 10**6) == GElement(0, 10**6, 0, 0)
    assert g_pow(T, 2 * 10**6) == GElement(0, 0, 0, 10**6)
    assert g_pow(Y, -10**6) == GElement(0, 0, -10**6, 0)
    g = GElement(0, 1, 1, 0)
    assert g_pow(g, 1000) == g_mul(g_pow(g, 999), g)
