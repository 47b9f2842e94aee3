import pytest

from utils.exceptions import ExtensionMismatchError
from utils.gamma_group import f_family_words, g_family_words, gamma_eval, gamma_x
from utils.hnn import HnnWord, britton_reduce, cyclic_extension, free_extension, gamma_extension, hnn_inv, hnn_mul
from utils.words import random_word


@pytest.fixture
def bs12():
    return cyclic_extension(1, 2)


def _random_hnn_word(extension, rng, t_length=3):
    alphabet = extension.base.alphabet
    bases = [random_word(alphabet, rng, max_syllables=3, max_exponent=3) for _ in range(t_length + 1)]
    signs = [1 if rng.integers(0, 2) else -1 for _ in range(t_length)]
    return extension.word(bases, signs)


def test_baumslag_solitar_relation(bs12):
    assert bs12.format(bs12.parse("t a t^-1")) == "a^2"
    assert bs12.is_identity(bs12.parse("t a t^-1 a^-2"))


def test_pinch_through_the_inverse_isomorphism(bs12):
    assert bs12.format(bs12.parse("t^-1 a^2 t")) == "a"


def test_non_pinches_stay(bs12):
    w = bs12.parse("t^-1 a t")
    assert w.t_length == 2
    assert bs12.format(w) == "t^-1 a t"
    assert not bs12.is_identity(w)


def test_stable_letter_formatting(bs12):
    assert str(bs12.stable_letter()) == "t"
    assert str(bs12.stable_letter(-1)) == "t^-1"
    assert str(bs12.identity()) == "1"


def test_free_extension_pinch(free_hnn, free_words):
    u, v = free_words
    unit = free_hnn.base.identity()
    for u_j, v_j in zip(u, v):
        reduced = britton_reduce(free_hnn.word((unit, u_j, unit), (1, -1)))
        assert reduced.signs == ()
        assert reduced.bases == (v_j,)
        assert free_hnn.phi_inverse(v_j) == u_j


def test_free_extension_mul_and_inv(free_hnn, rng):
    for _ in range(25):
        w = _random_hnn_word(free_hnn, rng)
        assert free_hnn.is_identity(hnn_mul(w, hnn_inv(w)))
        assert free_hnn.is_identity(hnn_mul(hnn_inv(w), w))


def test_free_extension_associativity(free_hnn, rng):
    for _ in range(15):
        a, b, c = (_random_hnn_word(free_hnn, rng, t_length=2) for _ in range(3))
        left = hnn_mul(hnn_mul(a, b), c)
        right = hnn_mul(a, hnn_mul(b, c))
        assert free_hnn.is_identity(hnn_mul(left, hnn_inv(right)))


def test_gamma_extension_pairs_generators():
    f = [gamma_eval(12, w) for w in f_family_words(12)]
    g = [gamma_eval(12, w) for w in g_family_words(12)]
    extension = gamma_extension(12, f, g)
    unit = extension.base.identity()
    for f_j, g_j in zip(f, g):
        reduced = britton_reduce(extension.word((unit, f_j, unit), (1, -1)))
        assert reduced.bases == (g_j,)
    # x is not in the lattice spanned by the f family
    blocked = britton_reduce(extension.word((unit, gamma_x(12), unit), (1, -1)))
    assert blocked.t_length == 2


def test_stable_letter_must_be_new():
    with pytest.raises(ExtensionMismatchError):
        cyclic_extension(1, 2, letter="t", stable="t")


def test_rank_deficient_subgroups_are_rejected(ab):
    with pytest.raises(ExtensionMismatchError):
        free_extension(ab, [ab.parse("a"), ab.parse("a^2")], [ab.parse("a"), ab.parse("b")])


def test_generator_counts_must_match(ab):
    with pytest.raises(ExtensionMismatchError):
        free_extension(ab, [ab.parse("a")], [ab.parse("a"), ab.parse("b")])


def test_words_of_different_extensions_do_not_mix(bs12):
    other = cyclic_extension(2, 3)
    with pytest.raises(ExtensionMismatchError):
        hnn_mul(bs12.stable_letter(), other.stable_letter())


def test_malformed_hnn_words():
    with pytest.raises(ValueError):
        HnnWord((0,), (1,))
    with pytest.raises(ValueError):
        HnnWord((0, 0), (2,))
