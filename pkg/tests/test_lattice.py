import pytest

from utils.exceptions import LatticeError, NonCommutingError, NotAMemberError
from utils.gamma_group import f_family_words, g_family_words, gamma_eval, gamma_mul, gamma_pow, gamma_s, gamma_x
from utils.lattice import hermite_normal_form, lattice_build, lattice_contains, lattice_coords


@pytest.fixture
def f_basis():
    return lattice_build([gamma_eval(12, w) for w in f_family_words(12)])


def test_hnf_of_a_small_matrix():
    H, U, pivots = hermite_normal_form([[2, 4], [3, 5]])
    assert pivots == [0, 1]
    assert H[0][0] > 0 and H[1][0] == 0 and H[1][1] > 0
    assert 0 <= H[0][1] < H[1][1]
    for h_row, u_row in zip(H, U):
        assert h_row == [u_row[0] * 2 + u_row[1] * 3, u_row[0] * 4 + u_row[1] * 5]


def test_families_have_rank_four(f_basis):
    g_basis = lattice_build([gamma_eval(12, w) for w in g_family_words(12)])
    assert f_basis.rank == 4 and f_basis.independent
    assert g_basis.rank == 4 and g_basis.independent


def test_membership_and_coordinates(f_basis):
    f1, f2, f3, f4 = f_basis.generators
    g = gamma_mul(gamma_pow(f1, 3), gamma_pow(f4, -2))
    assert lattice_contains(f_basis, g)
    assert lattice_coords(f_basis, g) == (3, 0, 0, -2)
    assert str(f_basis.coords(g)) == "F1^3 F4^-2"
    assert f_basis.evaluate(f_basis.coords(g)) == g


def test_non_members(f_basis):
    assert not f_basis.contains(gamma_s(12))
    assert not f_basis.contains(gamma_x(12))
    with pytest.raises(NotAMemberError):
        lattice_coords(f_basis, gamma_x(12))


def test_dependent_generators():
    x = gamma_x(12)
    basis = lattice_build([x, gamma_pow(x, 2)])
    assert basis.rank == 1
    assert not basis.independent
    assert basis.contains(gamma_pow(x, 5))


def test_index_two_sublattice():
    x = gamma_x(12)
    basis = lattice_build([gamma_pow(x, 2)])
    assert basis.contains(gamma_pow(x, 4))
    assert not basis.contains(gamma_pow(x, 3))


def test_commutation_is_checked_first():
    with pytest.raises(NonCommutingError) as info:
        lattice_build([gamma_x(12), gamma_s(12)])
    assert info.value.pair == (0, 1)


def test_shift_must_be_a_multiple_of_n():
    with pytest.raises(LatticeError):
        lattice_build([gamma_s(12)])


def test_invalid_inputs():
    with pytest.raises(LatticeError):
        lattice_build([])
    with pytest.raises(LatticeError):
        lattice_build([gamma_x(12), gamma_x(13)])


def test_repeated_power_of_s_has_rank_one():
    s12 = gamma_pow(gamma_s(12), 12)
    basis = lattice_build([s12, s12])
    assert basis.rank == 1
    assert not basis.independent
    assert basis.contains(gamma_pow(gamma_s(12), 36))
    assert basis.evaluate(basis.coords(gamma_pow(s12, -2))) == gamma_pow(s12, -2)
