import random
from fractions import Fraction

import pytest

from qlincat.graded import (
    DegreeMismatch,
    GradedSpace,
    even_space,
    koszul_gram,
    koszul_pairing,
    koszul_sign,
    pi_image,
    pi_matrix,
    reversed_parity_space,
    space_of,
    tensor_power_basis,
)
from qlincat.linalg import Matrix, rank
from qlincat.spaces import make_sudbery

from support import rand_nonzero


def test_word_parity():
    sp = space_of((0, 1, 1))
    assert sp.word_parity((0, 0)) == 0
    assert sp.word_parity((1, 2)) == 0
    assert sp.word_parity((0, 1)) == 1


def test_graded_space_validation():
    with pytest.raises(ValueError):
        GradedSpace(2, (0,))
    with pytest.raises(ValueError):
        GradedSpace(1, (2,))


def test_tensor_power_basis_small():
    sp = even_space(2)
    assert tensor_power_basis(sp, 2) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(tensor_power_basis(sp, 3)) == 8
    assert tensor_power_basis(even_space(3), 0) == [()]


def test_tensor_power_basis_stable():
    sp = space_of((0, 1))
    assert tensor_power_basis(sp, 2) == tensor_power_basis(sp, 2)


def test_koszul_pairing_even():
    sp = even_space(2)
    assert koszul_pairing(sp, (0, 1), (0, 1)) == 1


def test_koszul_pairing_odd_sign():
    sp = space_of((0, 1))
    # both letters odd: sign (-1)**(1*1)
    assert koszul_pairing(sp, (1, 1), (1, 1)) == -1


def test_koszul_pairing_mismatch():
    sp = even_space(2)
    assert koszul_pairing(sp, (0, 1), (1, 0)) == 0


def test_koszul_pairing_degree_error():
    sp = even_space(2)
    with pytest.raises(DegreeMismatch):
        koszul_pairing(sp, (0, 1, 1), (0, 1))


def test_gram_is_signed_permutation():
    sp = space_of((0, 1, 1))
    g = koszul_gram(sp)
    for i in range(9):
        for j in range(9):
            if i == j:
                assert g.data[i][j] in (1, -1)
            else:
                assert g.data[i][j] == 0
    assert rank(g) == 9


def test_pi_even_is_identity():
    sp = even_space(2)
    assert pi_matrix(sp) == Matrix.identity(4)


def test_pi_sign_on_odd_first_factor():
    sp = space_of((1, 0))
    vec = [Fraction(0)] * 4
    vec[0 * 2 + 1] = Fraction(1)  # e^1 (x) e^2, first factor odd
    image = pi_image(sp, vec)
    assert image[1] == -1 and sum(1 for x in image if x) == 1


def test_pi_roundtrip():
    rng = random.Random(2)
    sp = space_of((1, 0, 1))
    vec = tuple(rand_nonzero(rng) for _ in range(9))
    assert pi_image(sp, pi_image(sp, vec)) == vec


def test_pi_preserves_decomposition_dims():
    obj = make_sudbery(
        space_of((0, 1)),
        [[1, 2], [Fraction(1, 2), -1]],
        [[1, 3], [Fraction(1, 3), -1]],
    )
    for comp in obj.components:
        mapped = [pi_image(obj.space, v) for v in comp]
        assert rank(Matrix(mapped)) == rank(Matrix(comp))


def test_reversed_parity_space():
    sp = space_of((0, 1))
    assert reversed_parity_space(sp).parities == (1, 0)


def test_koszul_sign_table():
    assert koszul_sign(0, 0) == koszul_sign(0, 1) == koszul_sign(1, 0) == 1
    assert koszul_sign(1, 1) == -1
