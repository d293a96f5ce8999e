import itertools
import warnings

import pytest

from affine_cells.cells import (
    PathStartError,
    cell_of,
    construct_p0,
    enumerate_paths,
    fullalgebra_D,
    gamma_coeff,
    in_gamma_cap,
    inverse_path,
    path_coefficient,
    pi_by_paths,
    pi_entry_by_paths,
    representation,
    validate_path,
)
from affine_cells import reference_data as ref
from affine_cells.hecke import HeckeElem, T_s, star
from affine_cells.lambda_geometry import dominant_reps, lambda_data, m_gamma, min_coset_reps
from affine_cells.rings import GroupRingElem, LaurentQPoly, Q_MINUS_Q_INV, RingMatrix
from affine_cells.weyl import (
    elements_by_length,
    extended_elements_up_to,
    finite,
    from_word,
    identity,
    inverse,
    partitions_of,
    reduced_word,
    sigma_exponent,
)


def scalar(lam, coeffs):
    return GroupRingElem.scalar(lam, LaurentQPoly(coeffs))


def test_empty_word_gives_trivial_path():
    paths = enumerate_paths((2, 1), [], identity(2))
    assert len(paths) == 1
    assert paths[0].coefficient() == LaurentQPoly.const(1)
    assert inverse_path(paths[0]).vertices == paths[0].vertices


def test_all_rows_of_length_one_never_bounce():
    lam = (1, 1, 1)
    for word in itertools.product(range(3), repeat=4):
        for path in enumerate_paths(lam, word, identity(2)):
            assert path.bounces == 0
            assert validate_path(path)


def test_path_coefficients():
    assert path_coefficient(0, 0) == LaurentQPoly.const(1)
    assert path_coefficient(1, 0) == Q_MINUS_Q_INV
    assert path_coefficient(8, 1) == Q_MINUS_Q_INV ** 8 * LaurentQPoly.monomial(-1, -1)


WORKED_WORD = [4, 3, 4, 2, 3, 4, 1, 2, 3]
WORKED_LAM = (2, 1, 1, 1)


def test_worked_path_count_and_entries():
    e = (1, 2, 3, 4, 5)
    paths = enumerate_paths(WORKED_LAM, WORKED_WORD, identity(4), final_direction=e)
    assert len(paths) == 14
    assert all(validate_path(p) for p in paths)
    diagonal = pi_entry_by_paths(WORKED_LAM, WORKED_WORD, e, e)
    assert diagonal == scalar(WORKED_LAM, {1: -1, -1: 2, -5: -3, -7: 3, -9: -1})
    s234 = (1, 3, 4, 5, 2)
    off = pi_entry_by_paths(WORKED_LAM, WORKED_WORD, e, s234)
    assert off == scalar(WORKED_LAM, {6: 1, 4: -3, 2: 4, 0: -4, -2: 4, -4: -3, -6: 1})


def test_path_start_outside_lambda_alcove():
    with pytest.raises(PathStartError):
        enumerate_paths((2, 1), [0], from_word(2, [1]))


@pytest.mark.parametrize("lam", [(2, 1), (1, 1, 1), (3,), (2, 2), (3, 1), (2, 1, 1)])
def test_generator_product_agrees_with_paths(lam):
    rep = representation(lam)
    n = rep.n
    top = 5 if n <= 2 else 3
    for w in extended_elements_up_to(n, top):
        letters, pi = reduced_word(w)
        assert rep.pi_T(w) == pi_by_paths(lam, letters, sigma_exponent(pi))


@pytest.mark.parametrize("lam", [(2, 1), (2, 2)])
def test_representation_respects_hecke_relations(lam):
    rep = representation(lam)
    n = rep.n
    identity_matrix = RingMatrix.identity(lam, rep.size)
    assert rep.pi_T(identity(n)) == identity_matrix
    for i in range(n + 1):
        t = rep.pi_T(from_word(n, [i]))
        assert t @ t == identity_matrix + t.scale(Q_MINUS_Q_INV)
    for word in itertools.product(range(n + 1), repeat=3):
        h = HeckeElem.one(n)
        for i in word:
            h = h * T_s(n, i)
        assert rep.pi_of_hecke(h) == rep.pi_word(word)


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1)])
def test_star_gives_conjugate_transpose(lam):
    rep = representation(lam)
    for w in extended_elements_up_to(rep.n, 3):
        h = HeckeElem.T(w) + HeckeElem.T(identity(rep.n)).scale(Q_MINUS_Q_INV)
        assert rep.pi_of_hecke(star(h)) == rep.pi_of_hecke(h).conj_transpose()
        assert rep.leading_matrix(inverse(w)) == rep.leading_matrix(w).conj_transpose()


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1), (2, 1, 1), (1, 1, 1, 1)])
def test_inverse_paths_form_an_involution(lam):
    n = sum(lam) - 1
    for word in itertools.product(range(n + 1), repeat=3):
        for u in min_coset_reps(lam):
            for path in enumerate_paths(lam, word, finite(u), 1):
                back = inverse_path(path)
                assert validate_path(back)
                assert back.coefficient() == path.coefficient()
                assert back.start.lin == path.final_direction
                assert back.final_direction == path.start.lin
                assert inverse_path(back) == path


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_longest_element_has_unit_leading_matrix(n):
    for lam in partitions_of(n + 1):
        data = lambda_data(lam)
        w = finite(data.w_dual)
        leading = representation(lam).leading_matrix(w)
        assert leading.support() == [(0, 0)]
        assert leading.entry(0, 0) == GroupRingElem.one(lam)
        assert cell_of(w) == lam
        assert in_gamma_cap(w, lam)


def test_cell_of_identity_and_uniqueness_scan():
    assert cell_of(identity(2)) == (3,)
    for layer in elements_by_length(2, 5):
        for w in layer:
            assert cell_of(w) in partitions_of(3)


def test_gamma_cap_membership():
    lam = (2, 1)
    assert not in_gamma_cap(identity(2), lam)
    for a in dominant_reps(lam, 3):
        assert in_gamma_cap(m_gamma(lam, a), lam)


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1)])
def test_p0_witness_paths(lam):
    data = lambda_data(lam)
    zero = construct_p0(lam, (0,) * len(lam))
    assert set(zero.steps) <= {"f"} or zero.folds == len(zero.word)
    for a in dominant_reps(lam, 2):
        path = construct_p0(lam, a)
        assert validate_path(path)
        assert path.folds == data.a_lam
        assert path.coefficient().deg() == data.a_lam
        assert path.final_direction == data.u_lam
    with pytest.raises(ValueError):
        construct_p0((2, 2), (0, 1))


def test_gamma_coefficients():
    w = finite(lambda_data((2, 1)).w_dual)
    assert gamma_coeff(w, w, w) == 1
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert gamma_coeff(w, w, identity(2)) == 0
    assert caught


def test_conjugating_diagonal_for_two_two():
    elements = {}
    for (i, j), word in ref.RANK3_MATRIX_UNIT_WORDS.items():
        w = ref.element(3, word)
        elements[(i - 1, j - 1)] = w
        elements[(j - 1, i - 1)] = inverse(w)
    for k, word in enumerate(ref.RANK3_INVOLUTIONS):
        elements[(k, k)] = ref.element(3, word)
    report = fullalgebra_D((2, 2), elements)
    assert report.holds
    assert [w[0] for w in report.weights] == ref.RANK3_D_EXPONENTS
    assert all(w[1] == 0 for w in report.weights)
    assert report.signs == [1] * 6
