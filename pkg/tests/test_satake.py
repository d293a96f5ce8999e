import itertools

import pytest

from affine_cells.hecke import HeckeElem, T_s, kl_basis, poincare_q_squared
from affine_cells.lambda_geometry import dominant_reps, g_lambda, lambda_data, m_gamma
from affine_cells.rings import GroupRingElem, LaurentQPoly
from affine_cells.satake import (
    f_lambda,
    psi_T,
    psi_X,
    psi_lambda,
    sandwich,
    sandwich_form,
    sandwich_matrix,
    verify_bar_compatibility,
    verify_satake1,
)
from affine_cells.symfunc import schur
from affine_cells.weyl import extended_elements_up_to

LAMBDAS = [(3,), (2, 1), (1, 1, 1), (2, 2), (3, 1)]


def simple_root(rank, j):
    weight = [0] * rank
    weight[j - 1], weight[j] = 1, -1
    return weight


def test_psi_on_generators():
    lam = (2, 1)
    assert psi_T(lam, 1) == GroupRingElem.scalar(lam, LaurentQPoly.monomial(-1, -1))
    assert psi_lambda(lam, 1) == psi_T(lam, 1)
    with pytest.raises(ValueError):
        psi_T(lam, 2)
    q_minus_two = GroupRingElem.scalar(lam, LaurentQPoly.monomial(-2))
    assert psi_X(lam, simple_root(3, 1)) == q_minus_two


def test_psi_is_a_character_on_the_lattice():
    lam = (2, 2)
    weights = [w for w in itertools.product(range(-1, 2), repeat=4)][:20]
    for a, b in itertools.product(weights, repeat=2):
        total = [x + y for x, y in zip(a, b)]
        assert psi_X(lam, total) == psi_X(lam, a) * psi_X(lam, b)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_sandwich_closed_form_and_trace(lam):
    data = lambda_data(lam)
    form = sandwich_form(lam)
    assert form == sandwich_matrix(lam)
    assert form.entry(0, 0) == GroupRingElem.scalar(lam, LaurentQPoly.monomial(data.a_lam))
    expected = poincare_q_squared(data.n, data.J_dual).shift(-data.a_lam)
    assert f_lambda(HeckeElem.one(data.n), lam).value == GroupRingElem.scalar(lam, expected)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_satake_identity_and_symmetry(lam):
    n = sum(lam) - 1
    top = 4 if n <= 2 else 3
    for w in extended_elements_up_to(n, top):
        h = HeckeElem.T(w)
        assert verify_satake1(h, lam)
        value = f_lambda(h, lam)
        assert value.is_symmetric
        assert value.numerator == value.value.shift_q(lambda_data(lam).a_lam)


@pytest.mark.parametrize("lam", [(2, 1), (2, 2)])
def test_bar_compatibility(lam):
    n = sum(lam) - 1
    for w in extended_elements_up_to(n, 3):
        assert verify_bar_compatibility(HeckeElem.T(w), lam)


def test_sandwiches_commute():
    lam = (2, 2)
    elements = extended_elements_up_to(3, 2)
    for u, v in itertools.combinations(elements, 2):
        a, b = sandwich(HeckeElem.T(u), lam), sandwich(HeckeElem.T(v) + T_s(3, 0), lam)
        assert a @ b == b @ a


@pytest.mark.parametrize("lam", [(2, 1), (3,), (1, 1, 1)])
def test_kl_elements_of_m_gamma_map_to_schur_functions(lam):
    data = lambda_data(lam)
    basis = kl_basis(data.n, 10)
    scale = poincare_q_squared(data.n, data.J_dual) ** 2
    scale = scale.shift(-2 * data.a_lam)
    for a in dominant_reps(lam, 2):
        m = m_gamma(lam, a)
        value = f_lambda(basis.C(m), lam).value
        assert value == schur(lam, a) * GroupRingElem.scalar(lam, scale)
    assert g_lambda(lam).order >= 1
