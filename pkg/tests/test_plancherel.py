import itertools

import pytest

from affine_cells.cells import representation
from affine_cells.hecke import HeckeElem
from affine_cells.lambda_geometry import lambda_data
from affine_cells.plancherel import (
    asymptotic_factor,
    asymptotic_factor_by_expansion,
    asymptotic_pairing,
    c_function_factors,
    default_truncation,
    factor_system,
    plancherel_pairing,
    plancherel_sum_T,
    series_sum,
    trace_inf,
)
from affine_cells.rings import GroupRingElem, LaurentQPoly
from affine_cells.symfunc import weyl_denominator
from affine_cells.weyl import extended_elements_up_to, identity, partitions_of


def test_factor_systems():
    assert factor_system((3,)).factors == ()
    assert factor_system((3,)).C_degree() == 0
    assert factor_system((1, 1, 1)).C_degree() == -6
    (factor,) = factor_system((2, 1)).factors
    assert (factor.numerator_exponent, factor.denominator_exponent) == (3, -1)
    numerator, denominator = c_function_factors((2, 1))
    x = GroupRingElem.monomial((2, 1), (-1, 1))
    one = GroupRingElem.one((2, 1))
    assert numerator == one + x * GroupRingElem.scalar((2, 1), LaurentQPoly.monomial(-3))
    assert denominator == one + x * GroupRingElem.scalar((2, 1), LaurentQPoly.monomial(1))
    assert default_truncation(2) == 16


@pytest.mark.parametrize("n", [1, 2, 3])
def test_asymptotic_factor_matches_root_product(n):
    for lam in partitions_of(n + 1):
        report = asymptotic_factor(lam)
        assert report.holds
        assert report.product_over_roots == weyl_denominator(lam)
        assert asymptotic_factor_by_expansion(lam) == report.leading


def test_plancherel_sum_on_identity():
    truncation = 8
    sums = plancherel_sum_T(identity(2), identity(2), truncation)
    assert series_sum(sums, truncation) == LaurentQPoly.const(1)


def test_plancherel_sum_is_orthonormal_on_short_elements():
    truncation = 10
    elements = extended_elements_up_to(2, 2)
    for u, v in itertools.product(elements, repeat=2):
        total = series_sum(plancherel_sum_T(u, v, truncation), truncation)
        assert total == LaurentQPoly.const(1 if u == v else 0)


def test_pairing_rejects_bad_truncation():
    with pytest.raises(ValueError):
        plancherel_pairing(HeckeElem.one(2), HeckeElem.one(2), (2, 1), 0)


def test_pairing_degrees_are_bounded():
    truncation = 8
    for w in extended_elements_up_to(2, 3):
        for lam, series in plancherel_sum_T(w, w, truncation).items():
            assert series.value.deg() <= 0


@pytest.mark.parametrize("lam", [(2, 1), (2, 2)])
def test_leading_matrices_are_orthonormal(lam):
    rep = representation(lam)
    a = lambda_data(lam).a_lam
    cell = []
    for w in extended_elements_up_to(rep.n, a + 2):
        leading = rep.leading_matrix(w)
        if not leading.is_zero():
            cell.append(leading)
    cell = cell[:16]
    assert len(cell) >= 4
    for i, j in itertools.product(range(len(cell)), repeat=2):
        assert asymptotic_pairing(cell[i], cell[j]) == (1 if i == j else 0)


def test_trace_inf():
    d = identity(2)
    assert trace_inf({d: 1}, {d}) == 1
    other = extended_elements_up_to(2, 1)[-1]
    assert trace_inf({other: 3}, {d}) == 0
    assert trace_inf({d: 2, other: 5}, {d}) == 2
