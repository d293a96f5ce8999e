import itertools
import warnings

import pytest
from hypothesis import given, strategies as st

from affine_cells.lambda_geometry import dominant_reps, g_lambda, orbit
from affine_cells.rings import GroupRingElem
from affine_cells.symfunc import (
    SymFn,
    SymmetryError,
    expand_in_monomials,
    expand_in_schur,
    inner_inf,
    is_invariant,
    monomial_e,
    schur,
    schur_cleared_sum,
    schur_is_triangular,
    weyl_denominator,
)

LAMBDAS = [(3,), (2, 1), (2, 2), (2, 2, 1), (1, 1, 1), (2, 1, 1), (3, 3), (2, 2, 2)]


def z(lam, *key):
    return GroupRingElem.monomial(lam, key)


def test_monomial_orbit_sums():
    assert monomial_e((2, 1), (0, 0)) == GroupRingElem.one((2, 1))
    assert monomial_e((3, 2, 1), (2, 1, 0)) == z((3, 2, 1), 2, 1, 0)
    assert monomial_e((2, 2), (1, 0)) == z((2, 2), 1, 0) + z((2, 2), 0, 1)
    for lam in LAMBDAS:
        order = g_lambda(lam).order
        for a in dominant_reps(lam, 2):
            assert order % len(orbit(lam, a)) == 0


def test_non_dominant_input_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        value = monomial_e((2, 2), (0, 1))
    assert caught
    assert value == monomial_e((2, 2), (1, 0))


def test_single_row_schur_is_a_power():
    for i in range(4):
        assert schur((3,), (i,)) == z((3,), i)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(5) for b in range(-2, 3) if a >= b])
def test_two_two_closed_form(a, b):
    lam = (2, 2)
    s = schur(lam, (a, b))
    assert s * (z(lam, 1, 0) - z(lam, 0, 1)) == z(lam, a + 1, b) - z(lam, b, a + 1)


def test_torsion_schur_squares_to_one():
    lam = (2, 2)
    s = schur(lam, (1, 1))
    assert s == z(lam, 1, 1)
    assert s * s == GroupRingElem.one(lam)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_schur_agrees_with_direct_sum_and_is_triangular(lam):
    for a in dominant_reps(lam, 3):
        s = schur(lam, a)
        assert is_invariant(s)
        assert s * weyl_denominator(lam) == schur_cleared_sum(lam, a)
        assert schur_is_triangular(lam, a)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_schur_functions_are_orthonormal(lam):
    reps = dominant_reps(lam, 2)
    functions = {a: schur(lam, a) for a in reps}
    for a, b in itertools.product(reps, repeat=2):
        assert inner_inf(functions[a], functions[b]) == (1 if a == b else 0)


@given(st.sampled_from(LAMBDAS), st.data())
def test_schur_expansion_reconstructs(lam, data):
    reps = dominant_reps(lam, 2)
    coefficients = data.draw(st.dictionaries(st.sampled_from(reps), st.integers(-3, 3), max_size=4))
    f = GroupRingElem.zero(lam)
    for a, c in coefficients.items():
        f = f + schur(lam, a) * c
    expected = {a: c for a, c in coefficients.items() if c}
    assert expand_in_schur(f) == expected
    rebuilt = GroupRingElem.zero(lam)
    for a, c in expand_in_monomials(f).items():
        rebuilt = rebuilt + monomial_e(lam, a) * c
    assert rebuilt == f


def test_invariance_is_enforced():
    with pytest.raises(SymmetryError):
        SymFn(z((2, 2), 1, 0))
    with pytest.raises(SymmetryError):
        expand_in_schur(z((2, 2), 1, 0))
    assert SymFn(monomial_e((2, 2), (1, 0))).lam == (2, 2)
