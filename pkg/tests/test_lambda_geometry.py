import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from affine_cells.lambda_geometry import (
    L_R_sets,
    ascent_set,
    ascent_set_direct,
    coset_decompose,
    dominance_covers,
    dominant_reps,
    g_conjugated_into_dual,
    g_lambda,
    is_dominant,
    is_min_coset_rep,
    lambda_data,
    lambda_dominance_leq,
    length_tau_conj,
    m_gamma,
    m_gamma_decomposition,
    maximize_bruteforce,
    min_coset_reps,
    mu_of,
    orbit,
    project_to_fundamental,
    tau,
    tau_conjugate,
    u_lambda,
    y_gamma,
)
from affine_cells.weyl import (
    compose,
    finite,
    from_word,
    identity,
    inverse,
    length,
    partitions_of,
    perm_length,
    perm_mul,
    perm_reduced_word,
    transpose,
)

SMALL_PARTITIONS = [lam for k in range(2, 5) for lam in partitions_of(k)]


def test_u_lambda_reads_columns():
    assert u_lambda((5, 3, 3, 2, 1)) == (1, 6, 9, 12, 14, 2, 7, 10, 13, 3, 8, 11, 4, 5)
    assert u_lambda((4,)) == (1, 2, 3, 4)


@pytest.mark.parametrize("lam", SMALL_PARTITIONS + list(partitions_of(5)))
def test_u_lambda_characterized_by_ascent_set(lam):
    data = lambda_data(lam)
    matches = [u for u in min_coset_reps(lam) if ascent_set(u, lam) == data.J_dual]
    assert matches == [data.u_lam]
    assert mu_of(data.u_lam, lam) == transpose(lam)


def test_mu_worked_example():
    lam = (5, 3, 3, 2, 1)
    w = (1, 3, 7, 2, 6, 11, 12, 5, 4, 14, 9, 10, 13, 8)
    assert mu_of(w, lam) == (4, 2, 2, 2, 1, 1, 1, 1)


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_mu_bounded_by_dual_partition(rank):
    for lam in partitions_of(rank):
        for w in itertools.permutations(range(1, rank + 1)):
            mu = mu_of(w, lam)
            assert sum(mu) == rank
            assert _dominated(mu, transpose(lam))
    assert mu_of(tuple(range(1, rank + 1)), (1,) * rank) == (rank,)


def _dominated(mu, lam):
    a = list(itertools.accumulate(mu))
    b = list(itertools.accumulate(lam))
    return all(x <= b[min(i, len(b) - 1)] for i, x in enumerate(a))


@pytest.mark.parametrize("lam", SMALL_PARTITIONS + list(partitions_of(5)))
def test_ascent_set_matches_definition(lam):
    for u in min_coset_reps(lam):
        assert ascent_set(u, lam) == ascent_set_direct(u, lam)
    assert ascent_set((1, 2, 3), (3,)) == frozenset()


def test_ascent_set_rejects_non_minimal():
    with pytest.raises(ValueError):
        ascent_set((2, 1, 3), (2, 1))


@pytest.mark.parametrize("lam", SMALL_PARTITIONS)
def test_coset_decomposition_is_length_additive(lam):
    data = lambda_data(lam)
    for u in itertools.permutations(range(1, data.rank + 1)):
        left, right = coset_decompose(u, lam)
        assert perm_mul(left, right) == u
        assert perm_length(left) + perm_length(right) == perm_length(u)
        assert is_min_coset_rep(right, lam)
    for u in min_coset_reps(lam):
        assert coset_decompose(u, lam) == (tuple(range(1, data.rank + 1)), u)
    assert coset_decompose(data.w_lam, lam)[1] == tuple(range(1, data.rank + 1))


def test_min_coset_reps_canonical_order():
    words = [perm_reduced_word(u) for u in min_coset_reps((2, 2))]
    assert words == [[2], [], [2, 1], [2, 3], [2, 1, 3], [2, 1, 3, 2]]
    assert min_coset_reps((3,)) == [(1, 2, 3)]
    with pytest.raises(ValueError):
        min_coset_reps((2, 1), order=[(1, 2, 3)])


@pytest.mark.parametrize("rank", [2, 3, 4, 5, 6])
def test_min_coset_rep_count(rank):
    for lam in partitions_of(rank):
        expected = math.factorial(rank) // math.prod(math.factorial(p) for p in lam)
        assert len(min_coset_reps(lam)) == expected


def test_projection_worked_example():
    assert project_to_fundamental((7, 3), (39, 11)) == (3, 3, 3, 3, 2, 2, 2, 1, 1, 0)


@given(st.sampled_from(SMALL_PARTITIONS), st.data())
def test_projection_idempotent_and_additive(lam, data):
    r = len(lam)
    a = data.draw(st.lists(st.integers(-6, 6), min_size=r, max_size=r))
    b = data.draw(st.lists(st.integers(-6, 6), min_size=r, max_size=r))
    gamma = project_to_fundamental(lam, a)
    assert _row_sums(gamma, lam) == _row_sums(project_to_fundamental(lam, _row_sums(gamma, lam)), lam)
    total = project_to_fundamental(lam, [x + y for x, y in zip(a, b)])
    combined = compose(tau(gamma, lam), tau(project_to_fundamental(lam, b), lam))
    assert combined == tau(total, lam)


def _row_sums(weight, lam):
    sums, start = [], 0
    for part in lam:
        sums.append(sum(weight[start:start + part]))
        start += part
    return sums


def test_y_and_tau_examples():
    zero = (0, 0, 0)
    assert y_gamma(zero, (2, 1)) == (1, 2, 3)
    assert tau(zero, (2, 1)) == identity(2)
    gamma = project_to_fundamental((2, 1), (1, 0))
    assert y_gamma(gamma, (2, 1)) == (2, 1, 3)
    with pytest.raises(ValueError):
        y_gamma((2, 0, 0), (2, 1))


def test_g_lambda_structure():
    group = g_lambda((6, 6, 4, 4, 4, 2, 1, 1))
    assert group.row_generators() == [(1, 2), (3, 4), (4, 5), (7, 8)]
    assert group.order == 2 * 6 * 2
    assert g_lambda((3, 2, 1)).order == 1
    assert is_dominant((2, 2), (1, 0)) and not is_dominant((2, 2), (0, 1))
    assert sorted(orbit((2, 2), (1, 0))) == [(0, 1), (1, 0)]
    assert all(a[0] >= a[1] for a in dominant_reps((2, 2), 3))


@pytest.mark.parametrize("lam", SMALL_PARTITIONS + [(2, 2, 1, 1), (3, 3)])
def test_g_lambda_conjugates_into_dual_parabolic(lam):
    assert g_conjugated_into_dual(lam)


def test_lambda_dominance_examples():
    assert lambda_dominance_leq((2, 2), (0, 0), (0, 0))
    assert lambda_dominance_leq((2, 2), (0, 0), (1, -1))
    assert not lambda_dominance_leq((2, 2), (1, -1), (0, 0))
    for a, b in itertools.product(range(-2, 3), repeat=2):
        assert lambda_dominance_leq((3,), (a,), (b,)) == (
            project_to_fundamental((3,), (a,)) == project_to_fundamental((3,), (b,))
        )


def test_tau_conjugate_worked_example():
    element = tau_conjugate((4, 2), (2, 1))
    assert element == from_word(5, [1, 4], 3)
    assert length_tau_conj((4, 2), (2, 1)) == 2 == length(element)


def test_m_gamma_of_zero_is_dual_longest():
    for lam in SMALL_PARTITIONS:
        assert m_gamma(lam, (0,) * len(lam)) == finite(lambda_data(lam).w_dual)
        assert length_tau_conj(lam, (0,) * len(lam)) == 0


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1), (2, 1, 1)])
def test_m_gamma_against_bruteforce(lam):
    data = lambda_data(lam)
    for a in itertools.product(range(-2, 3), repeat=len(lam)):
        m = m_gamma(lam, a)
        g = tau_conjugate(lam, a)
        assert m == maximize_bruteforce(g, data.J_dual)
        assert length(m) == length(g) + perm_length(data.w_dual)
        x, g2, y = m_gamma_decomposition(lam, a)
        assert compose(compose(inverse(finite(x)), g2), finite(y)) == m
        assert perm_length(x) + perm_length(y) == perm_length(data.w_dual)


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1), (2, 1, 1), (3, 2), (2, 2, 1)])
def test_length_formula_and_root_sets(lam):
    data = lambda_data(lam)
    for a in itertools.product(range(-3, 4), repeat=len(lam)):
        assert length_tau_conj(lam, a) == length(tau_conjugate(lam, a))
        left, right = L_R_sets(lam, a)
        assert len(left) + len(right) == perm_length(data.w_dual)


def test_m_gamma_invariant_under_g_lambda():
    lam = (2, 2, 1)
    for a in itertools.product(range(-2, 3), repeat=3):
        for b in orbit(lam, a):
            assert m_gamma(lam, b) == m_gamma(lam, a)


def test_m_gamma_length_strictly_increases_along_covers():
    rng = random.Random(0)
    for lam in [(2, 1), (2, 2), (3, 2, 1)]:
        reps = dominant_reps(lam, 3)
        for a in rng.sample(reps, min(8, len(reps))):
            for b in dominance_covers(lam, a):
                assert lambda_dominance_leq(lam, a, b)
                assert length(m_gamma(lam, a)) < length(m_gamma(lam, b))
