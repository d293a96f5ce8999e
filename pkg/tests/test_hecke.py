import itertools

import pytest

from affine_cells.hecke import (
    C_parabolic_longest,
    FrontierError,
    HeckeElem,
    KLBasis,
    KLCache,
    KLCacheError,
    T_s,
    T_s_inverse,
    T_sigma,
    X_gamma,
    X_w,
    bar,
    cache_file,
    canonical_trace,
    kl_basis,
    pairing,
    poincare_q_squared,
    star,
)
from affine_cells.rings import LaurentQPoly, Q_MINUS_Q_INV
from affine_cells.weyl import (
    compose,
    extended_elements_up_to,
    finite,
    from_word,
    identity,
    inverse,
    length,
    longest_element,
    simple_reflection,
    translation,
)

Q_INV = LaurentQPoly.monomial(-1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quadratic_and_sigma_relations(n):
    one = HeckeElem.one(n)
    for i in range(n + 1):
        t = T_s(n, i)
        assert t * t == one + t.scale(Q_MINUS_Q_INV)
        assert t * T_s_inverse(n, i) == one
        conj = T_sigma(n) * t * T_sigma(n, n)
        assert conj == T_s(n, (i + 1) % (n + 1))
    assert T_sigma(n, n + 1) == one


def test_braid_relations():
    n = 2
    for i, j in [(0, 1), (1, 2), (2, 0)]:
        a, b = T_s(n, i), T_s(n, j)
        assert a * b * a == b * a * b


def test_trace_is_dual_on_standard_basis():
    elements = extended_elements_up_to(2, 3)
    for u, v in itertools.product(elements, repeat=2):
        expected = LaurentQPoly.const(1 if u == v else 0)
        assert canonical_trace(HeckeElem.T(u) * HeckeElem.T(inverse(v))) == expected
        assert pairing(HeckeElem.T(u), HeckeElem.T(v)) == expected


def test_trace_is_symmetric():
    elements = extended_elements_up_to(2, 2)
    for u, v in itertools.product(elements, repeat=2):
        a, b = HeckeElem.T(u) + T_s(2, 0), HeckeElem.T(v)
        assert canonical_trace(a * b) == canonical_trace(b * a)


def test_star_is_anti_involution():
    elements = extended_elements_up_to(2, 2)
    for u, v in itertools.product(elements, repeat=2):
        a, b = HeckeElem.T(u), HeckeElem.T(v) + T_s(2, 1).scale(Q_INV)
        assert star(a * b) == star(b) * star(a)
        assert star(star(a)) == a


def test_bar_involution():
    n = 2
    for i in range(3):
        assert bar(T_s(n, i)) == T_s_inverse(n, i)
    elements = extended_elements_up_to(2, 2)
    for u, v in itertools.product(elements, repeat=2):
        a, b = HeckeElem.T(u), HeckeElem.T(v)
        assert bar(a * b) == bar(a) * bar(b)
        assert bar(bar(a)) == a


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bernstein_elements_commute_and_add(n):
    weights = [w for w in itertools.product(range(-1, 2), repeat=n + 1) if w[-1] == 0][:6]
    for a, b in itertools.product(weights, repeat=2):
        total = [x + y for x, y in zip(a, b)]
        assert X_gamma(a) * X_gamma(b) == X_gamma(total)
    assert X_gamma([0] * (n + 1)) == HeckeElem.one(n)


def test_bernstein_element_of_dominant_translation_is_standard():
    w = translation((1, 0, 0))
    assert X_w(w) == HeckeElem.T(w)


def test_simple_kl_elements():
    basis = kl_basis(2, 6)
    for i in range(3):
        s = simple_reflection(2, i)
        assert basis.C(s) == T_s(2, i) + HeckeElem.scalar(2, Q_INV)
        assert basis.mu(identity(2), s) == 1
        product = basis.structure_h(s, s, s)
        assert product == LaurentQPoly({1: 1, -1: 1})


def test_kl_elements_are_bar_invariant_and_triangular():
    basis = kl_basis(2, 5)
    for w in extended_elements_up_to(2, 5):
        c = basis.C(w)
        assert bar(c) == c
        assert c.coeff(w) == LaurentQPoly.const(1)
        for v, p in c.items():
            if v != w:
                assert length(v) < length(w)
                assert p.deg() <= -1


@pytest.mark.parametrize("subset", [{1}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}])
def test_parabolic_longest_element_closed_form(subset):
    n = 3
    basis = kl_basis(n, 6)
    w_j = finite(longest_element(n + 1, subset))
    closed = C_parabolic_longest(n, subset)
    assert basis.C(w_j) == closed
    top = length(w_j)
    factor = poincare_q_squared(n, subset).shift(-top)
    assert closed * closed == closed.scale(factor)


def test_parabolic_left_multiplication():
    n = 2
    basis = kl_basis(n, 6)
    w_j = finite(longest_element(3, {1}))
    closed = C_parabolic_longest(n, {1})
    factor = poincare_q_squared(n, {1}).shift(-1)
    for w in extended_elements_up_to(2, 4):
        word = compose(w_j, w)
        if length(word) == length(w) - 1:
            assert closed * basis.C(w) == basis.C(w).scale(factor)


def test_frontier_error():
    basis = KLBasis(2, max_length=2)
    assert basis.C(from_word(2, [0, 1], 1)) is not None
    with pytest.raises(FrontierError):
        basis.C(from_word(2, [0, 1, 2]))


def test_cache_round_trip(tmp_path):
    fresh = kl_basis(2, 5, cache_dir=tmp_path)
    words = [from_word(2, [0, 1, 2, 0]), from_word(2, [1, 2, 1])]
    expected = [fresh.C(w) for w in words]
    path = cache_file(tmp_path, 2)
    assert path.read_text(encoding="utf-8").splitlines()[0] == "klcache v1 n=2"
    reloaded = KLCache(2, path)
    assert reloaded.stats()["elements"] >= 2
    again = kl_basis(2, 5, cache_dir=tmp_path)
    assert [again.C(w) for w in words] == expected


def test_corrupt_cache_reports_line(tmp_path):
    path = cache_file(tmp_path, 2)
    path.write_text("klcache v1 n=2\nnot a line\n", encoding="utf-8")
    with pytest.raises(KLCacheError, match=":2:"):
        KLCache(2, path)
    path.write_text("klcache v1 n=3\n", encoding="utf-8")
    with pytest.raises(KLCacheError, match=":1:"):
        KLCache(2, path)
