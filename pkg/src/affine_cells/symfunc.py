"""``G_lam``-symmetric functions in ``Z[zeta_lam]``.

``G_lam`` permutes the variables ``z_k`` within blocks of rows of equal length,
so a ``G_lam``-Schur function factors as a product, over blocks, of classical
Schur Laurent polynomials.  Each factor is computed as a ratio of alternants
with exact division by ``z_i - z_j`` in the free Laurent ring.  Only then is
the result reduced modulo ``z_1^{lam_1} ... z_r^{lam_r} = 1``, so no fraction
field of the torsion group ring is ever needed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Any, Sequence

from .lambda_geometry import (
    dominance_key,
    dominant_rep,
    g_lambda,
    g_lambda_positive_roots,
    g_lambda_roots,
    is_dominant,
    lambda_dominance_leq,
    normalize_lambda_coords,
    orbit,
)
from .rings import GroupRingElem, LaurentQPoly

FreeLaurent = dict[tuple[int, ...], int]


class SymmetryError(ArithmeticError):
    """An invariant of symmetric-function arithmetic failed (signals a bug)."""


@dataclass(frozen=True)
class SymFn:
    """A ``G_lam``-invariant element of ``Z[zeta_lam]``."""

    value: GroupRingElem

    def __post_init__(self) -> None:
        if not is_invariant(self.value):
            raise SymmetryError("element is not G_lam-invariant")

    @property
    def lam(self) -> tuple[int, ...]:
        return self.value.lam

    def to_json(self) -> dict[str, Any]:
        return {"lambda": list(self.lam), "terms": self.value.to_json(), "invariant": True}


def is_invariant(f: GroupRingElem) -> bool:
    group = g_lambda(f.lam)
    for i, j in group.row_generators():
        swap = list(range(1, len(f.lam) + 1))
        swap[i - 1], swap[j - 1] = j, i
        if f.act_rows(swap) != f:
            return False
    return True


# ---------------------------------------------------------------------------
# monomial symmetric functions


def monomial_e(lam: Sequence[int], a: Sequence[int]) -> GroupRingElem:
    """Orbit sum ``e_gamma``; a non-dominant ``gamma`` is replaced by its dominant representative."""
    lam_t = tuple(lam)
    key = normalize_lambda_coords(lam_t, tuple(a))
    if not is_dominant(lam_t, key):
        warnings.warn(f"weight {key} is not dominant; using its dominant representative", stacklevel=2)
        key = dominant_rep(lam_t, key)
    return GroupRingElem(lam_t, {(gamma, 0): 1 for gamma in orbit(lam_t, key)})


# ---------------------------------------------------------------------------
# Schur functions through alternants


def _divide_by_difference(poly: FreeLaurent, i: int, j: int) -> FreeLaurent:
    """Exact quotient of a Laurent polynomial by ``z_i - z_j`` (0-based indices)."""
    grouped: dict[int, FreeLaurent] = {}
    for mono, c in poly.items():
        rest = mono[:i] + (0,) + mono[i + 1 :]
        grouped.setdefault(mono[i], {})[rest] = c
    if not grouped:
        return {}
    top, bottom = max(grouped), min(grouped)
    quotient: FreeLaurent = {}
    carry: FreeLaurent = {}  # q_d, starting with q_top = 0
    for d in range(top, bottom, -1):
        # q_{d-1} = p_d + z_j q_d
        nxt = dict(grouped.get(d, {}))
        for mono, c in carry.items():
            shifted = list(mono)
            shifted[j] += 1
            key = tuple(shifted)
            nxt[key] = nxt.get(key, 0) + c
        carry = {m: c for m, c in nxt.items() if c}
        for mono, c in carry.items():
            full = list(mono)
            full[i] = d - 1
            quotient[tuple(full)] = c
    # remainder check: p_bottom + z_j q_bottom must vanish
    check = dict(grouped.get(bottom, {}))
    for mono, c in carry.items():
        shifted = list(mono)
        shifted[j] += 1
        key = tuple(shifted)
        check[key] = check.get(key, 0) + c
    if any(check.values()):
        raise SymmetryError("alternant division left a nonzero remainder")
    return quotient


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def classical_schur(exponents: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """``det(z_i^{mu_j + m - j}) / prod_{i<j} (z_i - z_j)`` as a free Laurent polynomial.

    ``exponents`` need not be decreasing; the result is then the straightened
    (possibly zero or negated) Schur function.
    """
    m = len(exponents)
    shifted = [mu + m - 1 - j for j, mu in enumerate(exponents)]
    numerator: FreeLaurent = {}
    for perm in permutations(range(m)):
        mono = [0] * m
        for j, target in enumerate(perm):
            mono[target] = shifted[j]
        key = tuple(mono)
        numerator[key] = numerator.get(key, 0) + _permutation_sign(perm)
    numerator = {k: c for k, c in numerator.items() if c}
    for i in range(m):
        for j in range(i + 1, m):
            numerator = _divide_by_difference(numerator, i, j)
    return tuple(sorted(numerator.items()))


def schur(lam: Sequence[int], a: Sequence[int]) -> GroupRingElem:
    """The ``G_lam``-Schur function ``s_gamma`` for the lambda-weight ``a``."""
    lam_t = tuple(lam)
    r = len(lam_t)
    key = normalize_lambda_coords(lam_t, tuple(a))
    terms: FreeLaurent = {(0,) * r: 1}
    for _length, rows in g_lambda(lam_t).blocks:
        block = classical_schur(tuple(key[k - 1] for k in rows))
        product: FreeLaurent = {}
        for mono, c in terms.items():
            for block_mono, d in block:
                new = list(mono)
                for k, e in zip(rows, block_mono):
                    new[k - 1] += e
                new_key = tuple(new)
                product[new_key] = product.get(new_key, 0) + c * d
        terms = {k: c for k, c in product.items() if c}
    return GroupRingElem(lam_t, {(mono, 0): c for mono, c in terms.items()})


def weyl_denominator(lam: Sequence[int]) -> GroupRingElem:
    """``prod_{alpha in Phi_{G_lam}} (1 - zeta^alpha)``."""
    lam_t = tuple(lam)
    r = len(lam_t)
    result = GroupRingElem.one(lam_t)
    for i, j in g_lambda_roots(lam_t):
        mono = [0] * r
        mono[i - 1] += 1
        mono[j - 1] -= 1
        result = result * (GroupRingElem.one(lam_t) - GroupRingElem.monomial(lam_t, mono))
    return result


def schur_cleared_sum(lam: Sequence[int], a: Sequence[int]) -> GroupRingElem:
    """Oracle: ``sum_g zeta^{g gamma} prod_{alpha > 0} (1 - zeta^{g alpha})``.

    This equals ``s_gamma`` times :func:`weyl_denominator`, obtained from the
    defining sum over ``G_lam`` by clearing all denominators.
    """
    lam_t = tuple(lam)
    r = len(lam_t)
    group = g_lambda(lam_t)
    total = GroupRingElem.zero(lam_t)
    for g in group.row_permutations():
        term = GroupRingElem.monomial(lam_t, group.act(g, a))
        for i, j in g_lambda_positive_roots(lam_t):
            mono = [0] * r
            mono[g[i - 1] - 1] += 1
            mono[g[j - 1] - 1] -= 1
            term = term * (GroupRingElem.one(lam_t) - GroupRingElem.monomial(lam_t, mono))
        total = total + term
    return total


# ---------------------------------------------------------------------------
# inner product and expansions


def inner_inf(f: GroupRingElem, g: GroupRingElem) -> int:
    """``<f, g>^inf = (1/|G_lam|) [f conj(g) prod (1 - zeta^alpha)]_ct``."""
    if f.lam != g.lam:
        raise ValueError("inner product of elements for different partitions")
    lam = f.lam
    raw = (f * g.conj() * weyl_denominator(lam)).constant_term()
    if any(e != 0 for e in raw.raw()):
        raise ValueError("inner_inf expects q-free arguments")
    value = raw.coeff(0)
    order = g_lambda(lam).order
    if value % order:
        raise SymmetryError(f"constant term {value} is not divisible by |G_lam| = {order}")
    return value // order


def expand_in_monomials(f: GroupRingElem) -> dict[tuple[int, ...], int]:
    """Coefficients of an invariant ``f`` in the orbit sums ``e_gamma``."""
    lam = f.lam
    result = {}
    for key, c in f.integer_terms().items():
        if is_dominant(lam, key):
            result[key] = c
    return dict(sorted(result.items(), key=lambda item: dominance_key(lam, item[0])))


def expand_in_schur(f: GroupRingElem, confirm: bool = True) -> dict[tuple[int, ...], int]:
    """Coefficients of an invariant ``f`` in the Schur basis.

    The top dominant term (in a dominance-compatible order) is peeled off
    repeatedly; with ``confirm`` every coefficient is re-derived as an inner
    product with the corresponding Schur function.
    """
    lam = f.lam
    if not is_invariant(f):
        raise SymmetryError("expand_in_schur requires a G_lam-invariant element")
    remainder = f
    result: dict[tuple[int, ...], int] = {}
    while not remainder.is_zero():
        dominant = [key for key in remainder.integer_terms() if is_dominant(lam, key)]
        top = max(dominant, key=lambda key: dominance_key(lam, key))
        coeff = remainder.integer_terms()[top]
        result[top] = coeff
        remainder = remainder - schur(lam, top) * coeff
    if confirm:
        for key, coeff in result.items():
            if inner_inf(f, schur(lam, key)) != coeff:
                raise SymmetryError("Schur coefficient disagrees with the inner product")
    return dict(sorted(result.items(), key=lambda item: dominance_key(lam, item[0])))


def schur_is_triangular(lam: Sequence[int], a: Sequence[int]) -> bool:
    """``s_gamma - e_gamma`` is a nonnegative combination of ``e_{gamma'}`` with ``gamma' < gamma``."""
    lam_t = tuple(lam)
    key = normalize_lambda_coords(lam_t, tuple(a))
    coefficients = expand_in_monomials(schur(lam_t, key))
    if coefficients.get(key) != 1:
        return False
    for other, c in coefficients.items():
        if other == key:
            continue
        if c < 0 or not lambda_dominance_leq(lam_t, other, key):
            return False
    return True


def schur_q_scaled(lam: Sequence[int], a: Sequence[int], scale: LaurentQPoly) -> GroupRingElem:
    return schur(lam, a) * scale
