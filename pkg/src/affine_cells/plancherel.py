"""Plancherel data, the truncated pairing ``<h1, h2>_lam`` and its asymptotic limit.

The weight ``C_lam(q) / (c^lam(zeta) c^lam(zeta^{-1}))`` is a rational
function.  Each denominator factor ``1 - v^m z_i^{-1} z_j`` (``m > 0``) is
expanded as a geometric series in ``v^m z_i^{-1} z_j``, so every series runs
downwards in ``q`` and may be cut off at a floor ``-M``.  Results carry their
floor: coefficients of ``q^e`` with ``e >= floor`` are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .cells import representation
from .lambda_geometry import g_lambda, lambda_data
from .rings import GroupRingElem, LaurentQPoly, RingMatrix, TruncatedQSeries, expand_inverse_factor, geometric_series_q
from .symfunc import SymmetryError, weyl_denominator
from .weyl import ExtAffineElement, Partition, inverse, partitions_of


def v_power(exponent: int) -> LaurentQPoly:
    """``v^e`` with ``v = -q^{-1}``."""
    return LaurentQPoly.monomial(-exponent, -1 if exponent % 2 else 1)


def default_truncation(n: int) -> int:
    """``2 max_lam l(w_{lam'}) + 10``; the largest ``a`` is that of ``(1^{n+1})``."""
    return n * (n + 1) + 10


# ---------------------------------------------------------------------------
# factor system


@dataclass(frozen=True)
class CFactor:
    """One factor ``(1 - v^num x) / (1 - v^den x)`` of ``c^lam`` with ``x = z_i^{-1} z_j``."""

    i: int
    j: int
    k: int
    numerator_exponent: int
    denominator_exponent: int

    @property
    def numerator_degree(self) -> int:
        """``q``-degree of ``1 - v^num x``."""
        return max(0, -self.numerator_exponent)

    @property
    def denominator_degree(self) -> int:
        return max(0, -self.denominator_exponent)


@dataclass(frozen=True)
class PlancherelFactorSystem:
    lam: tuple[int, ...]
    factors: tuple[CFactor, ...]

    def C_degree(self) -> int:
        """``deg C_lam(q) = -(n+1)^2 + sum lam_i^2``."""
        return -sum(self.lam) ** 2 + sum(p * p for p in self.lam)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "C_degree": self.C_degree(),
            "factors": [
                {"i": f.i, "j": f.j, "k": f.k, "numerator": f.numerator_exponent, "denominator": f.denominator_exponent}
                for f in self.factors
            ],
        }


@lru_cache(maxsize=None)
def factor_system(lam: Sequence[int]) -> PlancherelFactorSystem:
    lam_t = tuple(lam)
    factors = []
    r = len(lam_t)
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            for k in range(1, lam_t[j - 1] + 1):
                num = lam_t[i - 1] - lam_t[j - 1] + 2 * k
                den = -lam_t[i - 1] - lam_t[j - 1] + 2 * k
                factors.append(CFactor(i, j, k, num, den))
    return PlancherelFactorSystem(lam_t, tuple(factors))


def C_lambda_series(lam: Sequence[int], truncation: int) -> TruncatedQSeries:
    """``C_lam(q)`` with each ``1 / (1 - q^{-2 lam_i})`` expanded."""
    lam_t = tuple(lam)
    n = sum(lam_t) - 1
    value = TruncatedQSeries.exact(LaurentQPoly.monomial(-n * (n + 1)))
    for p in lam_t:
        head = LaurentQPoly.monomial(p * p - p) * LaurentQPoly({0: 1, -2: -1}) ** p
        value = value * TruncatedQSeries.exact(head) * geometric_series_q(2 * p, truncation)
    return value


def c_function_factors(lam: Sequence[int]) -> tuple[GroupRingElem, GroupRingElem]:
    """``(numerator, denominator)`` of ``c^lam(zeta)`` as group ring elements."""
    lam_t = tuple(lam)
    r = len(lam_t)
    numerator = GroupRingElem.one(lam_t)
    denominator = GroupRingElem.one(lam_t)
    for f in factor_system(lam_t).factors:
        key = [0] * r
        key[f.i - 1] -= 1
        key[f.j - 1] += 1
        x = GroupRingElem.monomial(lam_t, key)
        numerator = numerator * (GroupRingElem.one(lam_t) - x * v_power(f.numerator_exponent))
        denominator = denominator * (GroupRingElem.one(lam_t) - x * v_power(f.denominator_exponent))
    return numerator, denominator


def _weight_series_uncached(lam: tuple[int, ...], truncation: int) -> TruncatedQSeries:
    r = len(lam)
    total = C_lambda_series(lam, truncation)
    for f in factor_system(lam).factors:
        for invert in (False, True):
            key = [0] * r
            sign = -1 if invert else 1
            key[f.i - 1] -= sign
            key[f.j - 1] += sign
            top = GroupRingElem.one(lam) - GroupRingElem.monomial(lam, key) * v_power(f.denominator_exponent)
            total = total * TruncatedQSeries.exact(top)
            total = total * expand_inverse_factor(lam, f.numerator_exponent, f.i, f.j, truncation, invert_zeta=invert)
    return total


@lru_cache(maxsize=64)
def plancherel_weight(lam: Sequence[int], truncation: int) -> TruncatedQSeries:
    """``C_lam(q) / (c^lam(zeta) c^lam(zeta^{-1}))`` as a truncated series."""
    return _weight_series_uncached(tuple(lam), truncation)


# ---------------------------------------------------------------------------
# the pairing


def _divide_exact(value: LaurentQPoly, divisor: int) -> LaurentQPoly:
    out = {}
    for e, c in value.raw().items():
        if c % divisor:
            raise SymmetryError(f"coefficient {c} of q^{e} is not divisible by |G_lam| = {divisor}")
        out[e] = c // divisor
    return LaurentQPoly(out)


def pairing_from_character(lam: Sequence[int], character: GroupRingElem, truncation: int) -> TruncatedQSeries:
    """``C_lam / |G_lam| [character / (c cbar)]_ct`` exact down to ``q^{-truncation}``."""
    lam_t = tuple(lam)
    order = g_lambda(lam_t).order
    if character.is_zero():
        return TruncatedQSeries(LaurentQPoly(), -truncation)
    top = int(character.q_degree())
    depth = truncation + max(top, 0)
    while True:
        weight = plancherel_weight(lam_t, depth)
        product = TruncatedQSeries.exact(character) * weight
        if product.floor is None or product.floor <= -truncation:
            break
        depth += product.floor + truncation
    ct = product.value.constant_term()
    return TruncatedQSeries(_divide_exact(ct, order), -truncation)


def plancherel_pairing_T(
    u: ExtAffineElement, v: ExtAffineElement, lam: Sequence[int], truncation: int
) -> TruncatedQSeries:
    """``<T_u, T_v>_lam`` using ``T_v^* = T_{v^{-1}}``."""
    rep = representation(tuple(lam))
    return pairing_from_character(lam, (rep.pi_T(u) @ rep.pi_T(inverse(v))).trace(), truncation)


def plancherel_pairing(h1, h2, lam: Sequence[int], truncation: int) -> TruncatedQSeries:  # type: ignore[no-untyped-def]
    """``<h1, h2>_lam`` for Hecke algebra elements."""
    from .hecke import star

    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    rep = representation(tuple(lam))
    return pairing_from_character(lam, rep.pi_of_hecke(h1 * star(h2)).trace(), truncation)


def plancherel_sum_T(u: ExtAffineElement, v: ExtAffineElement, truncation: int) -> dict[Partition, TruncatedQSeries]:
    """Every ``<T_u, T_v>_lam`` for the partitions of ``n + 1``."""
    return {lam: plancherel_pairing_T(u, v, lam, truncation) for lam in partitions_of(u.rank)}


def series_sum(series: Mapping[Partition, TruncatedQSeries], truncation: int) -> LaurentQPoly:
    total = LaurentQPoly()
    for value in series.values():
        total = total + value.value
    return LaurentQPoly({e: c for e, c in total.raw().items() if e >= -truncation})


# ---------------------------------------------------------------------------
# asymptotic data


@dataclass(frozen=True)
class AsymptoticFactorReport:
    lam: tuple[int, ...]
    degree: int
    expected_degree: int
    leading: GroupRingElem
    product_over_roots: GroupRingElem

    @property
    def holds(self) -> bool:
        return self.degree == self.expected_degree and self.leading == self.product_over_roots


def asymptotic_factor(lam: Sequence[int]) -> AsymptoticFactorReport:
    """Leading-term bookkeeping for ``C_lam / (c cbar)``, factor by factor.

    ``C_lam`` contributes ``q^{deg C_lam}`` times 1.  Each expanded
    denominator factor ``1 / (1 - v^m x)`` with ``m > 0`` contributes 1.  Each
    polynomial factor ``1 - v^e x`` with ``e <= 0`` contributes its top part:
    ``-v^e x`` when ``e < 0`` and ``1 - x`` when ``e = 0``.
    """
    lam_t = tuple(lam)
    r = len(lam_t)
    system = factor_system(lam_t)
    degree = system.C_degree()
    leading = GroupRingElem.one(lam_t)
    for f in system.factors:
        for sign in (1, -1):
            key = [0] * r
            key[f.i - 1] -= sign
            key[f.j - 1] += sign
            x = GroupRingElem.monomial(lam_t, key)
            e = f.denominator_exponent
            if e < 0:
                degree += -e
                leading = leading * x * (-1 if (e % 2 == 0) else 1)
            else:
                leading = leading * (GroupRingElem.one(lam_t) - x)
    return AsymptoticFactorReport(
        lam_t, degree, -2 * lambda_data(lam_t).a_lam, leading, weyl_denominator(lam_t)
    )


def asymptotic_factor_by_expansion(lam: Sequence[int]) -> GroupRingElem:
    """Oracle: the ``q^{-2a}`` coefficient of the expanded weight, as a group ring element."""
    lam_t = tuple(lam)
    a = lambda_data(lam_t).a_lam
    weight = plancherel_weight(lam_t, 2 * a + 4)
    value = weight.value
    if isinstance(value, LaurentQPoly):
        value = GroupRingElem.scalar(lam_t, value)
    if value.q_degree() > -2 * a:
        raise ArithmeticError("weight has degree above -2 l(w_{lam'})")
    return value.shift_q(2 * a).sp0()


def asymptotic_pairing(A: RingMatrix, B: RingMatrix) -> int:
    """``(1/|G_lam|) [tr(A B^*) prod_{Phi_G} (1 - zeta^alpha)]_ct``."""
    lam = A.lam
    trace = (A @ B.conj_transpose()).trace()
    raw = (trace * weyl_denominator(lam)).constant_term()
    if any(e != 0 for e in raw.raw()):
        raise SymmetryError("asymptotic pairing expects q-free matrices")
    value = raw.coeff(0)
    order = g_lambda(lam).order
    if value % order:
        raise SymmetryError(f"constant term {value} is not divisible by |G_lam| = {order}")
    return value // order


def trace_inf(combination: Mapping[ExtAffineElement, int], distinguished: set[ExtAffineElement]) -> int:
    """``Tr^inf(sum a_w t_w) = sum_{d in D} a_d`` (all ``n_d = 1`` in type A)."""
    return sum(c for w, c in combination.items() if w in distinguished)


__all__ = [
    "CFactor",
    "PlancherelFactorSystem",
    "asymptotic_factor",
    "asymptotic_factor_by_expansion",
    "asymptotic_pairing",
    "c_function_factors",
    "default_truncation",
    "factor_system",
    "pairing_from_character",
    "plancherel_pairing",
    "plancherel_pairing_T",
    "plancherel_sum_T",
    "plancherel_weight",
    "series_sum",
    "trace_inf",
]
