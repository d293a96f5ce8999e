"""The lambda-relative Satake functional ``f_lam(h) = chi_lam(h C_{w_{lam'}})``.

``f_lam`` is always computed as a trace of matrices.  The normalized
functional ``q^{l(w_{lam'})} f_lam / W_{lam'}(q^2)`` is kept as an exact
numerator and divisor pair, so no ring with ``W_{lam'}(q^2)`` inverted is
ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

from .cells import representation
from .hecke import C_parabolic_longest, HeckeElem, bar, poincare_q_squared
from .lambda_geometry import lambda_data, positive_roots_lambda, weight_to_lambda
from .rings import GroupRingElem, LaurentQPoly, RingMatrix
from .symfunc import is_invariant
from .weyl import pair, parabolic_elements, perm_length, perm_mul


@dataclass(frozen=True)
class SatakeValue:
    """``f_lam(h)`` together with the normalized pair ``(q^l f_lam(h), W_{lam'}(q^2))``."""

    value: GroupRingElem
    a_lam: int
    divisor: LaurentQPoly

    @property
    def numerator(self) -> GroupRingElem:
        return self.value.shift_q(self.a_lam)

    @property
    def is_symmetric(self) -> bool:
        return is_invariant(self.value)

    def to_json(self) -> dict[str, Any]:
        return {
            "lambda": list(self.value.lam),
            "value": self.value.to_json(),
            "normalized": {"numerator": self.numerator.to_json(), "divisor": self.divisor.to_json()},
        }


@lru_cache(maxsize=None)
def sandwich_hecke(lam: Sequence[int]) -> HeckeElem:
    """``C_{w_{lam'}}`` from its closed form."""
    data = lambda_data(tuple(lam))
    return C_parabolic_longest(data.n, data.J_dual)


@lru_cache(maxsize=None)
def sandwich_matrix(lam: Sequence[int]) -> RingMatrix:
    """``pi_lam(C_{w_{lam'}})`` computed through the representation."""
    return representation(tuple(lam)).pi_of_hecke(sandwich_hecke(tuple(lam)))


def sandwich_form(lam: Sequence[int]) -> RingMatrix:
    """Closed form: ``q^{a - l(x) - l(y)}`` at ``(u_lam x, u_lam y)`` for ``x, y`` in ``W_{lam'}``."""
    lam_t = tuple(lam)
    data = lambda_data(lam_t)
    rep = representation(lam_t)
    index = {u: k for k, u in enumerate(rep.order)}
    matrix = RingMatrix(lam_t, rep.size)
    dual = parabolic_elements(data.rank, data.J_dual)
    for x in dual:
        row = index[perm_mul(data.u_lam, x)]
        for y in dual:
            col = index[perm_mul(data.u_lam, y)]
            exponent = data.a_lam - perm_length(x) - perm_length(y)
            matrix.set_entry(row, col, GroupRingElem.scalar(lam_t, LaurentQPoly.monomial(exponent)))
    return matrix


def f_lambda(h: HeckeElem, lam: Sequence[int]) -> SatakeValue:
    """``f_lam(h) = tr(pi_lam(h) pi_lam(C_{w_{lam'}}))``."""
    lam_t = tuple(lam)
    data = lambda_data(lam_t)
    rep = representation(lam_t)
    value = (rep.pi_of_hecke(h) @ sandwich_matrix(lam_t)).trace()
    return SatakeValue(value, data.a_lam, poincare_q_squared(data.n, data.J_dual))


def sandwich(h: HeckeElem, lam: Sequence[int]) -> RingMatrix:
    """``pi_lam(C h C)`` with ``C = C_{w_{lam'}}``."""
    lam_t = tuple(lam)
    C = sandwich_matrix(lam_t)
    return C @ representation(lam_t).pi_of_hecke(h) @ C


def verify_satake1(h: HeckeElem, lam: Sequence[int]) -> bool:
    """``pi_lam(C h C) = f_lam(h) pi_lam(C)``."""
    lam_t = tuple(lam)
    return sandwich(h, lam_t) == sandwich_matrix(lam_t).scale(f_lambda(h, lam_t).value)


def verify_bar_compatibility(h: HeckeElem, lam: Sequence[int]) -> bool:
    """``f_lam(bar h) = bar f_lam(h)``."""
    return f_lambda(bar(h), lam).value == f_lambda(h, lam).value.bar()


def psi_T(lam: Sequence[int], j: int) -> GroupRingElem:
    """``psi_lam(T_j) = v = -q^{-1}`` for ``j`` in ``J_lam``."""
    lam_t = tuple(lam)
    if j not in lambda_data(lam_t).J:
        raise ValueError(f"generator {j} is not in J_lam")
    return GroupRingElem.scalar(lam_t, LaurentQPoly.monomial(-1, -1))


def psi_X(lam: Sequence[int], weight: Sequence[int]) -> GroupRingElem:
    """``psi_lam(X^gamma) = v^{<gamma, 2 rho_lam>} zeta^gamma``."""
    lam_t = tuple(lam)
    exponent = sum(pair(weight, root) for root in positive_roots_lambda(lam_t))
    sign = -1 if exponent % 2 else 1
    return GroupRingElem.monomial(lam_t, weight_to_lambda(weight, lam_t), -exponent, sign)


def psi_lambda(lam: Sequence[int], generator: int | Sequence[int]) -> GroupRingElem:
    """``psi_lam`` on ``T_j`` (an integer) or ``X^gamma`` (a weight)."""
    if isinstance(generator, int):
        return psi_T(lam, generator)
    return psi_X(lam, generator)
