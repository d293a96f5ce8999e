"""Exact coefficient rings.

* :class:`LaurentQPoly` -- the ring ``R = Z[q, q^{-1}]``.
* :class:`GroupRingElem` -- ``R[P/Q_lam]``, written multiplicatively as
  ``zeta^gamma``; keys are lambda-weights in normal form, so torsion in
  ``P/Q_lam`` is handled structurally and no fraction field is ever formed.
* :class:`TruncatedQSeries` -- either of the above, known exactly only for
  ``q``-exponents at or above a floor; used for series expansions in ``q^{-1}``.
* :class:`RingMatrix` -- sparse square matrices over ``GroupRingElem``.

Group ring elements are stored flat as ``{(key, q_exponent): int}`` which keeps
the inner loops of matrix products cheap.
"""

from __future__ import annotations

import json
from operator import add as _add
from typing import Any, Iterable, Iterator, Mapping, Sequence, Union

from .lambda_geometry import normalize_lambda_coords

RawPoly = dict[int, int]
RawGroup = dict[tuple[tuple[int, ...], int], int]
DEFAULT_TRUNCATION = 16


# ---------------------------------------------------------------------------
# raw helpers


def poly_mul_raw(a: Mapping[int, int], b: Mapping[int, int]) -> RawPoly:
    out: RawPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_add_into(target: RawPoly, src: Mapping[int, int], scale: int = 1, shift: int = 0) -> None:
    """``target += scale * q^shift * src`` in place, dropping zeros."""
    for e, c in src.items():
        key = e + shift
        value = target.get(key, 0) + scale * c
        if value:
            target[key] = value
        else:
            target.pop(key, None)


# ---------------------------------------------------------------------------
# Laurent polynomials in q


class LaurentQPoly:
    """Element of ``Z[q, q^{-1}]`` as a sparse exponent to coefficient map."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        self._c: RawPoly = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, raw: RawPoly) -> "LaurentQPoly":
        obj = cls.__new__(cls)
        obj._c = raw
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: int) -> "LaurentQPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentQPoly":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value: "LaurentQPoly | int") -> "LaurentQPoly":
        if isinstance(value, LaurentQPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentQPoly")

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def raw(self) -> RawPoly:
        return self._c

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def deg(self) -> float | int:
        """Top exponent; ``-inf`` for zero."""
        return max(self._c) if self._c else float("-inf")

    def min_deg(self) -> float | int:
        return min(self._c) if self._c else float("inf")

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentQPoly.const(other)
        if not isinstance(other, LaurentQPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: "LaurentQPoly | int") -> "LaurentQPoly":
        other = LaurentQPoly.coerce(other)
        out = dict(self._c)
        poly_add_into(out, other._c)
        return LaurentQPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQPoly":
        return LaurentQPoly._wrap({e: -c for e, c in self._c.items()})

    def __sub__(self, other: "LaurentQPoly | int") -> "LaurentQPoly":
        return self + (-LaurentQPoly.coerce(other))

    def __rsub__(self, other: "LaurentQPoly | int") -> "LaurentQPoly":
        return LaurentQPoly.coerce(other) - self

    def __mul__(self, other: Any) -> Any:
        if isinstance(other, int):
            if other == 0:
                return LaurentQPoly()
            return LaurentQPoly._wrap({e: c * other for e, c in self._c.items()})
        if isinstance(other, LaurentQPoly):
            return LaurentQPoly._wrap(poly_mul_raw(self._c, other._c))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentQPoly":
        if exponent < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials can be inverted in Z[q, q^-1]")
            ((e, c),) = self._c.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentQPoly({-e * -exponent: c ** (-exponent)})
        result = LaurentQPoly.const(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "LaurentQPoly":
        """Multiply by ``q^k``."""
        return LaurentQPoly._wrap({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentQPoly":
        """``q -> q^{-1}``."""
        return LaurentQPoly._wrap({-e: c for e, c in self._c.items()})

    def substitute_square(self) -> "LaurentQPoly":
        """``p(q) -> p(q^2)``."""
        return LaurentQPoly._wrap({2 * e: c for e, c in self._c.items()})

    def exact_div(self, divisor: "LaurentQPoly") -> "LaurentQPoly":
        """Exact quotient; raises ``ArithmeticError`` on a nonzero remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        remainder = dict(self._c)
        top_d = max(divisor._c)
        lead_d = divisor._c[top_d]
        low_d = min(divisor._c)
        quotient: RawPoly = {}
        lowest_shift = min(self._c, default=0) - low_d
        while remainder:
            top = max(remainder)
            shift = top - top_d
            coeff, rem = divmod(remainder[top], lead_d)
            if rem or shift < lowest_shift:
                raise ArithmeticError("polynomial division is not exact")
            quotient[shift] = quotient.get(shift, 0) + coeff
            poly_add_into(remainder, divisor._c, scale=-coeff, shift=shift)
        return LaurentQPoly(quotient)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._c.items(), reverse=True)

    def __repr__(self) -> str:
        return f"LaurentQPoly({self})"

    def __str__(self) -> str:
        return render_laurent(self._c)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._c.items())}


def render_laurent(coeffs: Mapping[int, int], variable: str = "q") -> str:
    """Text rendering, e.g. ``q^2 - 3 + q^-2``."""
    if not coeffs:
        return "0"
    pieces: list[str] = []
    for exponent, coeff in sorted(coeffs.items(), reverse=True):
        if exponent == 0:
            body = str(abs(coeff))
        else:
            power = variable if exponent == 1 else f"{variable}^{exponent}"
            body = power if abs(coeff) == 1 else f"{abs(coeff)}{power}"
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(pieces)


Q = LaurentQPoly.monomial(1)
Q_INV = LaurentQPoly.monomial(-1)
V = LaurentQPoly.monomial(-1, -1)  # v = -q^{-1}
Q_MINUS_Q_INV = LaurentQPoly({1: 1, -1: -1})


def poincare_in_q_squared(coeffs: Mapping[int, int]) -> LaurentQPoly:
    """``W(q^2)`` from the coefficients of ``W(t)``."""
    return LaurentQPoly({2 * e: c for e, c in coeffs.items()})


# ---------------------------------------------------------------------------
# group rings over P/Q_lam


def _normalize_key(lam: tuple[int, ...], key: tuple[int, ...]) -> tuple[int, ...]:
    shift = key[-1] // lam[-1]
    if shift:
        return tuple(x - shift * p for x, p in zip(key, lam))
    return key


def group_mul_raw(lam: tuple[int, ...], a: RawGroup, b: RawGroup) -> RawGroup:
    out: RawGroup = {}
    last = lam[-1]
    for (ka, ea), ca in a.items():
        for (kb, eb), cb in b.items():
            key = tuple(map(_add, ka, kb))
            shift = key[-1] // last
            if shift:
                key = tuple(x - shift * p for x, p in zip(key, lam))
            full = (key, ea + eb)
            value = out.get(full, 0) + ca * cb
            if value:
                out[full] = value
            else:
                del out[full]
    return out


def group_add_into(target: RawGroup, src: RawGroup, scale: int = 1) -> None:
    for key, c in src.items():
        value = target.get(key, 0) + scale * c
        if value:
            target[key] = value
        else:
            target.pop(key, None)


class GroupRingElem:
    """Element of ``R[zeta_lam]``: a finite sum of ``c q^e zeta^gamma``."""

    __slots__ = ("lam", "_t")

    def __init__(self, lam: Sequence[int], terms: Mapping[tuple[tuple[int, ...], int], int] | None = None) -> None:
        self.lam = tuple(lam)
        raw: RawGroup = {}
        for (key, e), c in (terms or {}).items():
            if not c:
                continue
            if len(key) != len(self.lam):
                raise ValueError("zeta exponent has wrong number of coordinates")
            full = (normalize_lambda_coords(self.lam, tuple(key)), int(e))
            raw[full] = raw.get(full, 0) + int(c)
        self._t = {k: c for k, c in raw.items() if c}

    @classmethod
    def _wrap(cls, lam: tuple[int, ...], raw: RawGroup) -> "GroupRingElem":
        obj = cls.__new__(cls)
        obj.lam = lam
        obj._t = raw
        return obj

    @classmethod
    def zero(cls, lam: Sequence[int]) -> "GroupRingElem":
        return cls._wrap(tuple(lam), {})

    @classmethod
    def one(cls, lam: Sequence[int]) -> "GroupRingElem":
        return cls.monomial(lam, (0,) * len(lam))

    @classmethod
    def monomial(cls, lam: Sequence[int], key: Sequence[int], exponent: int = 0, coeff: int = 1) -> "GroupRingElem":
        return cls(lam, {(tuple(key), exponent): coeff})

    @classmethod
    def scalar(cls, lam: Sequence[int], poly: LaurentQPoly | int) -> "GroupRingElem":
        poly = LaurentQPoly.coerce(poly)
        zero_key = (0,) * len(lam)
        return cls._wrap(tuple(lam), {(zero_key, e): c for e, c in poly.raw().items()})

    @classmethod
    def from_coefficients(cls, lam: Sequence[int], coefficients: Mapping[tuple[int, ...], LaurentQPoly | int]) -> "GroupRingElem":
        terms: dict[tuple[tuple[int, ...], int], int] = {}
        for key, poly in coefficients.items():
            for e, c in LaurentQPoly.coerce(poly).raw().items():
                terms[(tuple(key), e)] = terms.get((tuple(key), e), 0) + c
        return cls(lam, terms)

    def raw(self) -> RawGroup:
        return self._t

    def _check(self, other: "GroupRingElem") -> None:
        if other.lam != self.lam:
            raise ValueError(f"group rings for different partitions: {self.lam} vs {other.lam}")

    def _coerce(self, other: Any) -> "GroupRingElem":
        if isinstance(other, GroupRingElem):
            self._check(other)
            return other
        if isinstance(other, (int, LaurentQPoly)):
            return GroupRingElem.scalar(self.lam, other)
        raise TypeError(f"cannot combine GroupRingElem with {type(other).__name__}")

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentQPoly)):
            other = GroupRingElem.scalar(self.lam, other)
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.lam == other.lam and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.lam, frozenset(self._t.items())))

    def __add__(self, other: Any) -> "GroupRingElem":
        other = self._coerce(other)
        out = dict(self._t)
        group_add_into(out, other._t)
        return GroupRingElem._wrap(self.lam, out)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem._wrap(self.lam, {k: -c for k, c in self._t.items()})

    def __sub__(self, other: Any) -> "GroupRingElem":
        other = self._coerce(other)
        out = dict(self._t)
        group_add_into(out, other._t, scale=-1)
        return GroupRingElem._wrap(self.lam, out)

    def __rsub__(self, other: Any) -> "GroupRingElem":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "GroupRingElem":
        if isinstance(other, int):
            if other == 0:
                return GroupRingElem.zero(self.lam)
            return GroupRingElem._wrap(self.lam, {k: c * other for k, c in self._t.items()})
        other = self._coerce(other)
        return GroupRingElem._wrap(self.lam, group_mul_raw(self.lam, self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GroupRingElem":
        if exponent < 0:
            raise ValueError("negative powers are only defined for monomials; use conj")
        result = GroupRingElem.one(self.lam)
        for _ in range(exponent):
            result = result * self
        return result

    def shift_q(self, k: int) -> "GroupRingElem":
        return GroupRingElem._wrap(self.lam, {(key, e + k): c for (key, e), c in self._t.items()})

    def bar(self) -> "GroupRingElem":
        """``q -> q^{-1}``, ``zeta`` fixed."""
        return GroupRingElem._wrap(self.lam, {(key, -e): c for (key, e), c in self._t.items()})

    def conj(self) -> "GroupRingElem":
        """``zeta^gamma -> zeta^{-gamma}``, coefficients fixed."""
        lam = self.lam
        return GroupRingElem._wrap(
            lam,
            {(_normalize_key(lam, tuple(-x for x in key)), e): c for (key, e), c in self._t.items()},
        )

    def act_rows(self, row_perm: Sequence[int]) -> "GroupRingElem":
        """Permute the ``e~_k`` by a row permutation (the ``G_lam`` action)."""
        lam = self.lam
        out: RawGroup = {}
        for (key, e), c in self._t.items():
            moved = [0] * len(key)
            for k, value in enumerate(key):
                moved[row_perm[k] - 1] = value
            full = (_normalize_key(lam, tuple(moved)), e)
            out[full] = out.get(full, 0) + c
        return GroupRingElem._wrap(lam, {k: c for k, c in out.items() if c})

    def coefficient(self, key: Sequence[int]) -> LaurentQPoly:
        target = normalize_lambda_coords(self.lam, tuple(key))
        return LaurentQPoly({e: c for (k, e), c in self._t.items() if k == target})

    def coefficients(self) -> dict[tuple[int, ...], LaurentQPoly]:
        grouped: dict[tuple[int, ...], RawPoly] = {}
        for (key, e), c in self._t.items():
            grouped.setdefault(key, {})[e] = c
        return {k: LaurentQPoly(v) for k, v in sorted(grouped.items())}

    def zeta_support(self) -> list[tuple[int, ...]]:
        return sorted({key for key, _e in self._t})

    def constant_term(self) -> LaurentQPoly:
        """Coefficient of ``zeta^0``."""
        return self.coefficient((0,) * len(self.lam))

    def q_degree(self) -> float | int:
        return max((e for _k, e in self._t), default=float("-inf"))

    def q_min_degree(self) -> float | int:
        return min((e for _k, e in self._t), default=float("inf"))

    def sp0(self) -> "GroupRingElem":
        """Specialize ``q^{-1} = 0``; positive ``q``-degree is an error."""
        if any(e > 0 for _k, e in self._t):
            raise ValueError("sp0 undefined: element has positive q-degree")
        return GroupRingElem._wrap(self.lam, {(k, e): c for (k, e), c in self._t.items() if e == 0})

    def drop_below(self, floor: int) -> "GroupRingElem":
        return GroupRingElem._wrap(self.lam, {(k, e): c for (k, e), c in self._t.items() if e >= floor})

    def integer_terms(self) -> dict[tuple[int, ...], int]:
        """For ``q``-free elements: ``{key: coefficient}``."""
        if any(e != 0 for _k, e in self._t):
            raise ValueError("element is not q-free")
        return {k: c for (k, _e), c in self._t.items()}

    def is_monomial_times(self) -> tuple[tuple[int, ...], int] | None:
        """``(key, sign)`` if the element is ``+-zeta^key``, else ``None``."""
        if len(self._t) != 1:
            return None
        ((key, e), c), = self._t.items()
        if e != 0 or c not in (1, -1):
            return None
        return key, c

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"zeta": list(key), "q": e, "c": c}
            for (key, e), c in sorted(self._t.items())
        ]

    @classmethod
    def from_json(cls, lam: Sequence[int], data: Iterable[Mapping[str, Any]]) -> "GroupRingElem":
        terms: dict[tuple[tuple[int, ...], int], int] = {}
        for item in data:
            key = (tuple(int(x) for x in item["zeta"]), int(item["q"]))
            terms[key] = terms.get(key, 0) + int(item["c"])
        return cls(lam, terms)

    def __repr__(self) -> str:
        return f"GroupRingElem({self.lam}, {self})"

    def __str__(self) -> str:
        return render_group(self)


def render_zeta(key: Sequence[int]) -> str:
    parts = []
    for k, exponent in enumerate(key, start=1):
        if exponent == 0:
            continue
        parts.append(f"z{k}" if exponent == 1 else f"z{k}^{exponent}")
    return "*".join(parts)


def render_group(elem: GroupRingElem) -> str:
    if elem.is_zero():
        return "0"
    pieces = []
    for key, poly in elem.coefficients().items():
        mono = render_zeta(key)
        text = str(poly)
        if not mono:
            pieces.append(f"({text})" if len(poly.raw()) > 1 else text)
        elif poly == 1:
            pieces.append(mono)
        elif poly == -1:
            pieces.append(f"-{mono}")
        else:
            pieces.append(f"({text})*{mono}")
    return " + ".join(pieces)


# ---------------------------------------------------------------------------
# truncated series


SeriesValue = Union[LaurentQPoly, GroupRingElem]


class TruncatedQSeries:
    """A series in ``q^{-1}`` known exactly for exponents ``>= floor``.

    ``floor = None`` marks an exact (polynomial) value.  Products propagate
    the floor: if ``A`` is exact from ``f_A`` with top degree ``t_A`` (and
    likewise ``B``), then ``AB`` is exact from ``max(f_A + t_B, f_B + t_A)``.
    """

    __slots__ = ("value", "floor")

    def __init__(self, value: SeriesValue, floor: int | None) -> None:
        if floor is not None:
            value = _drop_below(value, floor)
        self.value = value
        self.floor = floor

    @classmethod
    def exact(cls, value: SeriesValue) -> "TruncatedQSeries":
        return cls(value, None)

    def top_degree(self) -> float | int:
        if isinstance(self.value, LaurentQPoly):
            return self.value.deg()
        return self.value.q_degree()

    def __mul__(self, other: "TruncatedQSeries") -> "TruncatedQSeries":
        floors = []
        if self.floor is not None:
            floors.append(self.floor + other.top_degree())
        if other.floor is not None:
            floors.append(other.floor + self.top_degree())
        finite_floors = [f for f in floors if f != float("-inf")]
        floor = int(max(finite_floors)) if finite_floors else None
        if floor is None and floors:
            floor = None  # a zero factor makes the product exactly zero
        return TruncatedQSeries(_multiply_values(self.value, other.value, floor), floor)

    def __add__(self, other: "TruncatedQSeries") -> "TruncatedQSeries":
        floors = [f for f in (self.floor, other.floor) if f is not None]
        floor = max(floors) if floors else None
        return TruncatedQSeries(self.value + other.value, floor)

    def truncate(self, floor: int) -> "TruncatedQSeries":
        if self.floor is not None and self.floor > floor:
            raise ValueError(f"series only known down to q^{self.floor}, cannot truncate at q^{floor}")
        return TruncatedQSeries(self.value, floor)

    def __repr__(self) -> str:
        suffix = "" if self.floor is None else f" + O(q^{self.floor - 1})"
        return f"TruncatedQSeries({self.value}{suffix})"


def _drop_below(value: SeriesValue, floor: int) -> SeriesValue:
    if isinstance(value, LaurentQPoly):
        return LaurentQPoly._wrap({e: c for e, c in value.raw().items() if e >= floor})
    return value.drop_below(floor)


def _multiply_values(a: SeriesValue, b: SeriesValue, floor: int | None) -> SeriesValue:
    """Product that skips term pairs landing below ``floor``."""
    if floor is None:
        return a * b
    if isinstance(a, LaurentQPoly) and isinstance(b, LaurentQPoly):
        out: RawPoly = {}
        for ea, ca in a.raw().items():
            for eb, cb in b.raw().items():
                e = ea + eb
                if e >= floor:
                    out[e] = out.get(e, 0) + ca * cb
        return LaurentQPoly(out)
    if isinstance(a, LaurentQPoly):
        a, b = b, a
    if isinstance(b, LaurentQPoly):
        b = GroupRingElem.scalar(a.lam, b)
    assert isinstance(a, GroupRingElem) and isinstance(b, GroupRingElem)
    a._check(b)
    lam = a.lam
    last = lam[-1]
    out_g: RawGroup = {}
    b_items = sorted(b.raw().items(), key=lambda item: -item[0][1])
    for (ka, ea), ca in a.raw().items():
        for (kb, eb), cb in b_items:
            e = ea + eb
            if e < floor:
                break
            key = tuple(map(_add, ka, kb))
            shift = key[-1] // last
            if shift:
                key = tuple(x - shift * p for x, p in zip(key, lam))
            full = (key, e)
            out_g[full] = out_g.get(full, 0) + ca * cb
    return GroupRingElem._wrap(lam, {k: c for k, c in out_g.items() if c})


def expand_inverse_factor(
    lam: Sequence[int], exponent: int, i: int, j: int, truncation: int = DEFAULT_TRUNCATION, invert_zeta: bool = False
) -> TruncatedQSeries:
    """``1 / (1 - v^m z_i^{-1} z_j) = sum_{r >= 0} v^{m r} z_i^{-r} z_j^r``.

    Terms of ``q``-degree below ``-truncation`` are discarded.  With
    ``invert_zeta`` the expansion is for ``z_i z_j^{-1}`` instead.
    """
    if exponent <= 0:
        raise ValueError("expansion exponent must be positive (wrong factor orientation)")
    lam_t = tuple(lam)
    terms: dict[tuple[tuple[int, ...], int], int] = {}
    r = 0
    while exponent * r <= truncation:
        key = [0] * len(lam_t)
        sign = -1 if invert_zeta else 1
        key[i - 1] -= sign * r
        key[j - 1] += sign * r
        coeff = (-1) ** ((exponent * r) % 2)
        full = (tuple(key), -exponent * r)
        terms[full] = terms.get(full, 0) + coeff
        r += 1
    return TruncatedQSeries(GroupRingElem(lam_t, terms), -truncation)


def geometric_series_q(step: int, truncation: int) -> TruncatedQSeries:
    """``1 / (1 - q^{-step}) = sum_r q^{-step r}`` truncated below ``-truncation``."""
    if step <= 0:
        raise ValueError("step must be positive")
    return TruncatedQSeries(
        LaurentQPoly({-step * r: 1 for r in range(truncation // step + 1)}), -truncation
    )


# ---------------------------------------------------------------------------
# matrices over the group ring


class RingMatrix:
    """Sparse ``size x size`` matrix with :class:`GroupRingElem` entries.

    Rows are dictionaries ``column -> raw group ring element``.
    """

    __slots__ = ("lam", "size", "rows")

    def __init__(self, lam: Sequence[int], size: int, rows: list[dict[int, RawGroup]] | None = None) -> None:
        self.lam = tuple(lam)
        self.size = size
        self.rows: list[dict[int, RawGroup]] = rows if rows is not None else [{} for _ in range(size)]

    @classmethod
    def identity(cls, lam: Sequence[int], size: int) -> "RingMatrix":
        zero_key = (0,) * len(lam)
        return cls(lam, size, [{i: {(zero_key, 0): 1}} for i in range(size)])

    @classmethod
    def from_entries(cls, lam: Sequence[int], size: int, entries: Mapping[tuple[int, int], GroupRingElem]) -> "RingMatrix":
        matrix = cls(lam, size)
        for (i, j), value in entries.items():
            if value:
                matrix.rows[i][j] = dict(value.raw())
        return matrix

    def copy(self) -> "RingMatrix":
        return RingMatrix(self.lam, self.size, [{j: dict(v) for j, v in row.items()} for row in self.rows])

    def entry(self, i: int, j: int) -> GroupRingElem:
        return GroupRingElem._wrap(self.lam, dict(self.rows[i].get(j, {})))

    def set_entry(self, i: int, j: int, value: GroupRingElem) -> None:
        if value.is_zero():
            self.rows[i].pop(j, None)
        else:
            self.rows[i][j] = dict(value.raw())

    def nonzero_entries(self) -> Iterator[tuple[int, int, GroupRingElem]]:
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                yield i, j, GroupRingElem._wrap(self.lam, row[j])

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.lam == other.lam and self.size == other.size and self.rows == other.rows

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if other.lam != self.lam or other.size != self.size:
            raise ValueError("matrix shapes or partitions differ")
        lam = self.lam
        out_rows: list[dict[int, RawGroup]] = []
        other_rows = other.rows
        for row in self.rows:
            acc: dict[int, RawGroup] = {}
            for k, left in row.items():
                for j, right in other_rows[k].items():
                    target = acc.get(j)
                    product = group_mul_raw(lam, left, right)
                    if target is None:
                        acc[j] = product
                    else:
                        group_add_into(target, product)
            out_rows.append({j: v for j, v in acc.items() if v})
        return RingMatrix(lam, self.size, out_rows)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        out = self.copy()
        for i, row in enumerate(other.rows):
            for j, value in row.items():
                target = out.rows[i].setdefault(j, {})
                group_add_into(target, value)
                if not target:
                    del out.rows[i][j]
        return out

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + other.scale(-1)

    def scale(self, factor: GroupRingElem | LaurentQPoly | int) -> "RingMatrix":
        if isinstance(factor, int):
            return RingMatrix(self.lam, self.size, [{j: {k: c * factor for k, c in v.items()} for j, v in row.items()} for row in self.rows] if factor else None)
        if isinstance(factor, LaurentQPoly):
            factor = GroupRingElem.scalar(self.lam, factor)
        raw = factor.raw()
        rows = []
        for row in self.rows:
            new_row = {}
            for j, v in row.items():
                product = group_mul_raw(self.lam, v, raw)
                if product:
                    new_row[j] = product
            rows.append(new_row)
        return RingMatrix(self.lam, self.size, rows)

    def trace(self) -> GroupRingElem:
        out: RawGroup = {}
        for i, row in enumerate(self.rows):
            if i in row:
                group_add_into(out, row[i])
        return GroupRingElem._wrap(self.lam, out)

    def conj_transpose(self) -> "RingMatrix":
        out = RingMatrix(self.lam, self.size)
        for i, row in enumerate(self.rows):
            for j, value in row.items():
                out.rows[j][i] = dict(GroupRingElem._wrap(self.lam, value).conj().raw())
        return out

    def bar(self) -> "RingMatrix":
        return RingMatrix(self.lam, self.size, [{j: {(k, -e): c for (k, e), c in v.items()} for j, v in row.items()} for row in self.rows])

    def q_degree(self) -> float | int:
        return max((e for row in self.rows for v in row.values() for (_k, e) in v), default=float("-inf"))

    def shift_q(self, k: int) -> "RingMatrix":
        return RingMatrix(self.lam, self.size, [{j: {(key, e + k): c for (key, e), c in v.items()} for j, v in row.items()} for row in self.rows])

    def sp0(self) -> "RingMatrix":
        """Entrywise specialization at ``q^{-1} = 0``."""
        rows = []
        for row in self.rows:
            new_row = {}
            for j, v in row.items():
                if any(e > 0 for (_k, e) in v):
                    raise ValueError("sp0 undefined: matrix entry has positive q-degree")
                kept = {(k, e): c for (k, e), c in v.items() if e == 0}
                if kept:
                    new_row[j] = kept
            rows.append(new_row)
        return RingMatrix(self.lam, self.size, rows)

    def support(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows) for j in sorted(row)]

    def to_json(self, basis: Sequence[str], n: int, invariant: bool = False) -> dict[str, Any]:
        entries = []
        for i, j, value in self.nonzero_entries():
            val: Any = value.to_json()
            entries.append({"row": i, "col": j, "val": val})
        payload: dict[str, Any] = {
            "n": n,
            "lambda": list(self.lam),
            "basis": list(basis),
            "entries": entries,
        }
        if invariant:
            payload["invariant"] = True
        return payload

    def to_text(self, labels: Sequence[str]) -> str:
        lines = []
        for i, j, value in self.nonzero_entries():
            lines.append(f"[{labels[i]}, {labels[j]}] = {value}")
        return "\n".join(lines) if lines else "0"


def dumps(payload: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)
