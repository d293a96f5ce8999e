"""The extended affine Hecke algebra of type A over ``Z[q, q^{-1}]``.

Elements are finite sums ``sum a_w T_w``.  The quadratic relation is
``T_s^2 = 1 + (q - q^{-1}) T_s`` and length-zero elements multiply by group
composition.  The Kazhdan-Lusztig basis ``C_w`` is computed with the
standard recursion ``C_s C_v = C_{sv} + sum_z mu(z, v) C_z`` and memoized,
optionally in a line-oriented cache file so that repeated runs are cheap.
"""

from __future__ import annotations

import os
import threading
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

from .rings import LaurentQPoly, RawPoly, poly_add_into, poly_mul_raw
from .weyl import (
    ExtAffineElement,
    compose,
    crossing_sign_fast,
    descent_left,
    descent_right,
    element_from_string,
    element_to_string,
    finite,
    identity,
    inverse,
    left_mul_simple,
    length,
    parabolic_elements,
    perm_length,
    poincare_polynomial_coeffs,
    reduced_word,
    right_mul_simple,
    sigma_exponent,
    sigma_powers,
    translation,
)

_QQ: RawPoly = {1: 1, -1: -1}
_ONE: RawPoly = {0: 1}


class FrontierError(RuntimeError):
    """A Kazhdan-Lusztig element beyond the configured length bound was requested."""


class KLCacheError(ValueError):
    """The cache file is malformed."""


# ---------------------------------------------------------------------------
# elements


def _add_term(target: dict[ExtAffineElement, RawPoly], w: ExtAffineElement, coeff: Mapping[int, int], scale: int = 1) -> None:
    entry = target.get(w)
    if entry is None:
        entry = {}
        target[w] = entry
    poly_add_into(entry, coeff, scale)
    if not entry:
        del target[w]


class HeckeElem:
    """A finite sum ``sum a_w T_w`` with ``a_w`` in ``Z[q, q^{-1}]``."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[ExtAffineElement, LaurentQPoly | int] | None = None) -> None:
        self.n = n
        raw: dict[ExtAffineElement, RawPoly] = {}
        for w, coeff in (terms or {}).items():
            if w.n != n:
                raise ValueError("Hecke element terms have the wrong rank")
            _add_term(raw, w, LaurentQPoly.coerce(coeff).raw())
        self._t = raw

    @classmethod
    def _wrap(cls, n: int, raw: dict[ExtAffineElement, RawPoly]) -> "HeckeElem":
        obj = cls.__new__(cls)
        obj.n = n
        obj._t = raw
        return obj

    @classmethod
    def zero(cls, n: int) -> "HeckeElem":
        return cls._wrap(n, {})

    @classmethod
    def one(cls, n: int) -> "HeckeElem":
        return cls.T(identity(n))

    @classmethod
    def T(cls, w: ExtAffineElement, coeff: LaurentQPoly | int = 1) -> "HeckeElem":
        return cls(w.n, {w: coeff})

    @classmethod
    def scalar(cls, n: int, coeff: LaurentQPoly | int) -> "HeckeElem":
        return cls(n, {identity(n): coeff})

    def raw(self) -> dict[ExtAffineElement, RawPoly]:
        return self._t

    def items(self) -> Iterator[tuple[ExtAffineElement, LaurentQPoly]]:
        for w in sorted(self._t, key=lambda x: (length(x), x)):
            yield w, LaurentQPoly(self._t[w])

    def coeff(self, w: ExtAffineElement) -> LaurentQPoly:
        return LaurentQPoly(self._t.get(w, {}))

    def support(self) -> list[ExtAffineElement]:
        return sorted(self._t, key=lambda x: (length(x), x))

    def is_zero(self) -> bool:
        return not self._t

    def __len__(self) -> int:
        return len(self._t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset((w, frozenset(c.items())) for w, c in self._t.items()))

    def _coerce(self, other: object) -> "HeckeElem":
        if isinstance(other, HeckeElem):
            if other.n != self.n:
                raise ValueError("Hecke elements of different rank")
            return other
        if isinstance(other, (int, LaurentQPoly)):
            return HeckeElem.scalar(self.n, other)
        raise TypeError(f"cannot combine HeckeElem with {type(other).__name__}")

    def __add__(self, other: object) -> "HeckeElem":
        other = self._coerce(other)
        out = {w: dict(c) for w, c in self._t.items()}
        for w, c in other._t.items():
            _add_term(out, w, c)
        return HeckeElem._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "HeckeElem":
        return HeckeElem._wrap(self.n, {w: {e: -c for e, c in p.items()} for w, p in self._t.items()})

    def __sub__(self, other: object) -> "HeckeElem":
        return self + (-self._coerce(other))

    def scale(self, coeff: LaurentQPoly | int) -> "HeckeElem":
        raw = LaurentQPoly.coerce(coeff).raw()
        out = {}
        for w, p in self._t.items():
            product = poly_mul_raw(p, raw)
            if product:
                out[w] = product
        return HeckeElem._wrap(self.n, out)

    def __mul__(self, other: object) -> "HeckeElem":
        if isinstance(other, (int, LaurentQPoly)):
            return self.scale(other)
        other = self._coerce(other)
        return multiply(self, other)

    def __rmul__(self, other: object) -> "HeckeElem":
        if isinstance(other, (int, LaurentQPoly)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"HeckeElem({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for w, coeff in self.items():
            parts.append(f"({coeff})*T[{element_to_string(w)}]")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# multiplication


def right_mul_T(terms: Mapping[ExtAffineElement, RawPoly], i: int) -> dict[ExtAffineElement, RawPoly]:
    """``(sum a_w T_w) T_{s_i}``."""
    out: dict[ExtAffineElement, RawPoly] = {}
    for w, a in terms.items():
        ws = right_mul_simple(w, i)
        _add_term(out, ws, a)
        if descent_right(w, i):
            _add_term(out, w, poly_mul_raw(a, _QQ))
    return out


def left_mul_T(terms: Mapping[ExtAffineElement, RawPoly], i: int) -> dict[ExtAffineElement, RawPoly]:
    """``T_{s_i} (sum a_w T_w)``."""
    out: dict[ExtAffineElement, RawPoly] = {}
    for w, a in terms.items():
        sw = left_mul_simple(w, i)
        _add_term(out, sw, a)
        if descent_left(w, i):
            _add_term(out, w, poly_mul_raw(a, _QQ))
    return out


def right_mul_pi(terms: Mapping[ExtAffineElement, RawPoly], pi: ExtAffineElement) -> dict[ExtAffineElement, RawPoly]:
    return {compose(w, pi): dict(a) for w, a in terms.items()}


def left_mul_pi(terms: Mapping[ExtAffineElement, RawPoly], pi: ExtAffineElement) -> dict[ExtAffineElement, RawPoly]:
    return {compose(pi, w): dict(a) for w, a in terms.items()}


def right_mul_T_element(h: HeckeElem, w: ExtAffineElement) -> HeckeElem:
    """``h T_w`` by the reduced word of ``w``."""
    letters, pi = reduced_word(w)
    terms: dict[ExtAffineElement, RawPoly] = h.raw()
    for i in letters:
        terms = right_mul_T(terms, i)
    return HeckeElem._wrap(h.n, right_mul_pi(terms, pi))


def multiply(h1: HeckeElem, h2: HeckeElem) -> HeckeElem:
    """Product in the T-basis: each ``T_w`` of ``h2`` acts by its reduced word."""
    out: dict[ExtAffineElement, RawPoly] = {}
    for w, b in h2.raw().items():
        partial = right_mul_T_element(h1, w)
        for v, a in partial.raw().items():
            _add_term(out, v, poly_mul_raw(a, b))
    return HeckeElem._wrap(h1.n, out)


def T_s(n: int, i: int) -> HeckeElem:
    from .weyl import simple_reflection

    return HeckeElem.T(simple_reflection(n, i))


def T_s_inverse(n: int, i: int) -> HeckeElem:
    """``T_s^{-1} = T_s - (q - q^{-1})``."""
    return T_s(n, i) - HeckeElem.scalar(n, LaurentQPoly(_QQ))


def T_sigma(n: int, power: int = 1) -> HeckeElem:
    return HeckeElem.T(sigma_powers(n)[power % (n + 1)])


# ---------------------------------------------------------------------------
# involutions and the X basis


def star(h: HeckeElem) -> HeckeElem:
    """Anti-involution ``sum a_w T_w -> sum a_w T_{w^{-1}}``."""
    return HeckeElem._wrap(h.n, {inverse(w): dict(a) for w, a in h.raw().items()})


def bar(h: HeckeElem) -> HeckeElem:
    """``sum a_w T_w -> sum bar(a_w) T_{w^{-1}}^{-1}``."""
    n = h.n
    out: dict[ExtAffineElement, RawPoly] = {}
    for w, a in h.raw().items():
        letters, pi = reduced_word(w)
        terms: dict[ExtAffineElement, RawPoly] = {identity(n): {-e: c for e, c in a.items()}}
        for i in letters:
            moved = right_mul_T(terms, i)
            for v, b in terms.items():
                _add_term(moved, v, poly_mul_raw(b, _QQ), scale=-1)
            terms = moved
        for v, b in right_mul_pi(terms, pi).items():
            _add_term(out, v, b)
    return HeckeElem._wrap(n, out)


def X_from_word(n: int, word: Sequence[int], sigma_power: int = 0) -> HeckeElem:
    """``X_w`` from any expression: ``T_s`` at positive crossings, ``T_s^{-1}`` at negative ones."""
    current = identity(n)
    terms: dict[ExtAffineElement, RawPoly] = {identity(n): dict(_ONE)}
    for i in word:
        sign = crossing_sign_fast(current, i)
        moved = right_mul_T(terms, i)
        if sign < 0:
            for v, b in terms.items():
                _add_term(moved, v, poly_mul_raw(b, _QQ), scale=-1)
        terms = moved
        current = right_mul_simple(current, i)
    terms = right_mul_pi(terms, sigma_powers(n)[sigma_power % (n + 1)])
    return HeckeElem._wrap(n, terms)


def X_w(w: ExtAffineElement) -> HeckeElem:
    letters, pi = reduced_word(w)
    return X_from_word(w.n, letters, sigma_exponent(pi))


def X_gamma(weight: Sequence[int]) -> HeckeElem:
    """``X^gamma = X_{t_gamma}``."""
    return X_w(translation(weight))


def canonical_trace(h: HeckeElem) -> LaurentQPoly:
    """``Tr(sum a_w T_w) = a_e``."""
    return h.coeff(identity(h.n))


def pairing(h1: HeckeElem, h2: HeckeElem) -> LaurentQPoly:
    """``<h1, h2> = Tr(h1 h2^*)``."""
    return canonical_trace(h1 * star(h2))


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig basis


def C_parabolic_longest(n: int, subset: Iterable[int]) -> HeckeElem:
    """``C_{w_J} = q^{-l(w_J)} sum_{w in W_J} q^{l(w)} T_w``."""
    subset = frozenset(subset)
    elements = parabolic_elements(n + 1, subset)
    top = max(perm_length(u) for u in elements)
    return HeckeElem(n, {finite(u): LaurentQPoly.monomial(perm_length(u) - top) for u in elements})


def poincare_q_squared(n: int, subset: Iterable[int]) -> LaurentQPoly:
    """``W_J(q^2)``."""
    return LaurentQPoly({2 * e: c for e, c in poincare_polynomial_coeffs(n + 1, subset).items()})


class KLCache:
    """Persistent store of Kazhdan-Lusztig polynomials ``P_{v,w}``.

    The file is UTF-8 with header ``klcache v1 n=<n>`` followed by lines
    ``v|w|e:c e:c ...`` using the element text form.  Entries are write-once.
    Reads may happen concurrently; appends are serialized by a lock.
    """

    HEADER = "klcache v1 n={n}"

    def __init__(self, n: int, path: str | os.PathLike[str] | None = None) -> None:
        self.n = n
        self.path = Path(path) if path is not None else None
        self.polys: dict[ExtAffineElement, dict[ExtAffineElement, RawPoly]] = {}
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        assert self.path is not None
        with self.path.open(encoding="utf-8") as handle:
            lines = handle.read().splitlines()
        if not lines or lines[0].strip() != self.HEADER.format(n=self.n):
            raise KLCacheError(f"{self.path}:1: expected header {self.HEADER.format(n=self.n)!r}")
        for number, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            try:
                v_text, w_text, poly_text = line.split("|")
                v = element_from_string(v_text)
                w = element_from_string(w_text)
                poly: RawPoly = {}
                for token in poly_text.split():
                    e, c = token.split(":")
                    poly[int(e)] = int(c)
            except ValueError as exc:
                raise KLCacheError(f"{self.path}:{number}: corrupt cache line {line!r}") from exc
            if v.n != self.n or w.n != self.n:
                raise KLCacheError(f"{self.path}:{number}: element of wrong rank")
            self.polys.setdefault(w, {})[v] = poly

    def get(self, w: ExtAffineElement) -> dict[ExtAffineElement, RawPoly] | None:
        return self.polys.get(w)

    def put(self, w: ExtAffineElement, column: dict[ExtAffineElement, RawPoly]) -> None:
        with self._lock:
            if w in self.polys:
                return
            self.polys[w] = column
            if self.path is None:
                return
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fresh = not self.path.exists()
            with self.path.open("a", encoding="utf-8") as handle:
                if fresh:
                    handle.write(self.HEADER.format(n=self.n) + "\n")
                for v in sorted(column):
                    poly = " ".join(f"{e}:{c}" for e, c in sorted(column[v].items()))
                    handle.write(f"{element_to_string(v)}|{element_to_string(w)}|{poly}\n")

    def stats(self) -> dict[str, int]:
        return {
            "elements": len(self.polys),
            "polynomials": sum(len(col) for col in self.polys.values()),
        }


def cache_file(cache_dir: str | os.PathLike[str], n: int) -> Path:
    return Path(cache_dir) / f"klcache-n{n}.txt"


class KLBasis:
    """Kazhdan-Lusztig elements ``C_w`` up to a length frontier.

    ``C_w - T_w`` is supported on ``v < w`` with coefficients in
    ``q^{-1} Z[q^{-1}]``; for ``w`` in the extended group, ``C_{w pi} = C_w T_pi``.
    """

    def __init__(self, n: int, max_length: int = 12, cache: KLCache | None = None) -> None:
        self.n = n
        self.max_length = max_length
        self.cache = cache if cache is not None else KLCache(n)
        self._elements: dict[ExtAffineElement, HeckeElem] = {}

    def _check(self, w: ExtAffineElement) -> None:
        if length(w) > self.max_length:
            raise FrontierError(
                f"C_w needs max-length >= {length(w)} but the frontier is {self.max_length}"
            )

    def C(self, w: ExtAffineElement) -> HeckeElem:
        if w.n != self.n:
            raise ValueError("element has the wrong rank for this KL basis")
        self._check(w)
        cached = self._elements.get(w)
        if cached is not None:
            return cached
        letters, pi = reduced_word(w)
        if sigma_exponent(pi):
            core = compose(w, inverse(pi))
            result = HeckeElem._wrap(self.n, right_mul_pi(self.C(core).raw(), pi))
        elif not letters:
            result = HeckeElem.one(self.n)
        else:
            stored = self.cache.get(w)
            if stored is not None:
                result = HeckeElem._wrap(self.n, {v: dict(p) for v, p in stored.items()})
            else:
                result = self._recursion(w, letters[0])
                self.cache.put(w, {v: dict(p) for v, p in result.raw().items()})
        self._elements[w] = result
        return result

    def _recursion(self, w: ExtAffineElement, s: int) -> HeckeElem:
        n = self.n
        v = left_mul_simple(w, s)
        C_v = self.C(v)
        # C_s C_v = T_s C_v + q^{-1} C_v
        terms = left_mul_T(C_v.raw(), s)
        for x, a in C_v.raw().items():
            _add_term(terms, x, {e - 1: c for e, c in a.items()})
        for z, p in sorted(C_v.raw().items(), key=lambda item: length(item[0])):
            if z == v or not descent_left(z, s):
                continue
            mu_value = p.get(-1, 0)
            if mu_value:
                for x, a in self.C(z).raw().items():
                    _add_term(terms, x, a, scale=-mu_value)
        return HeckeElem._wrap(n, terms)

    def P(self, v: ExtAffineElement, w: ExtAffineElement) -> LaurentQPoly:
        """Coefficient of ``T_v`` in ``C_w``."""
        return self.C(w).coeff(v)

    def mu(self, v: ExtAffineElement, w: ExtAffineElement) -> int:
        """Coefficient of ``q^{-1}`` in ``P_{v,w}``."""
        if v == w:
            return 0
        return self.P(v, w).coeff(-1)

    def expand_in_C(self, h: HeckeElem) -> dict[ExtAffineElement, LaurentQPoly]:
        """Coefficients of ``h`` in the KL basis by triangular subtraction."""
        remainder = {w: dict(a) for w, a in h.raw().items()}
        result: dict[ExtAffineElement, LaurentQPoly] = {}
        while remainder:
            top = max(remainder, key=lambda x: (length(x), x))
            coeff = remainder[top]
            result[top] = LaurentQPoly(coeff)
            for x, a in self.C(top).raw().items():
                _add_term(remainder, x, poly_mul_raw(a, coeff), scale=-1)
        return result

    def structure_constants(self, x: ExtAffineElement, y: ExtAffineElement) -> dict[ExtAffineElement, LaurentQPoly]:
        """``{z: h_{x,y,z}}`` with ``C_x C_y = sum_z h_{x,y,z} C_z``."""
        return self.expand_in_C(self.C(x) * self.C(y))

    def structure_h(self, x: ExtAffineElement, y: ExtAffineElement, z: ExtAffineElement) -> LaurentQPoly:
        return self.structure_constants(x, y).get(z, LaurentQPoly())


_BASES: dict[tuple[int, str | None], KLBasis] = {}


def kl_basis(n: int, max_length: int = 12, cache_dir: str | os.PathLike[str] | None = None) -> KLBasis:
    """Shared :class:`KLBasis` per rank and cache directory; the frontier only grows."""
    key = (n, str(cache_dir) if cache_dir is not None else None)
    basis = _BASES.get(key)
    if basis is None:
        path = cache_file(cache_dir, n) if cache_dir is not None else None
        basis = KLBasis(n, max_length, KLCache(n, path))
        _BASES[key] = basis
    elif basis.max_length < max_length:
        basis.max_length = max_length
    return basis


def kl_C(w: ExtAffineElement, max_length: int = 12, cache_dir: str | os.PathLike[str] | None = None) -> HeckeElem:
    return kl_basis(w.n, max_length, cache_dir).C(w)
