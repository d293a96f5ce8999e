"""Extended affine Weyl group of type A~_n.

Elements are pairs ``(wt, lin)`` standing for ``t_wt * lin`` where ``wt`` is a
weight of the lattice ``P = Z^{n+1} / Z(1, ..., 1)`` and ``lin`` is a
permutation of ``{1, ..., n+1}`` in one-line notation.  The finite Weyl group
acts by ``w e_i = e_{w(i)}``.

Weights are stored as integer tuples in normal form (last coordinate zero).
Alcove geometry is decided with exact integer arithmetic: the barycenter of
the fundamental alcove is scaled by ``n + 1`` so that every pairing with a root
is an integer.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, NamedTuple, Sequence

Permutation = tuple[int, ...]
Weight = tuple[int, ...]


class Root(NamedTuple):
    """The root ``e_i - e_j`` (1-based indices, ``i != j``)."""

    i: int
    j: int

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def negate(self) -> "Root":
        return Root(self.j, self.i)


# ---------------------------------------------------------------------------
# permutations


def identity_perm(rank: int) -> Permutation:
    """Identity of the symmetric group on ``rank`` letters."""
    return tuple(range(1, rank + 1))


def check_perm(images: Sequence[int]) -> Permutation:
    perm = tuple(int(x) for x in images)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation in one-line notation: {images!r}")
    return perm


def perm_mul(u: Permutation, v: Permutation) -> Permutation:
    """Composition ``u v`` (apply ``v`` first)."""
    return tuple(u[x - 1] for x in v)


def perm_inv(u: Permutation) -> Permutation:
    out = [0] * len(u)
    for pos, val in enumerate(u, start=1):
        out[val - 1] = pos
    return tuple(out)


def perm_length(u: Permutation) -> int:
    """Number of inversions."""
    count = 0
    size = len(u)
    for a in range(size):
        ua = u[a]
        for b in range(a + 1, size):
            if ua > u[b]:
                count += 1
    return count


def simple_transposition(rank: int, i: int) -> Permutation:
    """The permutation ``s_i`` swapping ``i`` and ``i + 1``."""
    images = list(range(1, rank + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def transposition(rank: int, a: int, b: int) -> Permutation:
    images = list(range(1, rank + 1))
    images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    return tuple(images)


def perm_from_word(rank: int, word: Iterable[int]) -> Permutation:
    """Product ``s_{i_1} ... s_{i_k}`` of finite simple transpositions."""
    perm = identity_perm(rank)
    for i in word:
        perm = perm_mul(perm, simple_transposition(rank, i))
    return perm


def perm_reduced_word(u: Permutation) -> list[int]:
    """Reduced word peeling the smallest left descent first."""
    word: list[int] = []
    current = list(u)
    rank = len(u)
    inverse = perm_inv(tuple(current))
    while True:
        # left descent s_i: u^{-1}(i) > u^{-1}(i + 1)
        for i in range(1, rank):
            if inverse[i - 1] > inverse[i]:
                word.append(i)
                current = [i + 1 if x == i else i if x == i + 1 else x for x in current]
                inverse = perm_inv(tuple(current))
                break
        else:
            return word


def act_on_root(u: Permutation, root: Root) -> Root:
    return Root(u[root.i - 1], u[root.j - 1])


def inversion_set(u: Permutation) -> frozenset[Root]:
    """``Phi(u) = {alpha > 0 : u^{-1} alpha < 0}``."""
    inverse = perm_inv(u)
    rank = len(u)
    return frozenset(
        Root(a, b)
        for a in range(1, rank + 1)
        for b in range(a + 1, rank + 1)
        if inverse[a - 1] > inverse[b - 1]
    )


def perm_from_inversion_set(rank: int, inversions: Iterable[Root]) -> Permutation:
    """The unique permutation ``x`` with ``Phi(x)`` equal to ``inversions``.

    Raises ``ValueError`` if the set is not the inversion set of any
    permutation.
    """
    inv = {(r.i, r.j) for r in inversions}
    inverse_images = []
    for a in range(1, rank + 1):
        above = sum(1 for b in range(a + 1, rank + 1) if (a, b) in inv)
        below = sum(1 for b in range(1, a) if (b, a) not in inv)
        inverse_images.append(1 + above + below)
    try:
        x_inverse = check_perm(inverse_images)
    except ValueError as exc:
        raise ValueError("root set is not an inversion set") from exc
    x = perm_inv(x_inverse)
    if inversion_set(x) != frozenset(Root(a, b) for a, b in inv):
        raise ValueError("root set is not an inversion set")
    return x


def longest_element(rank: int, subset: Iterable[int]) -> Permutation:
    """Longest element ``w_J`` of the standard parabolic subgroup ``W_J``."""
    chosen = set(subset)
    images = list(range(1, rank + 1))
    start = 1
    while start <= rank:
        end = start
        while end in chosen:
            end += 1
        images[start - 1 : end] = list(range(end, start - 1, -1))
        start = end + 1
    return tuple(images)


def parabolic_elements(rank: int, subset: Iterable[int]) -> list[Permutation]:
    """All elements of ``W_J`` (permutations preserving the ``J``-blocks)."""
    chosen = set(subset)
    blocks: list[list[int]] = []
    start = 1
    while start <= rank:
        end = start
        while end in chosen:
            end += 1
        blocks.append(list(range(start, end + 1)))
        start = end + 1
    result: list[Permutation] = [identity_perm(rank)]
    for block in blocks:
        if len(block) == 1:
            continue
        extended = []
        for base in result:
            for arrangement in permutations(block):
                images = list(base)
                for src, dst in zip(block, arrangement):
                    images[src - 1] = dst
                extended.append(tuple(images))
        result = extended
    return sorted(result, key=lambda p: (perm_length(p), p))


def poincare_polynomial_coeffs(rank: int, subset: Iterable[int]) -> dict[int, int]:
    """Coefficients of ``W_J(t) = sum_{w in W_J} t^{l(w)}``."""
    coeffs: dict[int, int] = {}
    for w in parabolic_elements(rank, subset):
        length = perm_length(w)
        coeffs[length] = coeffs.get(length, 0) + 1
    return coeffs


# ---------------------------------------------------------------------------
# weights and roots


def normalize_weight(coeffs: Sequence[int]) -> Weight:
    """Normal form in ``P``: subtract a multiple of ``(1, ..., 1)``."""
    last = coeffs[-1]
    if last == 0:
        return tuple(coeffs)
    return tuple(c - last for c in coeffs)


def unit_weight(rank: int, i: int) -> Weight:
    """``e_i`` in normal form."""
    coeffs = [0] * rank
    coeffs[i - 1] = 1
    return normalize_weight(coeffs)


def fundamental_weight(rank: int, i: int) -> Weight:
    """``omega_i = e_1 + ... + e_i``."""
    return normalize_weight([1] * i + [0] * (rank - i))


def root_as_weight(rank: int, root: Root) -> Weight:
    coeffs = [0] * rank
    coeffs[root.i - 1] += 1
    coeffs[root.j - 1] -= 1
    return normalize_weight(coeffs)


def pair(weight: Sequence[int], root: Root) -> int:
    """``<weight, e_i - e_j> = weight_i - weight_j``."""
    return weight[root.i - 1] - weight[root.j - 1]


def weight_add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return normalize_weight([x + y for x, y in zip(a, b)])


def weight_neg(a: Sequence[int]) -> Weight:
    return normalize_weight([-x for x in a])


def act_on_weight(u: Permutation, weight: Sequence[int]) -> Weight:
    """``u . sum a_i e_i = sum a_i e_{u(i)}``."""
    out = [0] * len(weight)
    for i, coeff in enumerate(weight):
        out[u[i] - 1] = coeff
    return normalize_weight(out)


def positive_roots(rank: int) -> list[Root]:
    return [Root(a, b) for a in range(1, rank + 1) for b in range(a + 1, rank + 1)]


def simple_root(i: int) -> Root:
    return Root(i, i + 1)


def highest_root(rank: int) -> Root:
    return Root(1, rank)


def is_in_root_lattice(weight: Sequence[int]) -> bool:
    """Membership of ``Q``: coordinate sum divisible by ``n + 1``."""
    return sum(weight) % len(weight) == 0


def is_in_positive_root_cone(weight: Sequence[int]) -> bool:
    """Membership of ``Q_+`` (non-negative integer span of simple roots)."""
    rank = len(weight)
    total = sum(weight)
    if total % rank:
        return False
    shift = total // rank
    running = 0
    for coeff in weight[:-1]:
        running += coeff - shift
        if running < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# the extended affine Weyl group


class ExtAffineElement(NamedTuple):
    """The element ``t_wt * lin`` of the extended affine Weyl group."""

    wt: Weight
    lin: Permutation

    @property
    def rank(self) -> int:
        return len(self.lin)

    @property
    def n(self) -> int:
        return len(self.lin) - 1

    def __mul__(self, other: "ExtAffineElement") -> "ExtAffineElement":  # type: ignore[override]
        return compose(self, other)

    def inverse(self) -> "ExtAffineElement":
        return inverse(self)

    def length(self) -> int:
        return length(self)

    def __str__(self) -> str:
        return element_to_string(self)


def identity(n: int) -> ExtAffineElement:
    return ExtAffineElement((0,) * (n + 1), identity_perm(n + 1))


def translation(weight: Sequence[int]) -> ExtAffineElement:
    return ExtAffineElement(normalize_weight(weight), identity_perm(len(weight)))


def finite(u: Sequence[int]) -> ExtAffineElement:
    perm = check_perm(u)
    return ExtAffineElement((0,) * len(perm), perm)


def compose(a: ExtAffineElement, b: ExtAffineElement) -> ExtAffineElement:
    """Group law ``(g1, u1)(g2, u2) = (g1 + u1 g2, u1 u2)``."""
    ua = a.lin
    if len(ua) != len(b.lin):
        raise ValueError("elements of different rank")
    moved = [0] * len(ua)
    for i, coeff in enumerate(b.wt):
        moved[ua[i] - 1] = coeff
    return ExtAffineElement(
        normalize_weight([x + y for x, y in zip(a.wt, moved)]),
        tuple(ua[x - 1] for x in b.lin),
    )


def inverse(a: ExtAffineElement) -> ExtAffineElement:
    """``(t_g u)^{-1} = t_{-u^{-1} g} u^{-1}``."""
    u_inv = perm_inv(a.lin)
    return ExtAffineElement(weight_neg(act_on_weight(u_inv, a.wt)), u_inv)


@lru_cache(maxsize=None)
def simple_reflection(n: int, i: int) -> ExtAffineElement:
    """``s_i`` for ``1 <= i <= n``; ``s_0 = t_phi s_phi`` for the highest root."""
    rank = n + 1
    if i == 0:
        phi = highest_root(rank)
        return ExtAffineElement(root_as_weight(rank, phi), transposition(rank, 1, rank))
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 0..{n}")
    return ExtAffineElement((0,) * rank, simple_transposition(rank, i))


_LENGTH_CACHE: dict[ExtAffineElement, int] = {}


def length(w: ExtAffineElement) -> int:
    """``l(t_g u) = sum_{a > 0} |<g, a> - chi^-(u^{-1} a)|``."""
    cached = _LENGTH_CACHE.get(w)
    if cached is not None:
        return cached
    wt, lin = w
    inverse_lin = perm_inv(lin)
    rank = len(lin)
    total = 0
    for a in range(rank):
        wa = wt[a]
        ia = inverse_lin[a]
        for b in range(a + 1, rank):
            value = wa - wt[b]
            if ia > inverse_lin[b]:
                value -= 1
            total += value if value >= 0 else -value
    if len(_LENGTH_CACHE) > 2_000_000:
        _LENGTH_CACHE.clear()
    _LENGTH_CACHE[w] = total
    return total


def right_mul_simple(w: ExtAffineElement, i: int) -> ExtAffineElement:
    """``w s_i`` without building ``s_i`` (hot path)."""
    wt, lin = w
    if i == 0:
        return compose(w, simple_reflection(len(lin) - 1, 0))
    images = list(lin)
    images[i - 1], images[i] = images[i], images[i - 1]
    return ExtAffineElement(wt, tuple(images))


def left_mul_simple(w: ExtAffineElement, i: int) -> ExtAffineElement:
    """``s_i w`` without building ``s_i`` (hot path)."""
    wt, lin = w
    if i == 0:
        return compose(simple_reflection(len(lin) - 1, 0), w)
    coeffs = list(wt)
    coeffs[i - 1], coeffs[i] = coeffs[i], coeffs[i - 1]
    swap = {i: i + 1, i + 1: i}
    return ExtAffineElement(
        normalize_weight(coeffs), tuple(swap.get(x, x) for x in lin)
    )


def descent_right_fast(w: ExtAffineElement, i: int) -> bool:
    """Right descent test for ``i >= 1`` from weight and permutation data.

    ``l(t_g u s_i) < l(t_g u)`` iff ``<u^{-1} g, a_i> >= 0`` with
    ``u a_i < 0`` in the boundary case.
    """
    wt, lin = w
    value = wt[lin[i - 1] - 1] - wt[lin[i] - 1]
    if value != 0:
        return value > 0
    return lin[i - 1] > lin[i]


def descent_left_fast(w: ExtAffineElement, i: int) -> bool:
    """Left descent test for ``i >= 1``.

    ``l(s_i t_g u) < l(t_g u)`` iff ``<g, a_i> <= 0`` with ``u^{-1} a_i < 0``
    in the boundary case.
    """
    wt, lin = w
    value = wt[i - 1] - wt[i]
    if value != 0:
        return value < 0
    inverse_lin = perm_inv(lin)
    return inverse_lin[i - 1] > inverse_lin[i]


def descent_right(w: ExtAffineElement, i: int) -> bool:
    """True iff ``l(w s_i) = l(w) - 1``."""
    if i >= 1:
        return descent_right_fast(w, i)
    return length(right_mul_simple(w, 0)) < length(w)


def descent_left(w: ExtAffineElement, i: int) -> bool:
    """True iff ``l(s_i w) = l(w) - 1``."""
    if i >= 1:
        return descent_left_fast(w, i)
    return length(left_mul_simple(w, 0)) < length(w)


def descent_right_by_length(w: ExtAffineElement, i: int) -> bool:
    return length(right_mul_simple(w, i)) < length(w)


def descent_left_by_length(w: ExtAffineElement, i: int) -> bool:
    return length(left_mul_simple(w, i)) < length(w)


@lru_cache(maxsize=None)
def sigma(n: int) -> ExtAffineElement:
    """The length-zero element with translation part ``omega_1`` modulo ``Q``.

    Found by searching the finite parts ``u`` for which ``t_{omega_1} u`` has
    length zero.
    """
    rank = n + 1
    omega = fundamental_weight(rank, 1)
    hits = [
        ExtAffineElement(omega, perm)
        for perm in permutations(range(1, rank + 1))
        if length(ExtAffineElement(omega, perm)) == 0
    ]
    if len(hits) != 1:
        raise RuntimeError("length-zero element with translation omega_1 is not unique")
    return hits[0]


@lru_cache(maxsize=None)
def sigma_powers(n: int) -> tuple[ExtAffineElement, ...]:
    """``(sigma^0, ..., sigma^n)``; these are all the length-zero elements."""
    powers = [identity(n)]
    for _ in range(n):
        powers.append(compose(powers[-1], sigma(n)))
    return tuple(powers)


def sigma_exponent(pi: ExtAffineElement) -> int:
    """The ``k`` with ``pi = sigma^k`` for a length-zero element ``pi``."""
    powers = sigma_powers(pi.n)
    try:
        return powers.index(pi)
    except ValueError as exc:
        raise ValueError(f"{element_to_string(pi)} has nonzero length") from exc


def conjugate_generator_index(n: int, k: int, i: int) -> int:
    """Index ``j`` with ``sigma^k s_i sigma^{-k} = s_j``."""
    return (i + k) % (n + 1)


_WORD_CACHE: dict[ExtAffineElement, tuple[tuple[int, ...], ExtAffineElement]] = {}


def reduced_word(w: ExtAffineElement) -> tuple[list[int], ExtAffineElement]:
    """``w = s_{i_1} ... s_{i_l} pi`` with ``l = l(w)`` and ``l(pi) = 0``.

    The smallest left descent index is peeled first, which makes the output
    deterministic.
    """
    cached = _WORD_CACHE.get(w)
    if cached is not None:
        return list(cached[0]), cached[1]
    n = w.n
    word: list[int] = []
    current = w
    remaining = length(current)
    while remaining:
        for i in range(n + 1):
            if descent_left(current, i):
                word.append(i)
                current = left_mul_simple(current, i)
                remaining -= 1
                break
        else:  # pragma: no cover - a nonzero length element always has a descent
            raise RuntimeError("no left descent found")
    _WORD_CACHE[w] = (tuple(word), current)
    return word, current


def from_word(n: int, word: Iterable[int], sigma_power: int = 0) -> ExtAffineElement:
    """The element ``s_{i_1} ... s_{i_k} sigma^{sigma_power}``."""
    element = identity(n)
    for i in word:
        element = right_mul_simple(element, i)
    return compose(element, sigma_powers(n)[sigma_power % (n + 1)])


def affine_part(w: ExtAffineElement) -> tuple[ExtAffineElement, ExtAffineElement]:
    """Split ``w = w_aff pi`` with ``w_aff`` in the Coxeter part and ``l(pi) = 0``."""
    word, pi = reduced_word(w)
    return compose(w, inverse(pi)), pi


def is_finite(w: ExtAffineElement) -> bool:
    return not any(w.wt)


# ---------------------------------------------------------------------------
# alcove geometry


class AlcovePoint(NamedTuple):
    """A point of ``V`` stored as integer numerators over ``denominator``."""

    numerators: tuple[int, ...]
    denominator: int

    def pair_scaled(self, root: Root) -> int:
        """``denominator * <point, root>`` (an integer)."""
        return self.numerators[root.i - 1] - self.numerators[root.j - 1]


def fundamental_barycenter(n: int) -> AlcovePoint:
    """Barycenter of ``A_0``: ``<x0, e_a - e_b> = (b - a) / (n + 1)``."""
    return AlcovePoint(tuple(-a for a in range(1, n + 2)), n + 1)


def barycenter(w: ExtAffineElement) -> AlcovePoint:
    """Barycenter of the alcove ``w A_0``, namely ``g + u x0`` for ``w = t_g u``."""
    n = w.n
    base = fundamental_barycenter(n)
    moved = [0] * (n + 1)
    for i, numerator in enumerate(base.numerators):
        moved[w.lin[i] - 1] = numerator
    scale = n + 1
    return AlcovePoint(tuple(scale * g + m for g, m in zip(w.wt, moved)), scale)


def separating_wall(a: AlcovePoint, b: AlcovePoint) -> tuple[Root, int]:
    """The unique wall ``H_{root, k}`` separating two adjacent alcoves."""
    denominator = a.denominator
    rank = len(a.numerators)
    found = []
    for root in positive_roots(rank):
        fa = a.pair_scaled(root) // denominator
        fb = b.pair_scaled(root) // denominator
        if fa != fb:
            found.append((root, max(fa, fb)))
    if len(found) != 1:
        raise ValueError("alcoves are not adjacent")
    return found[0]


def crossing_sign(v: ExtAffineElement, i: int) -> int:
    """``+1`` iff ``v s_i A_0`` lies on the positive side of the wall it shares
    with ``v A_0`` (periodic orientation), otherwise ``-1``.

    Decided by comparing the root pairings of the two barycenters.
    """
    here = barycenter(v)
    there = barycenter(right_mul_simple(v, i))
    root, _level = separating_wall(here, there)
    return 1 if there.pair_scaled(root) > here.pair_scaled(root) else -1


def crossing_sign_fast(v: ExtAffineElement, i: int) -> int:
    """Closed form of :func:`crossing_sign` for ``v = t_g u``.

    The wall crossed by ``v -> v s_i`` has direction ``u a_i`` (``u phi`` for
    ``i = 0``); the crossing is positive iff that root is negative for
    ``i >= 1`` and positive for ``i = 0``.
    """
    lin = v.lin
    if i == 0:
        return 1 if lin[0] < lin[-1] else -1
    return 1 if lin[i - 1] > lin[i] else -1


# ---------------------------------------------------------------------------
# serialization


def element_to_string(w: ExtAffineElement) -> str:
    """Text form ``g_1,...,g_{n+1}:u_1,...,u_{n+1}``."""
    return ",".join(str(x) for x in w.wt) + ":" + ",".join(str(x) for x in w.lin)


def element_from_string(text: str) -> ExtAffineElement:
    try:
        weight_text, perm_text = text.strip().split(":")
        weight = [int(x) for x in weight_text.split(",")]
        perm = check_perm([int(x) for x in perm_text.split(",")])
    except ValueError as exc:
        raise ValueError(f"malformed element string: {text!r}") from exc
    if len(weight) != len(perm):
        raise ValueError(f"malformed element string: {text!r}")
    return ExtAffineElement(normalize_weight(weight), perm)


def word_to_string(word: Sequence[int], sigma_power: int = 0) -> str:
    """Human readable product, e.g. ``s1s3s0σ^2`` (``e`` for the identity)."""
    text = "".join(f"s{i}" for i in word)
    if sigma_power == 1:
        text += "σ"
    elif sigma_power:
        text += f"σ^{sigma_power}"
    return text or "e"


def element_word_string(w: ExtAffineElement) -> str:
    word, pi = reduced_word(w)
    return word_to_string(word, sigma_exponent(pi))


# ---------------------------------------------------------------------------
# enumeration


def elements_by_length(n: int, max_length: int) -> Iterator[list[ExtAffineElement]]:
    """Layers of the Coxeter part ``W_aff`` by length ``0, 1, ..., max_length``."""
    layer = [identity(n)]
    yield layer
    for _ in range(max_length):
        seen: set[ExtAffineElement] = set()
        nxt: list[ExtAffineElement] = []
        for w in layer:
            for i in range(n + 1):
                if descent_right(w, i):
                    continue
                ws = right_mul_simple(w, i)
                if ws not in seen:
                    seen.add(ws)
                    nxt.append(ws)
        nxt.sort()
        layer = nxt
        yield layer


def extended_elements_up_to(n: int, max_length: int) -> list[ExtAffineElement]:
    """All elements ``w sigma^k`` of the extended group with ``l(w) <= max_length``."""
    result = []
    powers = sigma_powers(n)
    for layer in elements_by_length(n, max_length):
        for w in layer:
            for pi in powers:
                result.append(compose(w, pi))
    return result


# ---------------------------------------------------------------------------
# partitions


class Partition(tuple):
    """A partition of ``n + 1`` stored as its weakly decreasing parts."""

    def __new__(cls, parts: Iterable[int]) -> "Partition":
        values = tuple(int(p) for p in parts)
        if not values or any(p <= 0 for p in values):
            raise ValueError(f"partition parts must be positive: {values!r}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {values!r}")
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def n(self) -> int:
        return sum(self) - 1

    @property
    def rows(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)


def partition_from_string(text: str) -> Partition:
    try:
        return Partition(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ValueError(f"malformed partition: {text!r}") from exc


def partitions_of(total: int) -> list[Partition]:
    """All partitions of ``total`` in reverse lexicographic order."""
    result: list[Partition] = []

    def extend(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            result.append(Partition(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            extend(remaining - part, part, prefix + [part])

    extend(total, total, [])
    return result


def transpose(lam: Sequence[int]) -> Partition:
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def partial_sums(lam: Sequence[int]) -> list[int]:
    """``[lam(0), lam(1), ..., lam(r)]`` with ``lam(0) = 0``."""
    sums = [0]
    for p in lam:
        sums.append(sums[-1] + p)
    return sums


def J_of(lam: Sequence[int]) -> frozenset[int]:
    """``J_lam = {1, ..., n+1}`` minus the partial sums ``lam(i)``."""
    sums = set(partial_sums(lam)[1:])
    return frozenset(i for i in range(1, sum(lam) + 1) if i not in sums)


def a_of(lam: Sequence[int]) -> int:
    """``a_lam = sum (i - 1) lam_i``, the length of ``w_{lam'}``."""
    return sum(i * p for i, p in enumerate(lam))


def count_min_coset_reps(lam: Sequence[int]) -> int:
    """``N_lam = (n+1)! / prod lam_i!``."""
    from math import factorial

    total = factorial(sum(lam))
    for p in lam:
        total //= factorial(p)
    return total


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """``mu <= lam`` in dominance order (partial sums)."""
    if sum(mu) != sum(lam):
        raise ValueError("partitions of different sizes")
    mu_sums = partial_sums(mu)
    lam_sums = partial_sums(lam)
    depth = max(len(mu), len(lam))
    for i in range(1, depth + 1):
        mi = mu_sums[min(i, len(mu))]
        li = lam_sums[min(i, len(lam))]
        if mi > li:
            return False
    return True


def tableau_entry(lam: Sequence[int], row: int, col: int) -> int:
    """``lam[row, col]``: entry of the row-filled tableau ``t_r(lam)``."""
    if not (1 <= row <= len(lam) and 1 <= col <= lam[row - 1]):
        raise ValueError(f"cell ({row}, {col}) outside the diagram")
    return partial_sums(lam)[row - 1] + col


def row_of(lam: Sequence[int]) -> tuple[int, ...]:
    """``row_of(lam)[i - 1]`` is the row of ``t_r(lam)`` containing ``i``."""
    out = []
    for k, p in enumerate(lam, start=1):
        out.extend([k] * p)
    return tuple(out)


def column_of(lam: Sequence[int]) -> tuple[int, ...]:
    out = []
    for p in lam:
        out.extend(range(1, p + 1))
    return tuple(out)


def row_reading(lam: Sequence[int]) -> list[int]:
    return list(range(1, sum(lam) + 1))


def column_reading(lam: Sequence[int]) -> list[int]:
    """Entries of ``t_r(lam)`` read down the columns, left to right."""
    sums = partial_sums(lam)
    word = []
    for col in range(1, lam[0] + 1):
        for k, p in enumerate(lam):
            if p >= col:
                word.append(sums[k] + col)
    return word
