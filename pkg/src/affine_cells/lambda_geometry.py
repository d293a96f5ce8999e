"""Structures indexed by a partition ``lam`` of ``n + 1``.

This covers the Young subgroup ``W_lam``, the column-reading permutation
``u_lam``, minimal coset representatives ``^lam W``, the lattice ``P/Q_lam`` of
lambda-weights (which may have torsion), the fundamental lambda-alcove and its
weights ``P^(lam)``, pseudo-translations ``tau_gamma``, the row-permuting group
``G_lam``, lambda-dominance, and the maximal double coset elements
``m_gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from .weyl import (
    ExtAffineElement,
    Partition,
    Permutation,
    Root,
    Weight,
    J_of,
    a_of,
    act_on_root,
    act_on_weight,
    compose,
    count_min_coset_reps,
    finite,
    inverse,
    length,
    left_mul_simple,
    longest_element,
    normalize_weight,
    pair,
    parabolic_elements,
    partial_sums,
    perm_from_inversion_set,
    perm_inv,
    perm_length,
    perm_mul,
    perm_reduced_word,
    right_mul_simple,
    row_of,
    column_reading,
    transpose,
)


# ---------------------------------------------------------------------------
# per-partition data


@dataclass(frozen=True)
class LambdaData:
    """Derived data for a partition, memoized by :func:`lambda_data`."""

    lam: Partition
    rank: int
    row_of: tuple[int, ...]
    J: frozenset[int]
    J_dual: frozenset[int]
    u_lam: Permutation
    w_lam: Permutation
    w_dual: Permutation
    a_lam: int

    @property
    def n(self) -> int:
        return self.rank - 1


@lru_cache(maxsize=None)
def lambda_data(lam: Sequence[int]) -> LambdaData:
    part = Partition(lam)
    rank = part.size
    dual = transpose(part)
    return LambdaData(
        lam=part,
        rank=rank,
        row_of=row_of(part),
        J=J_of(part),
        J_dual=J_of(dual),
        u_lam=tuple(column_reading(part)),
        w_lam=longest_element(rank, J_of(part)),
        w_dual=longest_element(rank, J_of(dual)),
        a_lam=a_of(part),
    )


def u_lambda(lam: Sequence[int]) -> Permutation:
    """Permutation whose one-line word reads ``t_r(lam)`` down its columns."""
    return lambda_data(tuple(lam)).u_lam


def positive_roots_lambda(lam: Sequence[int]) -> list[Root]:
    """``Phi_lam^+``: roots ``e_a - e_b`` with ``a < b`` in the same row."""
    rows = lambda_data(tuple(lam)).row_of
    rank = len(rows)
    return [
        Root(a, b)
        for a in range(1, rank + 1)
        for b in range(a + 1, rank + 1)
        if rows[a - 1] == rows[b - 1]
    ]


def positive_roots_parabolic(rank: int, subset: Iterable[int]) -> list[Root]:
    """``Phi_J^+`` for a subset ``J`` of simple indices."""
    chosen = set(subset)
    roots = []
    for a in range(1, rank + 1):
        b = a
        while b in chosen:
            b += 1
            roots.append(Root(a, b))
    return roots


# ---------------------------------------------------------------------------
# minimal coset representatives and lambda-expressions


def is_min_coset_rep(w: Permutation, lam: Sequence[int]) -> bool:
    """``w`` in ``^lam W``: every row of ``t_r(lam)`` ascends in ``w``'s word."""
    rows = lambda_data(tuple(lam)).row_of
    last_position: dict[int, int] = {}
    for position, value in enumerate(w):
        row = rows[value - 1]
        previous = last_position.get(row)
        if previous is not None and w[previous] > value:
            return False
        last_position[row] = position
    return True


def coset_decompose(u: Permutation, lam: Sequence[int]) -> tuple[Permutation, Permutation]:
    """``u = theta_lam * theta^lam`` with ``theta_lam`` in ``W_lam`` and
    ``theta^lam`` in ``^lam W``."""
    rows = lambda_data(tuple(lam)).row_of
    positions_by_row: dict[int, list[int]] = {}
    for position, value in enumerate(u):
        positions_by_row.setdefault(rows[value - 1], []).append(position)
    sums = partial_sums(lam)
    images = [0] * len(u)
    for row, positions in positions_by_row.items():
        for offset, position in enumerate(positions):
            images[position] = sums[row - 1] + offset + 1
    minimal = tuple(images)
    return perm_mul(u, perm_inv(minimal)), minimal


def lambda_expression(w: Permutation, lam: Sequence[int]) -> list[list[int]]:
    """Split the one-line word of ``w`` into blocks.

    A divider goes between consecutive letters when they decrease, or when they
    increase but lie in the same row of ``t_r(lam)``.
    """
    rows = lambda_data(tuple(lam)).row_of
    blocks: list[list[int]] = [[w[0]]]
    for left, right in zip(w, w[1:]):
        if right < left or rows[left - 1] == rows[right - 1]:
            blocks.append([right])
        else:
            blocks[-1].append(right)
    return blocks


def mu_of(w: Permutation, lam: Sequence[int]) -> Partition:
    """Block sizes of the lambda-expression, sorted decreasingly."""
    return Partition(sorted((len(b) for b in lambda_expression(w, lam)), reverse=True))


def ascent_set(u: Permutation, lam: Sequence[int]) -> frozenset[int]:
    """``A_lam(u)``: the ``i`` with ``u(i), u(i+1)`` in a common block."""
    if not is_min_coset_rep(u, lam):
        raise ValueError("ascent_set requires a minimal coset representative")
    block_id = {}
    for index, block in enumerate(lambda_expression(u, lam)):
        for value in block:
            block_id[value] = index
    return frozenset(
        i for i in range(1, len(u)) if block_id[u[i - 1]] == block_id[u[i]]
    )


def ascent_set_direct(u: Permutation, lam: Sequence[int]) -> frozenset[int]:
    """Oracle: ``{i : l(u s_i) = l(u) + 1 and u s_i in ^lam W}``."""
    result = set()
    for i in range(1, len(u)):
        us = list(u)
        us[i - 1], us[i] = us[i], us[i - 1]
        us_t = tuple(us)
        if perm_length(us_t) == perm_length(u) + 1 and is_min_coset_rep(us_t, lam):
            result.add(i)
    return frozenset(result)


def _all_min_coset_reps(lam: Sequence[int]) -> list[Permutation]:
    rows = lambda_data(tuple(lam)).row_of
    sums = partial_sums(lam)
    labels = sorted(set(permutations(rows)))
    reps = []
    for arrangement in labels:
        counters = {row: 0 for row in set(rows)}
        images = []
        for row in arrangement:
            counters[row] += 1
            images.append(sums[row - 1] + counters[row])
        reps.append(tuple(images))
    return reps


@lru_cache(maxsize=None)
def _canonical_min_coset_reps(lam: tuple[int, ...]) -> tuple[Permutation, ...]:
    u_lam = u_lambda(lam)
    others = [u for u in _all_min_coset_reps(lam) if u != u_lam]
    others.sort(key=lambda u: (perm_length(u), perm_reduced_word(u)))
    return (u_lam, *others)


def min_coset_reps(
    lam: Sequence[int], order: Sequence[Permutation] | None = None
) -> list[Permutation]:
    """``^lam W`` in canonical order: ``u_lam`` first, then by length and the
    lexicographic order of reduced words.  ``order`` overrides the order after
    checking it is a permutation of the same set."""
    canonical = list(_canonical_min_coset_reps(tuple(lam)))
    if order is None:
        return canonical
    custom = [tuple(u) for u in order]
    if sorted(custom) != sorted(canonical):
        raise ValueError("basis override is not an ordering of ^lam W")
    return custom


def count_check(lam: Sequence[int]) -> bool:
    return len(_canonical_min_coset_reps(tuple(lam))) == count_min_coset_reps(lam)


# ---------------------------------------------------------------------------
# lambda-weights: P/Q_lam


class LambdaWeight(NamedTuple):
    """The coset ``sum a_k e~_k`` of ``P/Q_lam`` in normal form."""

    a: tuple[int, ...]
    lam: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.a)

    def __add__(self, other: "LambdaWeight") -> "LambdaWeight":  # type: ignore[override]
        if self.lam != other.lam:
            raise ValueError("lambda-weights for different partitions")
        return lambda_weight(self.lam, [x + y for x, y in zip(self.a, other.a)])

    def __neg__(self) -> "LambdaWeight":
        return lambda_weight(self.lam, [-x for x in self.a])


def normalize_lambda_coords(lam: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    """Reduce ``a`` modulo ``Z (lam_1, ..., lam_r)`` so ``0 <= a_r < lam_r``."""
    shift = a[-1] // lam[-1]
    if shift == 0:
        return tuple(a)
    return tuple(x - shift * p for x, p in zip(a, lam))


def lambda_weight(lam: Sequence[int], a: Sequence[int]) -> LambdaWeight:
    if len(a) != len(lam):
        raise ValueError("lambda-weight has wrong number of coordinates")
    return LambdaWeight(normalize_lambda_coords(lam, a), tuple(lam))


def lambda_weight_from_string(lam: Sequence[int], text: str) -> LambdaWeight:
    try:
        coords = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed lambda-weight: {text!r}") from exc
    return lambda_weight(lam, coords)


def weight_to_lambda(weight: Sequence[int], lam: Sequence[int]) -> tuple[int, ...]:
    """The natural map ``P -> P/Q_lam``: ``a_k`` sums the coordinates in row ``k``."""
    sums = partial_sums(lam)
    coords = [sum(weight[sums[k] : sums[k + 1]]) for k in range(len(lam))]
    return normalize_lambda_coords(lam, coords)


class LambdaAlcoveCoords(NamedTuple):
    """Row data ``a_k = lam_k b_k + c_k`` with ``0 <= c_k < lam_k``."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    lam: tuple[int, ...]

    @property
    def c_star(self) -> tuple[int, ...]:
        return tuple(p - c for p, c in zip(self.lam, self.c))

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(p * b + c for p, b, c in zip(self.lam, self.b, self.c))


def alcove_coords(lam: Sequence[int], a: Sequence[int]) -> LambdaAlcoveCoords:
    b = tuple(x // p for x, p in zip(a, lam))
    c = tuple(x % p for x, p in zip(a, lam))
    return LambdaAlcoveCoords(b, c, tuple(lam))


def project_to_fundamental(lam: Sequence[int], a: Sequence[int]) -> Weight:
    """The representative ``gamma^(lam)`` in ``P^(lam)`` of a lambda-weight.

    Row ``k`` of the tableau receives ``c_k`` entries ``b_k + 1`` followed by
    ``lam_k - c_k`` entries ``b_k``.
    """
    coords = alcove_coords(lam, a)
    entries: list[int] = []
    for p, b, c in zip(lam, coords.b, coords.c):
        entries.extend([b + 1] * c + [b] * (p - c))
    return normalize_weight(entries)


def project_weight(weight: Sequence[int], lam: Sequence[int]) -> Weight:
    """``gamma -> gamma^(lam)`` for ``gamma`` in ``P``."""
    return project_to_fundamental(lam, weight_to_lambda(weight, lam))


def tableau_rows(lam: Sequence[int], weight: Sequence[int]) -> list[list[int]]:
    sums = partial_sums(lam)
    return [list(weight[sums[k] : sums[k + 1]]) for k in range(len(lam))]


def in_fundamental_weights(weight: Sequence[int], lam: Sequence[int]) -> bool:
    """``weight`` in ``P^(lam)``: every root of ``Phi_lam^+`` pairs into ``{0, 1}``."""
    return all(pair(weight, root) in (0, 1) for root in positive_roots_lambda(lam))


def J_of_gamma(weight: Sequence[int], lam: Sequence[int]) -> frozenset[int]:
    """``J_lam(gamma) = {j in J_lam : <gamma, alpha_j> = 1}``."""
    data = lambda_data(tuple(lam))
    return frozenset(j for j in data.J if weight[j - 1] - weight[j] == 1)


def y_gamma(weight: Sequence[int], lam: Sequence[int]) -> Permutation:
    """``y_gamma = w_{J_lam minus J_lam(gamma)} w_{J_lam}``."""
    if not in_fundamental_weights(weight, lam):
        raise ValueError("weight is not in P^(lam)")
    data = lambda_data(tuple(lam))
    partial = longest_element(data.rank, data.J - J_of_gamma(weight, lam))
    return perm_mul(partial, data.w_lam)


def tau(weight: Sequence[int], lam: Sequence[int]) -> ExtAffineElement:
    """Pseudo-translation ``tau_gamma = t_gamma y_gamma``."""
    return ExtAffineElement(normalize_weight(weight), y_gamma(weight, lam))


def tau_of_lambda_weight(lam: Sequence[int], a: Sequence[int]) -> ExtAffineElement:
    return tau(project_to_fundamental(lam, a), lam)


# ---------------------------------------------------------------------------
# alcove membership for A_lam


def alcove_in_lambda_alcove(w: ExtAffineElement, lam: Sequence[int]) -> bool:
    """``w A_0`` inside ``A_lam``: ``0 < <bary, alpha> < 1`` on ``Phi_lam^+``."""
    from .weyl import barycenter

    point = barycenter(w)
    denominator = point.denominator
    for root in _roots_lambda_cached(tuple(lam)):
        value = point.pair_scaled(root)
        if value <= 0 or value >= denominator:
            return False
    return True


@lru_cache(maxsize=None)
def _roots_lambda_cached(lam: tuple[int, ...]) -> tuple[Root, ...]:
    return tuple(positive_roots_lambda(lam))


def wall_levels(w: ExtAffineElement, lam: Sequence[int]) -> set[tuple[Root, int]]:
    """Walls ``H_{alpha,0}, H_{alpha,1}`` (``alpha`` in ``Phi_lam^+``) mapped by ``w``.

    Returns the images as ``(positive root, level)`` pairs; used to test that an
    element stabilizes the wall set of ``A_lam``.
    """
    result = set()
    for root in positive_roots_lambda(lam):
        for level in (0, 1):
            image = act_on_root(w.lin, root)
            shift = pair(w.wt, image)
            new_level = level + shift
            if not image.is_positive:
                image = image.negate()
                new_level = -new_level
            result.add((image, new_level))
    return result


# ---------------------------------------------------------------------------
# the group G_lam and lambda-dominance


@dataclass(frozen=True)
class GLambdaGroup:
    """``G_lam``: products of symmetric groups on rows of equal length."""

    lam: tuple[int, ...]
    blocks: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def order(self) -> int:
        total = 1
        for _length, rows in self.blocks:
            total *= factorial(len(rows))
        return total

    def row_generators(self) -> list[tuple[int, int]]:
        """Adjacent row swaps ``(k, k+1)`` inside each block."""
        gens = []
        for _length, rows in self.blocks:
            gens.extend(zip(rows, rows[1:]))
        return gens

    def row_permutations(self) -> list[tuple[int, ...]]:
        """All elements as permutations of the row indices ``1..r``."""
        r = len(self.lam)
        result = [tuple(range(1, r + 1))]
        for _length, rows in self.blocks:
            if len(rows) < 2:
                continue
            extended = []
            for base in result:
                for arrangement in permutations(rows):
                    images = list(base)
                    for src, dst in zip(rows, arrangement):
                        images[src - 1] = dst
                    extended.append(tuple(images))
            result = extended
        return sorted(result)

    def as_weyl_permutation(self, row_perm: Sequence[int]) -> Permutation:
        """The permutation of ``{1..n+1}`` sending ``lam[k, c]`` to ``lam[g(k), c]``."""
        sums = partial_sums(self.lam)
        images = [0] * sums[-1]
        for k, p in enumerate(self.lam, start=1):
            for c in range(1, p + 1):
                images[sums[k - 1] + c - 1] = sums[row_perm[k - 1] - 1] + c
        return tuple(images)

    def act(self, row_perm: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
        """Action on lambda-weight coordinates: ``g e~_k = e~_{g(k)}``."""
        out = [0] * len(a)
        for k, value in enumerate(a):
            out[row_perm[k] - 1] = value
        return normalize_lambda_coords(self.lam, out)


@lru_cache(maxsize=None)
def g_lambda(lam: Sequence[int]) -> GLambdaGroup:
    lam_t = tuple(lam)
    blocks: dict[int, list[int]] = {}
    for k, p in enumerate(lam_t, start=1):
        blocks.setdefault(p, []).append(k)
    ordered = tuple((p, tuple(rows)) for p, rows in sorted(blocks.items(), reverse=True))
    return GLambdaGroup(lam_t, ordered)


def g_lambda_positive_roots(lam: Sequence[int]) -> list[tuple[int, int]]:
    """``Phi_{G_lam}^+ = {e~_i - e~_j : i < j, lam_i = lam_j}``."""
    r = len(lam)
    return [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1) if lam[i - 1] == lam[j - 1]]


def g_lambda_roots(lam: Sequence[int]) -> list[tuple[int, int]]:
    positive = g_lambda_positive_roots(lam)
    return positive + [(j, i) for i, j in positive]


def is_dominant(lam: Sequence[int], a: Sequence[int]) -> bool:
    """``a_i >= a_j`` whenever ``i < j`` and ``lam_i = lam_j``."""
    return all(a[i - 1] >= a[j - 1] for i, j in g_lambda_positive_roots(lam))


def dominant_rep(lam: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    """Sort the coordinates decreasingly inside each equal-length block."""
    out = list(a)
    for _length, rows in g_lambda(tuple(lam)).blocks:
        values = sorted((a[k - 1] for k in rows), reverse=True)
        for k, value in zip(rows, values):
            out[k - 1] = value
    return normalize_lambda_coords(lam, out)


def orbit(lam: Sequence[int], a: Sequence[int]) -> list[tuple[int, ...]]:
    group = g_lambda(tuple(lam))
    return sorted({group.act(g, a) for g in group.row_permutations()})


def dominance_key(lam: Sequence[int], a: Sequence[int]) -> tuple:
    """Sort key compatible with lambda-dominance.

    Within a block of ``m`` equal rows the coordinates are weighted by
    ``m + 1 - 2j``, a functional that is invariant under the lattice shift and
    strictly increases along ``Q^lam_+``; ties are broken lexicographically.
    """
    height = 0
    for _length, rows in g_lambda(tuple(lam)).blocks:
        m = len(rows)
        for j, k in enumerate(rows, start=1):
            height += (m + 1 - 2 * j) * a[k - 1]
    return (height, tuple(a))


def dominant_reps(lam: Sequence[int], height: int) -> list[tuple[int, ...]]:
    """Dominant lambda-weights in normal form with ``|b_k| <= height``.

    Streams in a lambda-dominance compatible order.
    """
    lam_t = tuple(lam)
    ranges = []
    for k, p in enumerate(lam_t):
        if k == len(lam_t) - 1:
            ranges.append(range(0, p))
        else:
            ranges.append(range(-height * p, (height + 1) * p))
    found = {
        tuple(a) for a in product(*ranges) if is_dominant(lam_t, a)
    }
    return sorted(found, key=lambda a: dominance_key(lam_t, a))


def in_positive_g_cone(lam: Sequence[int], diff: Sequence[int]) -> bool:
    """``diff + Q_lam`` in ``Q^lam_+``.

    The representative is shifted by ``k (lam_1, ..., lam_r)`` so that every
    equal-length block sums to zero (returning False if no single ``k`` works),
    then all prefix sums must be non-negative.
    """
    shift = None
    for p, rows in g_lambda(tuple(lam)).blocks:
        block_sum = sum(diff[k - 1] for k in rows)
        size = p * len(rows)
        if block_sum % size:
            return False
        needed = -block_sum // size
        if shift is None:
            shift = needed
        elif shift != needed:
            return False
    assert shift is not None
    shifted = [x + shift * p for x, p in zip(diff, lam)]
    running = 0
    for value in shifted:
        running += value
        if running < 0:
            return False
    return True


def lambda_dominance_leq(lam: Sequence[int], a: Sequence[int], b: Sequence[int]) -> bool:
    """``a <=_lam b`` iff ``b - a`` lies in ``Q^lam_+``."""
    return in_positive_g_cone(lam, [y - x for x, y in zip(a, b)])


def dominance_covers(lam: Sequence[int], a: Sequence[int]) -> list[tuple[int, ...]]:
    """Dominant ``b = a + e~_i - e~_j`` (``i < j`` in one block) above ``a``."""
    result = []
    for i, j in g_lambda_positive_roots(lam):
        b = list(a)
        b[i - 1] += 1
        b[j - 1] -= 1
        b_norm = normalize_lambda_coords(lam, b)
        if is_dominant(lam, b_norm):
            result.append(b_norm)
    return result


# ---------------------------------------------------------------------------
# the elements m_gamma


def tau_conjugate(lam: Sequence[int], a: Sequence[int]) -> ExtAffineElement:
    """``u_lam^{-1} tau_gamma u_lam`` for the lambda-weight ``a``."""
    u = finite(u_lambda(lam))
    return compose(compose(inverse(u), tau_of_lambda_weight(lam, a)), u)


def left_max_set(rank: int, subset: Iterable[int], weight: Sequence[int], lin: Permutation) -> list[Root]:
    """``L_J(gamma, u)``."""
    lin_inv = perm_inv(lin)
    out = []
    for root in positive_roots_parabolic(rank, subset):
        value = pair(weight, root)
        if value > 0 or (value == 0 and act_on_root(lin_inv, root).is_positive):
            out.append(root)
    return out


def right_max_set(rank: int, subset: Iterable[int], weight: Sequence[int], lin: Permutation) -> list[Root]:
    """``R_J(gamma, u)``."""
    moved = act_on_weight(perm_inv(lin), weight)
    out = []
    for root in positive_roots_parabolic(rank, subset):
        value = pair(moved, root)
        if value < 0 or (value == 0 and act_on_root(lin, root).is_positive):
            out.append(root)
    return out


def maximize_in_double_coset(
    g: ExtAffineElement, subset: Iterable[int]
) -> tuple[Permutation, ExtAffineElement, Permutation]:
    """Longest element of ``W_J g W_J`` by the inversion-set construction.

    Returns ``(x, m, y)`` with ``m = x^{-1} g y``, ``Phi(x) = L_J(g)`` and
    ``Phi(y) = R_J(x^{-1} g)``.
    """
    chosen = frozenset(subset)
    rank = g.rank
    x = perm_from_inversion_set(rank, left_max_set(rank, chosen, g.wt, g.lin))
    left = compose(finite(perm_inv(x)), g)
    y = perm_from_inversion_set(rank, right_max_set(rank, chosen, left.wt, left.lin))
    return x, compose(left, finite(y)), y


def maximize_greedy(g: ExtAffineElement, subset: Iterable[int]) -> ExtAffineElement:
    """Longest element of ``W_J g W_J`` by ascending simple multiplications."""
    chosen = sorted(subset)
    current = g
    improved = True
    while improved:
        improved = False
        for j in chosen:
            candidate = left_mul_simple(current, j)
            if length(candidate) > length(current):
                current = candidate
                improved = True
        for j in chosen:
            candidate = right_mul_simple(current, j)
            if length(candidate) > length(current):
                current = candidate
                improved = True
    return current


def maximize_bruteforce(g: ExtAffineElement, subset: Iterable[int]) -> ExtAffineElement:
    """Oracle: unique longest element among all ``x g y`` with ``x, y`` in ``W_J``."""
    elements = [finite(p) for p in parabolic_elements(g.rank, subset)]
    best: list[ExtAffineElement] = []
    best_length = -1
    seen = set()
    for x in elements:
        xg = compose(x, g)
        for y in elements:
            candidate = compose(xg, y)
            if candidate in seen:
                continue
            seen.add(candidate)
            value = length(candidate)
            if value > best_length:
                best, best_length = [candidate], value
            elif value == best_length:
                best.append(candidate)
    if len(best) != 1:
        raise RuntimeError("double coset has no unique longest element")
    return best[0]


def m_gamma(lam: Sequence[int], a: Sequence[int]) -> ExtAffineElement:
    """``m_gamma``: the longest element of ``W_{lam'} u_lam^{-1} tau_gamma u_lam W_{lam'}``."""
    data = lambda_data(tuple(lam))
    _x, m, _y = maximize_in_double_coset(tau_conjugate(lam, a), data.J_dual)
    return m


def m_gamma_decomposition(
    lam: Sequence[int], a: Sequence[int]
) -> tuple[Permutation, ExtAffineElement, Permutation]:
    """``(x, g, y)`` with ``m_gamma = x^{-1} g y`` and ``g = u_lam^{-1} tau_gamma u_lam``."""
    data = lambda_data(tuple(lam))
    g = tau_conjugate(lam, a)
    x, _m, y = maximize_in_double_coset(g, data.J_dual)
    return x, g, y


def length_tau_conj(lam: Sequence[int], a: Sequence[int]) -> int:
    """Closed formula for ``l(u_lam^{-1} tau_gamma u_lam)`` summed over row pairs."""
    coords = alcove_coords(lam, a)
    star = coords.c_star
    total = 0
    r = len(lam)
    for k in range(r):
        for l in range(k + 1, r):
            if coords.b[k] != coords.b[l]:
                total += abs(lam[l] * a[k] - lam[k] * a[l])
            else:
                total += star[l] * abs(coords.c[k] - coords.c[l]) + coords.c[l] * abs(
                    star[k] - star[l]
                )
    return total


def L_R_sets(lam: Sequence[int], a: Sequence[int]) -> tuple[frozenset[Root], frozenset[Root]]:
    """The root sets ``L(gamma)`` and ``R(gamma)`` inside ``u_lam Phi_{lam'}^+``."""
    data = lambda_data(tuple(lam))
    gamma = project_to_fundamental(lam, a)
    y = y_gamma(gamma, lam)
    u = data.u_lam
    u_inv = perm_inv(u)
    y_inv = perm_inv(y)
    dual_roots = {act_on_root(u, r) for r in positive_roots_parabolic(data.rank, data.J_dual)}
    dual_positive = set(positive_roots_parabolic(data.rank, data.J_dual))
    w_gamma = act_on_weight(data.w_lam, gamma)
    left, right = set(), set()
    for beta in dual_roots:
        value = pair(gamma, beta)
        if value > 0 or (value == 0 and act_on_root(u_inv, act_on_root(y_inv, beta)).is_positive):
            left.add(beta)
        value = pair(w_gamma, beta)
        image = act_on_root(u_inv, act_on_root(y, beta))
        if value < 0 or (value == 0 and image.is_positive and image not in dual_positive):
            right.add(beta)
    return frozenset(left), frozenset(right)


def block_roots(lam: Sequence[int], k: int, l: int) -> frozenset[Root]:
    """``A_{k,l} = {e_{lam(k-1)+i} - e_{lam(l-1)+i} : 1 <= i <= lam_l}``."""
    sums = partial_sums(lam)
    return frozenset(Root(sums[k - 1] + i, sums[l - 1] + i) for i in range(1, lam[l - 1] + 1))


def g_conjugated_into_dual(lam: Sequence[int]) -> bool:
    """Check ``u_lam^{-1} g u_lam`` lies in ``W_{lam'}`` for every ``g`` in ``G_lam``."""
    data = lambda_data(tuple(lam))
    group = g_lambda(tuple(lam))
    u = data.u_lam
    allowed = set(parabolic_elements(data.rank, data.J_dual))
    for g in group.row_permutations():
        conj = perm_mul(perm_mul(perm_inv(u), group.as_weyl_permutation(g)), u)
        if conj not in allowed:
            return False
    return True
