"""Induced representations ``pi_lam`` through lambda-folded alcove paths.

A lambda-folded alcove path walks from alcove to alcove inside the fundamental
lambda-alcove ``A_lam``.  At each letter of the type it either crosses the
wall, folds back (allowed only when the current alcove lies on the positive
side of that wall), or bounces off a wall of ``A_lam`` (forced).  Summing
``(-q)^{-bounces} (q - q^{-1})^{folds} zeta^{wt}`` over paths gives the matrix
entries of ``pi_lam(T_w)`` in the basis indexed by ``^lam W``.

For speed, :func:`pi_T` multiplies one-letter generator matrices along a
reduced word; the full path enumeration of :func:`pi_by_paths` is the
independent oracle.  Matrices act on the right: row ``u`` of ``pi(h)``
expresses ``xi (x) X_u . h`` in the basis, so ``pi(h1 h2) = pi(h1) pi(h2)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Sequence

from .lambda_geometry import (
    alcove_in_lambda_alcove,
    coset_decompose,
    is_dominant,
    lambda_data,
    m_gamma_decomposition,
    min_coset_reps,
    normalize_lambda_coords,
    tau,
    weight_to_lambda,
)
from .rings import GroupRingElem, LaurentQPoly, Q_MINUS_Q_INV, RingMatrix
from .weyl import (
    ExtAffineElement,
    Partition,
    Permutation,
    a_of,
    compose,
    conjugate_generator_index,
    crossing_sign_fast,
    element_word_string,
    extended_elements_up_to,
    finite,
    identity,
    inverse,
    partitions_of,
    perm_inv,
    perm_reduced_word,
    reduced_word,
    right_mul_simple,
    sigma_exponent,
    sigma_powers,
    word_to_string,
)

if TYPE_CHECKING:  # pragma: no cover
    from .hecke import HeckeElem

CROSS_POSITIVE = "+"
CROSS_NEGATIVE = "-"
FOLD = "f"
BOUNCE = "b"


class PathStartError(ValueError):
    """The requested start alcove is not inside ``A_lam``."""


class BoundednessError(ArithmeticError):
    """A leading matrix was requested for a matrix of too high ``q``-degree."""


class CellRecognitionError(RuntimeError):
    """Not exactly one partition gives a nonzero leading matrix."""


# ---------------------------------------------------------------------------
# folded paths


@dataclass(frozen=True)
class FoldedPath:
    """A lambda-folded alcove path ``(v_0, ..., v_l, v_l pi)``."""

    lam: tuple[int, ...]
    word: tuple[int, ...]
    sigma_power: int
    vertices: tuple[ExtAffineElement, ...]
    steps: tuple[str, ...]

    @property
    def start(self) -> ExtAffineElement:
        return self.vertices[0]

    @property
    def end(self) -> ExtAffineElement:
        n = self.vertices[0].n
        return compose(self.vertices[-1], sigma_powers(n)[self.sigma_power % (n + 1)])

    @property
    def folds(self) -> int:
        return self.steps.count(FOLD)

    @property
    def bounces(self) -> int:
        return self.steps.count(BOUNCE)

    @property
    def weight(self) -> tuple[int, ...]:
        """``wt(p)`` as a lambda-weight in normal form."""
        return weight_to_lambda(self.end.wt, self.lam)

    @property
    def final_direction(self) -> Permutation:
        """``theta^lam(p)`` in ``^lam W``."""
        return coset_decompose(self.end.lin, self.lam)[1]

    def coefficient(self) -> LaurentQPoly:
        return path_coefficient(self.folds, self.bounces)

    def __str__(self) -> str:
        tags = "".join(self.steps)
        return f"{word_to_string(self.word, self.sigma_power)} [{tags}] wt={self.weight}"


@lru_cache(maxsize=None)
def path_coefficient(folds: int, bounces: int) -> LaurentQPoly:
    """``Q(p) = (-q)^{-b} (q - q^{-1})^f``."""
    sign = -1 if bounces % 2 else 1
    return Q_MINUS_Q_INV ** folds * LaurentQPoly.monomial(-bounces, sign)


def Q_of(path: FoldedPath) -> LaurentQPoly:
    return path.coefficient()


def _step_options(v: ExtAffineElement, i: int, lam: tuple[int, ...]) -> list[tuple[str, ExtAffineElement]]:
    neighbour = right_mul_simple(v, i)
    if not alcove_in_lambda_alcove(neighbour, lam):
        return [(BOUNCE, v)]
    sign = crossing_sign_fast(v, i)
    if sign > 0:
        return [(CROSS_POSITIVE, neighbour)]
    return [(CROSS_NEGATIVE, neighbour), (FOLD, v)]


def enumerate_paths(
    lam: Sequence[int],
    word: Sequence[int],
    start: ExtAffineElement,
    sigma_power: int = 0,
    final_direction: Permutation | None = None,
) -> list[FoldedPath]:
    """All lambda-folded paths of type ``s_{i_1} ... s_{i_l} sigma^k`` from ``start``.

    Enumeration is depth first; at each letter a legal crossing is one branch,
    a fold is a second branch when permitted, and a bounce is the only option
    when the neighbouring alcove leaves ``A_lam``.
    """
    lam_t = tuple(lam)
    if not alcove_in_lambda_alcove(start, lam_t):
        raise PathStartError(f"start alcove {start} is not inside A_lam for lam={lam_t}")
    word_t = tuple(word)
    results: list[FoldedPath] = []

    def extend(vertices: list[ExtAffineElement], steps: list[str]) -> None:
        k = len(steps)
        if k == len(word_t):
            path = FoldedPath(lam_t, word_t, sigma_power, tuple(vertices), tuple(steps))
            if final_direction is None or path.final_direction == tuple(final_direction):
                results.append(path)
            return
        for tag, nxt in _step_options(vertices[-1], word_t[k], lam_t):
            vertices.append(nxt)
            steps.append(tag)
            extend(vertices, steps)
            vertices.pop()
            steps.pop()

    extend([start], [])
    return results


def validate_path(path: FoldedPath) -> bool:
    """Re-check a path against the definition, step by step."""
    lam = path.lam
    if len(path.vertices) != len(path.word) + 1 or len(path.steps) != len(path.word):
        return False
    for k, i in enumerate(path.word):
        before, after = path.vertices[k], path.vertices[k + 1]
        if not alcove_in_lambda_alcove(before, lam):
            return False
        options = _step_options(before, i, lam)
        if (path.steps[k], after) not in options:
            return False
    return alcove_in_lambda_alcove(path.vertices[-1], lam)


def _sum_paths(paths: Iterable[FoldedPath], lam: tuple[int, ...]) -> GroupRingElem:
    total: dict[tuple[tuple[int, ...], int], int] = {}
    for path in paths:
        key = path.weight
        for e, c in path.coefficient().raw().items():
            full = (key, e)
            total[full] = total.get(full, 0) + c
    return GroupRingElem(lam, total)


# ---------------------------------------------------------------------------
# the matrices pi_lam


def basis(lam: Sequence[int], order: Sequence[Permutation] | None = None) -> list[Permutation]:
    """``^lam W`` in the canonical order (``u_lam`` first)."""
    return min_coset_reps(tuple(lam), order)


def basis_labels(lam: Sequence[int], order: Sequence[Permutation] | None = None) -> list[str]:
    return [word_to_string(perm_reduced_word(u)) for u in basis(lam, order)]


def word_of(w: ExtAffineElement) -> tuple[list[int], int]:
    letters, pi = reduced_word(w)
    return letters, sigma_exponent(pi)


def pi_entry_by_paths(
    lam: Sequence[int], word: Sequence[int], u: Permutation, v: Permutation, sigma_power: int = 0
) -> GroupRingElem:
    """``[pi_lam(T_{i_1} ... T_{i_l} T_sigma^k)]_{u,v}`` by the path formula."""
    lam_t = tuple(lam)
    paths = enumerate_paths(lam_t, word, finite(u), sigma_power, final_direction=v)
    return _sum_paths(paths, lam_t)


def pi_by_paths(
    lam: Sequence[int],
    word: Sequence[int],
    sigma_power: int = 0,
    order: Sequence[Permutation] | None = None,
) -> RingMatrix:
    """The whole matrix of an expression (reduced or not) by path enumeration."""
    lam_t = tuple(lam)
    reps = basis(lam_t, order)
    index = {u: k for k, u in enumerate(reps)}
    matrix = RingMatrix(lam_t, len(reps))
    for row, u in enumerate(reps):
        grouped: dict[int, list[FoldedPath]] = {}
        for path in enumerate_paths(lam_t, word, finite(u), sigma_power):
            grouped.setdefault(index[path.final_direction], []).append(path)
        for col, paths in grouped.items():
            value = _sum_paths(paths, lam_t)
            if value:
                matrix.rows[row][col] = dict(value.raw())
    return matrix


class PiRepresentation:
    """Generator matrices of ``pi_lam`` and products along reduced words.

    Matrices for elements are memoized by prefix so that scans over many
    elements reuse shared work.
    """

    def __init__(self, lam: Sequence[int], order: Sequence[Permutation] | None = None) -> None:
        self.lam = tuple(lam)
        self.data = lambda_data(self.lam)
        self.n = self.data.n
        self.order = basis(self.lam, order)
        self.size = len(self.order)
        self.generators = [pi_by_paths(self.lam, [i], 0, self.order) for i in range(self.n + 1)]
        self.sigma_matrices = [pi_by_paths(self.lam, [], k, self.order) for k in range(self.n + 1)]
        self._cache: dict[ExtAffineElement, RingMatrix] = {identity(self.n): RingMatrix.identity(self.lam, self.size)}

    @property
    def sigma_matrix(self) -> RingMatrix:
        return self.sigma_matrices[1 % (self.n + 1)]

    def labels(self) -> list[str]:
        return [word_to_string(perm_reduced_word(u)) for u in self.order]

    def pi_T(self, w: ExtAffineElement) -> RingMatrix:
        """``pi_lam(T_w)``."""
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        letters, power = word_of(w)
        if power:
            core = compose(w, inverse(sigma_powers(self.n)[power]))
            result = self.pi_T(core) @ self.sigma_matrices[power]
        else:
            prefix = right_mul_simple(w, letters[-1])
            result = self.pi_T(prefix) @ self.generators[letters[-1]]
        if len(self._cache) > 200_000:
            self._cache.clear()
            self._cache[identity(self.n)] = RingMatrix.identity(self.lam, self.size)
        self._cache[w] = result
        return result

    def pi_word(self, word: Sequence[int], sigma_power: int = 0) -> RingMatrix:
        """Product of generator matrices along any expression."""
        result = RingMatrix.identity(self.lam, self.size)
        for i in word:
            result = result @ self.generators[i]
        if sigma_power % (self.n + 1):
            result = result @ self.sigma_matrices[sigma_power % (self.n + 1)]
        return result

    def pi_of_hecke(self, h: "HeckeElem") -> RingMatrix:
        """``pi_lam(h)`` for ``h = sum a_w T_w``."""
        total = RingMatrix(self.lam, self.size)
        for w, coeff in h.items():
            total = total + self.pi_T(w).scale(coeff)
        return total

    def leading_matrix(self, w: ExtAffineElement) -> RingMatrix:
        """``c_lam(w) = sp0(q^{-a_lam} pi_lam(T_w))``."""
        return leading_of_matrix(self.pi_T(w), self.data.a_lam)

    def leading_of_hecke(self, h: "HeckeElem") -> RingMatrix:
        return leading_of_matrix(self.pi_of_hecke(h), self.data.a_lam)


def leading_of_matrix(matrix: RingMatrix, a_lam: int) -> RingMatrix:
    try:
        return matrix.shift_q(-a_lam).sp0()
    except ValueError as exc:
        raise BoundednessError(
            f"q-degree {matrix.q_degree()} exceeds the bound {a_lam}"
        ) from exc


@lru_cache(maxsize=None)
def representation(lam: Sequence[int]) -> PiRepresentation:
    """Shared :class:`PiRepresentation` in canonical order."""
    return PiRepresentation(tuple(lam))


# ---------------------------------------------------------------------------
# inverse paths


def _retag(vertices: Sequence[ExtAffineElement], word: Sequence[int], lam: tuple[int, ...]) -> tuple[str, ...] | None:
    """Step tags for a vertex sequence, or ``None`` if some step is illegal."""
    tags = []
    for k, i in enumerate(word):
        before, after = vertices[k], vertices[k + 1]
        for tag, nxt in _step_options(before, i, lam):
            if nxt == after:
                tags.append(tag)
                break
        else:
            return None
    return tuple(tags)


def inverse_path(path: FoldedPath) -> FoldedPath:
    """The inverse path: reversed type, vertices ``tau^{-1} v_k pi`` read backwards.

    Folds and bounces are preserved, so ``Q`` is unchanged; the start and the
    final direction swap and the weight is negated.
    """
    lam = path.lam
    n = path.start.n
    k = path.sigma_power % (n + 1)
    pi = sigma_powers(n)[k]
    shift = inverse(tau(path.end.wt, lam))
    new_vertices = tuple(compose(compose(shift, v), pi) for v in reversed(path.vertices))
    new_word = tuple((i - k) % (n + 1) for i in reversed(path.word))
    tags = _retag(new_vertices, new_word, lam)
    if tags is None or not alcove_in_lambda_alcove(new_vertices[0], lam):
        raise RuntimeError("inverse path construction left the lambda-alcove")
    return FoldedPath(lam, new_word, (-k) % (n + 1), new_vertices, tags)


# ---------------------------------------------------------------------------
# recognition of cells and of Gamma_lam intersected with its inverse


def cell_leading_matrices(w: ExtAffineElement) -> dict[Partition, RingMatrix]:
    """``c_mu(w)`` for every partition ``mu`` of ``n + 1``."""
    return {mu: representation(mu).leading_matrix(w) for mu in partitions_of(w.rank)}


def cell_of(w: ExtAffineElement) -> Partition:
    """The unique partition whose leading matrix of ``w`` is nonzero."""
    nonzero = [mu for mu, matrix in cell_leading_matrices(w).items() if not matrix.is_zero()]
    if len(nonzero) != 1:
        raise CellRecognitionError(
            f"{element_word_string(w)}: {len(nonzero)} partitions give a nonzero leading matrix {nonzero}"
        )
    return nonzero[0]


def in_gamma_cap(w: ExtAffineElement, lam: Sequence[int]) -> bool:
    """``w`` in ``Gamma_lam`` and its inverse: the ``(u_lam, u_lam)`` leading entry is nonzero."""
    rep = representation(tuple(lam))
    leading = rep.leading_matrix(w)
    if not leading.rows[0].get(0):
        return False
    if leading.support() != [(0, 0)]:
        raise CellRecognitionError(f"{element_word_string(w)}: (u_lam, u_lam) entry is not the only nonzero entry")
    return True


def construct_p0(lam: Sequence[int], a: Sequence[int]) -> FoldedPath:
    """The path witnessing ``[c_lam(m_gamma)]_{u_lam, u_lam} != 0``.

    Writing ``m_gamma = x g y`` with ``x, y`` in ``W_{lam'}`` and
    ``g = u_lam^{-1} tau_gamma u_lam``, the path starts at ``u_lam``, folds on
    the letters of ``x``, crosses on the letters of ``g`` and folds on the
    letters of ``y``.
    """
    lam_t = tuple(lam)
    if not is_dominant(lam_t, normalize_lambda_coords(lam_t, tuple(a))):
        raise ValueError(f"lambda-weight {tuple(a)} is not dominant")
    data = lambda_data(lam_t)
    n = data.n
    x, g, y = m_gamma_decomposition(lam_t, a)
    left = perm_reduced_word(perm_inv(x))
    middle, pi = reduced_word(g)
    k = sigma_exponent(pi)
    right = [conjugate_generator_index(n, k, j) for j in perm_reduced_word(y)]
    word = tuple(left + middle + right)
    plan = [FOLD] * len(left) + [CROSS_POSITIVE] * len(middle) + [FOLD] * len(right)
    vertices = [finite(data.u_lam)]
    tags = []
    for i, intent in zip(word, plan):
        options = dict(_step_options(vertices[-1], i, lam_t))
        if intent == FOLD:
            if FOLD not in options:
                raise RuntimeError("fold not permitted while building p0")
            tags.append(FOLD)
            vertices.append(vertices[-1])
        else:
            crossing = [tag for tag in (CROSS_POSITIVE, CROSS_NEGATIVE) if tag in options]
            if not crossing:
                raise RuntimeError("crossing not permitted while building p0")
            tags.append(crossing[0])
            vertices.append(options[crossing[0]])
    return FoldedPath(lam_t, word, k, tuple(vertices), tuple(tags))


# ---------------------------------------------------------------------------
# asymptotic structure constants


def gamma_coeff(x: ExtAffineElement, y: ExtAffineElement, z: ExtAffineElement) -> int:
    """``gamma_{x, y, z^{-1}}`` as the asymptotic pairing of ``c(x) c(y)`` with ``c(z)``."""
    from .plancherel import asymptotic_pairing

    cells = {cell_of(x), cell_of(y), cell_of(z)}
    if len(cells) != 1:
        warnings.warn("elements lie in different cells; gamma coefficient is 0", stacklevel=2)
        return 0
    lam = cells.pop()
    rep = representation(lam)
    return asymptotic_pairing(rep.leading_matrix(x) @ rep.leading_matrix(y), rep.leading_matrix(z))


def is_distinguished_involution(d: ExtAffineElement, max_length: int = 12, cache_dir: str | None = None) -> bool:
    """``d = d^{-1}`` and the ``T_e`` coefficient of ``C_d`` has degree ``-a(d)``."""
    from .hecke import kl_basis

    if d != inverse(d):
        return False
    lam = cell_of(d)
    coeff = kl_basis(d.n, max_length, cache_dir).C(d).coeff(identity(d.n))
    return not coeff.is_zero() and coeff.deg() == -a_of(lam)


def find_distinguished_involutions(
    lam: Sequence[int], max_length: int, cache_dir: str | None = None
) -> list[ExtAffineElement]:
    """Distinguished involutions of the cell ``Delta_lam`` up to ``max_length``."""
    lam_t = Partition(lam)
    found = []
    n = lam_t.n
    for w in extended_elements_up_to(n, max_length):
        if w != inverse(w) or representation(lam_t).leading_matrix(w).is_zero():
            continue
        if is_distinguished_involution(w, max_length, cache_dir):
            found.append(w)
    return found


@dataclass
class DufloReport:
    """Outcome of the distinguished-involution conjecture check for one partition."""

    lam: tuple[int, ...]
    involutions: list[ExtAffineElement]
    diagonal_positions: list[int | None]

    @property
    def holds(self) -> bool:
        positions = self.diagonal_positions
        return None not in positions and sorted(positions) == list(range(len(positions)))  # type: ignore[type-var]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "involutions": [element_word_string(d) for d in self.involutions],
            "diagonal_positions": self.diagonal_positions,
            "holds": self.holds,
        }


def duflo_check(lam: Sequence[int], involutions: Iterable[ExtAffineElement]) -> DufloReport:
    """Check whether each ``c_lam(d)`` is a diagonal matrix unit ``E_ii``, with distinct ``i``."""
    lam_t = tuple(lam)
    rep = representation(lam_t)
    listed = list(involutions)
    positions: list[int | None] = []
    for d in listed:
        leading = rep.leading_matrix(d)
        support = leading.support()
        if len(support) == 1 and support[0][0] == support[0][1] and leading.entry(*support[0]) == GroupRingElem.one(lam_t):
            positions.append(support[0][0])
        else:
            positions.append(None)
    return DufloReport(lam_t, listed, positions)


@dataclass
class ConjugationReport:
    """Diagonal matrix ``D`` and the check of ``D^{-1} c_lam(w_ij) D = E_ij``."""

    lam: tuple[int, ...]
    weights: list[tuple[int, ...]]
    signs: list[int]
    failures: list[tuple[int, int]]

    @property
    def holds(self) -> bool:
        return not self.failures

    def diagonal(self) -> list[GroupRingElem]:
        return [GroupRingElem.monomial(self.lam, key, 0, sign) for key, sign in zip(self.weights, self.signs)]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "weights": [list(key) for key in self.weights],
            "signs": self.signs,
            "failures": [list(pair) for pair in self.failures],
            "holds": self.holds,
        }


def conjugate_by_diagonal(matrix: RingMatrix, weights: Sequence[tuple[int, ...]], signs: Sequence[int]) -> RingMatrix:
    """``D^{-1} A D`` for ``D = diag(sign_i zeta^{weight_i})``."""
    lam = matrix.lam
    out = RingMatrix(lam, matrix.size)
    for i, j, value in matrix.nonzero_entries():
        key = tuple(b - a for a, b in zip(weights[i], weights[j]))
        factor = GroupRingElem.monomial(lam, key, 0, signs[i] * signs[j])
        out.set_entry(i, j, value * factor)
    return out


def fullalgebra_D(
    lam: Sequence[int], elements: dict[tuple[int, int], ExtAffineElement]
) -> ConjugationReport:
    """Solve for ``D`` from the first-row elements ``w_1j`` and test every ``w_ij``.

    ``elements`` maps 0-based index pairs ``(i, j)`` to elements with leading
    matrix a signed monomial times ``E_ij``; the pairs ``(0, j)`` fix ``D``.
    """
    lam_t = tuple(lam)
    rep = representation(lam_t)
    size = rep.size
    zero = (0,) * len(lam_t)
    weights: list[tuple[int, ...]] = [zero] * size
    signs = [1] * size
    for j in range(1, size):
        leading = rep.leading_matrix(elements[(0, j)])
        if leading.support() != [(0, j)]:
            raise CellRecognitionError(f"first-row element for column {j} is not supported on (0, {j})")
        monomial = leading.entry(0, j).is_monomial_times()
        if monomial is None:
            raise CellRecognitionError(f"first-row leading entry for column {j} is not a signed monomial")
        key, sign = monomial
        weights[j] = normalize_lambda_coords(lam_t, tuple(-c for c in key))
        signs[j] = sign
    failures = []
    for (i, j), w in sorted(elements.items()):
        conjugated = conjugate_by_diagonal(rep.leading_matrix(w), weights, signs)
        if conjugated.support() != [(i, j)] or conjugated.entry(i, j) != GroupRingElem.one(lam_t):
            failures.append((i, j))
    return ConjugationReport(lam_t, weights, signs, failures)


def search_matrix_unit_elements(lam: Sequence[int], max_length: int) -> dict[tuple[int, int], ExtAffineElement]:
    """Shortest elements whose leading matrix is a signed monomial times ``E_ij``."""
    lam_t = tuple(lam)
    rep = representation(lam_t)
    found: dict[tuple[int, int], ExtAffineElement] = {}
    for w in extended_elements_up_to(rep.n, max_length):
        leading = rep.leading_matrix(w)
        support = leading.support()
        if len(support) != 1 or support[0] in found:
            continue
        if leading.entry(*support[0]).is_monomial_times() is not None:
            found[support[0]] = w
    return found
