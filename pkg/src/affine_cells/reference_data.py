"""Published reference values used by the verification suites.

The rank 3 data is for ``lam = (2, 2)``: basis order
``[s2, e, s2s1, s2s3, s2s1s3, s2s1s3s2]``, the five generator matrices, six
distinguished involutions, the matrix-unit elements ``w_ij`` and the
diagonal conjugating matrix.  Matrix cells use the tokens ``Q`` for
``q - q^{-1}``, ``v`` for ``-q^{-1}`` and ``z1``, ``z2``, ``z1/z2``, ``z2/z1``.
"""

from __future__ import annotations

from .rings import GroupRingElem, LaurentQPoly, Q_MINUS_Q_INV, RingMatrix
from .weyl import ExtAffineElement, from_word

RANK3_LAMBDA = (2, 2)
RANK3_BASIS_LABELS = ["s2", "e", "s2s1", "s2s3", "s2s1s3", "s2s1s3s2"]

RANK3_GENERATORS = {
    "T1": """
        Q 0 1 0 0 0
        0 v 0 0 0 0
        1 0 0 0 0 0
        0 0 0 Q 1 0
        0 0 0 1 0 0
        0 0 0 0 0 v
    """,
    "T2": """
        0 1 0 0 0 0
        1 Q 0 0 0 0
        0 0 v 0 0 0
        0 0 0 v 0 0
        0 0 0 0 Q 1
        0 0 0 0 1 0
    """,
    "T3": """
        Q 0 0 1 0 0
        0 v 0 0 0 0
        0 0 Q 0 1 0
        1 0 0 0 0 0
        0 0 1 0 0 0
        0 0 0 0 0 v
    """,
    "T0": """
        0 0 0 0 0 z1/z2
        0 0 0 0 z1/z2 0
        0 0 v 0 0 0
        0 0 0 v 0 0
        0 z2/z1 0 0 Q 0
        z2/z1 0 0 0 0 Q
    """,
    "Tsigma": """
        0 0 0 0 z1 0
        0 0 0 z1 0 0
        0 z2 0 0 0 0
        0 0 0 0 0 z1
        z2 0 0 0 0 0
        0 0 z2 0 0 0
    """,
}

# words as (letters, sigma power)
RANK3_INVOLUTIONS = [
    ("13", 0),
    ("2132", 0),
    ("3203", 0),
    ("1201", 0),
    ("02", 0),
    ("0130", 0),
]

RANK3_MATRIX_UNIT_WORDS = {
    (1, 2): ("132", 0),
    (1, 3): ("130", 1),
    (1, 4): ("132", 1),
    (1, 5): ("13", 1),
    (1, 6): ("132", 2),
    (2, 3): ("2130", 1),
    (2, 4): ("2132", 1),
    (2, 5): ("213", 1),
    (2, 6): ("2132", 2),
    (3, 4): ("3201", 0),
    (3, 5): ("320", 0),
    (3, 6): ("3201", 1),
    (4, 5): ("120", 0),
    (4, 6): ("1201", 1),
    (5, 6): ("201", 1),
}

# c(w_1j) = c_1j E_1j with c_1j a monomial in z1 (exponent of z1)
RANK3_FIRST_ROW_EXPONENTS = {2: 0, 3: 1, 4: 1, 5: 1, 6: 2}

# D = diag(1, 1, z1^-1, z1^-1, z1^-1, z1^-2) as z1 exponents
RANK3_D_EXPONENTS = [0, 0, -1, -1, -1, -2]

# w = s2 s0 s1 s3 s2 s0 s1 s3 s2 s0 sigma^2, stated to give s_{5e1+e2} E_56
RANK3_SCHUR_EXAMPLE_WORD = ("2013201320", 2)
RANK3_SCHUR_EXAMPLE_WEIGHT = (5, 1)
RANK3_SCHUR_EXAMPLE_POSITION = (5, 6)

# rank 4 spot values for lam = (2, 1, 1, 1) and the word 434234123
RANK4_LAMBDA = (2, 1, 1, 1)
RANK4_WORD = [4, 3, 4, 2, 3, 4, 1, 2, 3]
RANK4_COLUMN_WORD = [2, 3, 4]
RANK4_ENTRY_E_COLUMN = {6: 1, 4: -3, 2: 4, 0: -4, -2: 4, -4: -3, -6: 1}
RANK4_ENTRY_E_E = {1: -1, -1: 2, -5: -3, -7: 3, -9: -1}
RANK4_PATH_COUNT = 14

# the folded path with 8 folds and 1 bounce has Q = -q^-1 (q - q^-1)^8
RANK4_FOLDS_BOUNCES = (8, 1)

# an appendix example: lam = (4, 2), gamma = 2e1 + e2
APPENDIX_LAMBDA = (4, 2)
APPENDIX_WEIGHT = (2, 1)
APPENDIX_LENGTH = 2
APPENDIX_WORD = ([1, 4], 3)


def parse_cell(lam: tuple[int, ...], token: str) -> GroupRingElem:
    if token == "0":
        return GroupRingElem.zero(lam)
    if token == "1":
        return GroupRingElem.one(lam)
    if token == "Q":
        return GroupRingElem.scalar(lam, Q_MINUS_Q_INV)
    if token == "v":
        return GroupRingElem.scalar(lam, LaurentQPoly.monomial(-1, -1))
    monomials = {"z1": (1, 0), "z2": (0, 1), "z1/z2": (1, -1), "z2/z1": (-1, 1)}
    if token in monomials:
        return GroupRingElem.monomial(lam, monomials[token])
    raise ValueError(f"unknown matrix token {token!r}")


def parse_matrix(lam: tuple[int, ...], text: str) -> RingMatrix:
    rows = [line.split() for line in text.strip().splitlines()]
    size = len(rows)
    entries = {}
    for i, row in enumerate(rows):
        if len(row) != size:
            raise ValueError("matrix text is not square")
        for j, token in enumerate(row):
            entries[(i, j)] = parse_cell(lam, token)
    return RingMatrix.from_entries(lam, size, entries)


def element(n: int, word: tuple[str, int]) -> ExtAffineElement:
    letters, power = word
    return from_word(n, [int(c) for c in letters], power)
