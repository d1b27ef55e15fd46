"""
Plücker monomials on configuration points, evaluated over a prime field.

A point of ``Z_J`` is produced from matrices ``p_1, ..., p_l`` where ``p_j`` is
a random invertible matrix in the minimal parabolic ``P_{i_j}`` (upper
triangular plus the ``(i_j+1, i_j)`` entry) when ``j ∈ J`` and in the Borel
``B`` otherwise.  The ``k``-th Grassmannian coordinate is the first ``i_k``
columns of ``p_1 ⋯ p_k``.

All arithmetic is exact modulo ``p`` (default ``2^31 - 1``).  A rank equal to
the number of tableaux certifies linear independence; a smaller rank is only
inconclusive, since a random point can be unlucky with probability at most
``deg / p``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .crystal import Tableau
from .errors import ShapeError
from .standard import validate_tableau
from .weyl import Column, Shape, Subword, all_columns, bruhat_leq, column_up_to

__all__ = [
    "DEFAULT_PRIME", "Matrix", "ConfigurationPoint", "ParabolicSample",
    "det_mod", "rank_mod", "plucker_minor", "standard_monomial_eval",
    "sample_parabolic", "sample_point", "evaluation_matrix",
    "independence_rank", "certify_independence", "schubert_image_check",
    "write_csv",
]

DEFAULT_PRIME = 2**31 - 1

Matrix = list[list[int]]


def det_mod(M: Sequence[Sequence[int]], p: int = DEFAULT_PRIME) -> int:
    """Determinant of a square matrix over ``F_p`` by Gaussian elimination."""
    A = [[x % p for x in row] for row in M]
    size = len(A)
    det = 1
    for c in range(size):
        pivot = next((r for r in range(c, size) if A[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            A[c], A[pivot] = A[pivot], A[c]
            det = -det
        det = det * A[c][c] % p
        inv = pow(A[c][c], p - 2, p)
        for r in range(c + 1, size):
            if A[r][c]:
                factor = A[r][c] * inv % p
                A[r] = [(x - factor * y) % p for x, y in zip(A[r], A[c])]
    return det % p


def rank_mod(M: Sequence[Sequence[int]], p: int = DEFAULT_PRIME) -> int:
    """Rank of a rectangular matrix over ``F_p``."""
    A = [[x % p for x in row] for row in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if A[r][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][c], p - 2, p)
        for r in range(rows):
            if r != rank and A[r][c]:
                factor = A[r][c] * inv % p
                A[r] = [(x - factor * y) % p for x, y in zip(A[r], A[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def _matmul(A: Matrix, B: Matrix, p: int) -> Matrix:
    return [[sum(a * b for a, b in zip(row, col)) % p for col in zip(*B)] for row in A]


def plucker_minor(kappa: Column, x: Matrix, p: int = DEFAULT_PRIME) -> int:
    """``Δ_κ(x)``: the minor of ``x`` on rows ``κ`` (1-based)."""
    if not x or len(kappa) != len(x[0]):
        width = len(x[0]) if x else 0
        raise ShapeError(f"column of size {len(kappa)} against a matrix with {width} columns")
    return det_mod([x[r - 1] for r in kappa], p)


@dataclass(frozen=True)
class ParabolicSample:
    """The factors ``p_1, ..., p_l`` behind a configuration point."""
    subword: Subword
    factors: tuple[Matrix, ...]


@dataclass(frozen=True)
class ConfigurationPoint:
    """Homogeneous coordinates on ``Gr(i_1) × ... × Gr(i_l)``: one ``n × i_k`` matrix per position."""
    matrices: tuple[Matrix, ...]
    p: int = DEFAULT_PRIME

    def scaled_rows(self, row: int, t: int) -> ConfigurationPoint:
        """Act by the torus element scaling coordinate ``row`` by ``t``."""
        scaled = []
        for x in self.matrices:
            y = [list(r) for r in x]
            y[row - 1] = [v * t % self.p for v in y[row - 1]]
            scaled.append(y)
        return ConfigurationPoint(tuple(scaled), self.p)


def _rng(seed: int, index: int) -> np.random.Generator:
    # one independent stream per (seed, point index)
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def _random_entry(rng: np.random.Generator, p: int) -> int:
    return int(rng.integers(0, p))


def sample_parabolic(J: Subword, seed: int, index: int = 0, p: int = DEFAULT_PRIME) -> ParabolicSample:
    """Random invertible ``p_j ∈ P_{i_j}`` (``j ∈ J``) or ``p_j ∈ B`` (``j ∉ J``)."""
    rng = _rng(seed, index)
    n = J.word.n
    factors = []
    for j, a in enumerate(J.word.letters, start=1):
        while True:
            M = [[_random_entry(rng, p) if c >= r else 0 for c in range(n)] for r in range(n)]
            if j in J:
                M[a][a - 1] = _random_entry(rng, p)
            if det_mod(M, p):
                break
        factors.append(M)
    return ParabolicSample(J, tuple(factors))


def sample_point(J: Subword, seed: int, index: int = 0, p: int = DEFAULT_PRIME) -> ConfigurationPoint:
    """A seeded random point of ``Z_J`` in its Grassmannian coordinates."""
    sample = sample_parabolic(J, seed, index, p)
    n = J.word.n
    prod = [[int(r == c) for c in range(n)] for r in range(n)]
    matrices = []
    for factor, a in zip(sample.factors, J.word.letters):
        prod = _matmul(prod, factor, p)
        matrices.append([row[:a] for row in prod])
    return ConfigurationPoint(tuple(matrices), p)


def standard_monomial_eval(tau: Tableau, shape: Shape, z: ConfigurationPoint) -> int:
    """``Δ_τ(z) = ∏ Δ_{κ_{jm}}(x^{(j)})``; the empty tableau evaluates to 1."""
    if len(z.matrices) != len(shape.word):
        raise ShapeError(f"point has {len(z.matrices)} factors, shape has {len(shape.word)} positions")
    columns = validate_tableau(tau, shape)
    value = 1
    for col, k in zip(columns, shape.slots()):
        value = value * plucker_minor(col, z.matrices[k - 1], z.p) % z.p
    return value % z.p


def evaluation_matrix(tableaux: Sequence[Tableau], shape: Shape, Js: Sequence[Subword],
                      points_per_component: int, seed: int, p: int = DEFAULT_PRIME) -> list[list[int]]:
    """Rows are sampled points (``points_per_component`` per subword), columns are tableaux."""
    rows = []
    index = 0
    for J in Js:
        for _ in range(points_per_component):
            z = sample_point(J, seed, index, p)
            rows.append([standard_monomial_eval(tau, shape, z) for tau in tableaux])
            index += 1
    return rows


def independence_rank(tableaux: Sequence[Tableau], shape: Shape, Js: Sequence[Subword],
                      points_per_component: int, seed: int, p: int = DEFAULT_PRIME) -> int:
    """Rank over ``F_p`` of the standard monomials sampled on ``Z_{J_1} ∪ Z_{J_2} ∪ ...``."""
    tableaux = list(tableaux)
    return rank_mod(evaluation_matrix(tableaux, shape, Js, points_per_component, seed, p), p)


def certify_independence(tableaux: Sequence[Tableau], shape: Shape, Js: Sequence[Subword],
                         points_per_component: int, seed: int, reseeds: int = 3,
                         p: int = DEFAULT_PRIME) -> tuple[bool, int, int]:
    """
    Try ``seed, seed+1, ...`` (at most ``1 + reseeds`` draws) until the rank is full.

    Returns ``(certified, best_rank, seed_used)``.
    """
    tableaux = list(tableaux)
    best = -1
    for attempt in range(reseeds + 1):
        rank = independence_rank(tableaux, shape, Js, points_per_component, seed + attempt, p)
        best = max(best, rank)
        if rank == len(tableaux):
            return True, rank, seed + attempt
    return False, best, seed + reseeds


def schubert_image_check(J: Subword, k: int, trials: int, seed: int, p: int = DEFAULT_PRIME) -> bool:
    """
    ``μ_k(Z_J)`` lies in the Schubert variety of ``κ_max = w_max(J∩[k])·ω_{i_k}``.

    On every sample the minors ``Δ_{κ'}`` with ``κ' ≰ κ_max`` vanish, and
    ``Δ_{κ_max}`` is nonzero on at least one sample.
    """
    kmax = column_up_to(J, k, "max")
    outside = [c for c in all_columns(len(kmax), J.word.n) if not bruhat_leq(c, kmax)]
    seen_top = False
    for trial in range(trials):
        x = sample_point(J, seed, trial, p).matrices[k - 1]
        if any(plucker_minor(c, x, p) for c in outside):
            return False
        seen_top = seen_top or plucker_minor(kmax, x, p) != 0
    return seen_top


def write_csv(matrix: Sequence[Sequence[int]], path: str) -> None:
    """Dump an evaluation matrix as CSV residues."""
    with open(path, "w", newline="") as fh:
        csv.writer(fh).writerows(matrix)
