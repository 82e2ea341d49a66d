"""Schur polynomial evaluation at tuples of roots of unity.

Index tuples are stored in doubled form: an index set element
I = (i_1 < ... < i_k) with i_j integers (k odd) or half-integers (k even) is
kept as the tuple of exact integers d_j = 2*i_j.  Complex numbers appear
only at evaluation time.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from .combinatorics import GrassmannianParams, Partition, enumerate_partitions

TAU_ALG = 1e-9  # absolute/relative tolerance for complex identities

SpectralIndex = tuple[int, ...]  # doubled exponents, strictly increasing


def enumerate_indices(params: GrassmannianParams) -> list[SpectralIndex]:
    """All normalized exponent tuples, lexicographically, count = rank.

    Doubled values run over -(k-1), -(k-1)+2, ..., 2n-(k+1): exactly n
    candidates of the correct parity, from which k distinct are chosen.
    """
    k, n = params.k, params.n
    pool = range(-(k - 1), 2 * n - (k + 1) + 1, 2)
    return [tuple(c) for c in combinations(pool, k)]


def central_index(params: GrassmannianParams) -> SpectralIndex:
    """The symmetric tuple (-(k-1)/2, ..., (k-1)/2), doubled."""
    k = params.k
    return tuple(range(-(k - 1), k - 1 + 1, 2))


def roots_tuple(I: SpectralIndex, params: GrassmannianParams) -> np.ndarray:
    """The k-tuple (e^{i pi d_j / n})_j of n-th roots of (-1)^{k+1}."""
    d = np.asarray(I, dtype=float)
    return np.exp(1j * np.pi * d / params.n)


def power_sums(x, m_max: int) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    return np.array([np.sum(x ** j) for j in range(1, m_max + 1)])


def homogeneous_table(x, m_max: int) -> np.ndarray:
    """h_0, ..., h_{m_max} evaluated at x via Newton's identity
    m*h_m = sum_{j=1..m} p_j h_{m-j}."""
    p = power_sums(x, m_max)
    h = np.zeros(m_max + 1, dtype=complex)
    h[0] = 1.0
    for m in range(1, m_max + 1):
        h[m] = np.dot(p[:m], h[m - 1::-1]) / m
    return h


def complete_homogeneous(x, m: int) -> complex:
    """h_m(x); zero for negative m, one for m = 0."""
    if m < 0:
        return 0.0 + 0.0j
    return homogeneous_table(x, m)[m]


def _jacobi_trudi_matrix(lam: Partition, h: np.ndarray) -> np.ndarray:
    k = len(lam)
    mat = np.zeros((k, k), dtype=complex)
    for r in range(k):
        for c in range(k):
            e = lam[r] - r + c
            if e >= 0:
                mat[r, c] = h[e]
    return mat


def schur_eval(lam: Partition, x) -> complex:
    """Jacobi-Trudi determinant det(h_{lam_r - r + c}) at the point x."""
    x = np.asarray(x, dtype=complex)
    k = len(x)
    if len(lam) != k:
        raise ValueError("partition length must match tuple length")
    h = homogeneous_table(x, max(lam[0] + k - 1, 0))
    return complex(np.linalg.det(_jacobi_trudi_matrix(lam, h)))


def schur_values(lams: list[Partition], x) -> np.ndarray:
    """schur_eval for many partitions at one point, via a stacked determinant."""
    x = np.asarray(x, dtype=complex)
    k = len(x)
    m_max = max((lam[0] for lam in lams), default=0) + k - 1
    h = homogeneous_table(x, max(m_max, 0))
    mats = np.stack([_jacobi_trudi_matrix(lam, h) for lam in lams])
    return np.linalg.det(mats)


@lru_cache(maxsize=64)
def _box_exponents(params: GrassmannianParams) -> np.ndarray:
    """Stacked Jacobi-Trudi exponent array over all box partitions,
    shape (rank, k, k); negative entries mark vanishing h's."""
    k = params.k
    lams = enumerate_partitions(params)
    return np.array([[[lam[r] - r + c for c in range(k)] for r in range(k)]
                     for lam in lams])


def schur_values_box(params: GrassmannianParams, x) -> np.ndarray:
    """Schur values at the point x for every box partition, canonical order.

    Same result as schur_values over enumerate_partitions but with the
    matrix assembly vectorized and cached per instance.
    """
    E = _box_exponents(params)
    h = homogeneous_table(x, int(E.max()))
    mats = np.where(E >= 0, h[np.maximum(E, 0)], 0.0)
    return np.linalg.det(mats)


def rietsch_eigenvector(I: SpectralIndex, params: GrassmannianParams) -> np.ndarray:
    """Coordinate vector of the eigenbasis element labeled by I: the
    conjugated Schur values over all box partitions in canonical order."""
    return np.conj(schur_values_box(params, roots_tuple(I, params)))
