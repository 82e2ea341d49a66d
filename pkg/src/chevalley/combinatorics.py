"""Partitions in the k x (n-k) box: the index set of Schubert classes of Gr(k,n).

A partition is a plain tuple of exactly k weakly decreasing nonnegative
integers with first part at most n-k.  The canonical ordering used for all
matrix indexing is: graded by weight, lexicographically descending within
each weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InstanceTooLargeError

DEFAULT_RANK_CAP = 100_000

Partition = tuple[int, ...]


@dataclass(frozen=True)
class GrassmannianParams:
    """The pair (k, n) defining Gr(k,n), with derived quantities."""

    k: int
    n: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n - 1):
            raise ValueError(f"need 1 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def rank(self) -> int:
        return comb(self.n, self.k)

    @property
    def fano_index(self) -> int:
        return self.n

    @property
    def box_width(self) -> int:
        return self.n - self.k

    def dual(self) -> "GrassmannianParams":
        """Parameters of the isomorphic Grassmannian Gr(n-k, n)."""
        return GrassmannianParams(self.n - self.k, self.n)


def is_valid_partition(lam: Partition, params: GrassmannianParams) -> bool:
    if len(lam) != params.k:
        return False
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        return False
    return 0 <= lam[-1] and lam[0] <= params.box_width


def _boxed(rows: int, width: int):
    if rows == 0:
        yield ()
        return
    for first in range(width, -1, -1):
        for rest in _boxed(rows - 1, first):
            yield (first,) + rest


def enumerate_partitions(params: GrassmannianParams,
                         rank_cap: int = DEFAULT_RANK_CAP) -> list[Partition]:
    """All partitions in the k x (n-k) box in canonical order.

    Canonical order: increasing weight, then lexicographically descending
    within a weight class.  Length is always binomial(n, k).
    """
    if params.rank > rank_cap:
        raise InstanceTooLargeError(
            f"rank C({params.n},{params.k}) = {params.rank} exceeds cap {rank_cap}")
    parts = list(_boxed(params.k, params.box_width))
    parts.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    return parts


def covers(lam: Partition, params: GrassmannianParams) -> list[Partition]:
    """Partitions obtained from lam by adding one box, staying in the box."""
    out = []
    for i in range(params.k):
        ceiling = params.box_width if i == 0 else lam[i - 1]
        if lam[i] < ceiling:
            out.append(lam[:i] + (lam[i] + 1,) + lam[i + 1:])
    return out


def quantum_target(lam: Partition, params: GrassmannianParams) -> Partition | None:
    """The q-edge target: strip the full first row and one box from each
    remaining row.  Exists only when the first row is full and the last row
    is nonempty; always returned with exactly k parts (trailing zero)."""
    if lam[0] != params.box_width or lam[-1] == 0:
        return None
    return tuple(x - 1 for x in lam[1:]) + (0,)


def dual_partition(lam: Partition, params: GrassmannianParams) -> Partition:
    """Conjugate (transpose) diagram, a partition for Gr(n-k, n)."""
    return tuple(sum(1 for x in lam if x > j) for j in range(params.box_width))
