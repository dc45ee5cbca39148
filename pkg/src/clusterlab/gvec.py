"""Indices (g-vectors): pushforward along mutations, reduced indices,
and sign-coherence checking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exmatrix import ExtendedExchangeMatrix, mutate_matrix


@dataclass(frozen=True)
class GVector:
    """Integer index vector of length n; the reduced index is the
    truncation to the first r (mutable) coordinates."""

    full: tuple[int, ...]
    r: int

    def __post_init__(self):
        if not 0 <= self.r <= len(self.full):
            raise ValueError(f"r={self.r} out of range for length {len(self.full)}")
        object.__setattr__(self, "full", tuple(int(x) for x in self.full))

    @property
    def n(self) -> int:
        return len(self.full)

    @property
    def reduced(self) -> tuple[int, ...]:
        return self.full[: self.r]

    @classmethod
    def basis(cls, n: int, r: int, j: int) -> "GVector":
        """Standard basis vector e_j, 1-based."""
        full = [0] * n
        full[j - 1] = 1
        return cls(tuple(full), r)


def pushforward_index(
    g_prime: GVector, i: int, b_prime: ExtendedExchangeMatrix
) -> GVector:
    """Push an index at the mutated seed back to the less-mutated seed.

    b_prime is the matrix of the MUTATED seed.  Coordinates transform as
    g_j = -g'_i for j = i, and g_j = g'_j + g'_i [b'_{ji}]_+ - b'_{ji} min(g'_i, 0)
    otherwise.
    """
    if not 1 <= i <= b_prime.r:
        raise ValueError(f"vertex {i} out of range 1..{b_prime.r}")
    if g_prime.n != b_prime.n:
        raise ValueError(f"length mismatch: index {g_prime.n}, matrix {b_prime.n}")
    gi = g_prime.full[i - 1]
    neg_gi = min(gi, 0)
    out = []
    for j in range(1, g_prime.n + 1):
        if j == i:
            out.append(-gi)
        else:
            bji = b_prime.entry(j, i)
            out.append(g_prime.full[j - 1] + gi * max(bji, 0) - bji * neg_gi)
    return GVector(tuple(out), g_prime.r)


def indices_along_path(
    initial_matrix: ExtendedExchangeMatrix, path: Sequence[int]
) -> tuple[GVector, ...]:
    """Indices of the n summands of the seed reached by the path.

    Composes the pushforward backward from the path's end: summand j starts
    as e_j at the final seed and is pulled through each mutation in reverse,
    using the matrix at the more-mutated side of each step.  Frozen summands
    stay at e_j.
    """
    n, r = initial_matrix.n, initial_matrix.r
    matrices = [initial_matrix]
    for i in path:
        matrices.append(mutate_matrix(matrices[-1], i))
    result = []
    for j in range(1, n + 1):
        g = GVector.basis(n, r, j)
        if j <= r:
            for t in range(len(path), 0, -1):
                g = pushforward_index(g, path[t - 1], matrices[t])
        result.append(g)
    return tuple(result)


def check_sign_coherence(
    gs: Sequence[GVector],
) -> tuple[bool, tuple[int, int, int] | None]:
    """True iff no mutable coordinate takes both strict signs across the
    reduced indices.  On failure returns (coordinate, index_a, index_b),
    all 1-based."""
    if not gs:
        return True, None
    r = gs[0].r
    for k in range(r):
        pos = neg = None
        for idx, g in enumerate(gs):
            v = g.reduced[k]
            if v > 0 and pos is None:
                pos = idx
            elif v < 0 and neg is None:
                neg = idx
        if pos is not None and neg is not None:
            return False, (k + 1, pos + 1, neg + 1)
    return True, None
