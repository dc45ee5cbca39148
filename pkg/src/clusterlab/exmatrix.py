"""Extended exchange matrices, ice quivers, and matrix mutation.

An extended exchange matrix is an n x r integer matrix whose top r x r
block is skew-symmetric.  Vertex indices are 1-based in every public
signature and external format; storage is 0-based row/column tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence


class SkewSymmetryError(ValueError):
    """The mutable block of a candidate matrix is not skew-symmetric."""


def _pos(z: int) -> int:
    return z if z > 0 else 0


@dataclass(frozen=True)
class ExtendedExchangeMatrix:
    """n x r integer matrix with skew-symmetric top block."""

    n: int
    r: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not 1 <= self.r <= self.n:
            raise ValueError(f"need n >= r >= 1, got n={self.n}, r={self.r}")
        if len(self.entries) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.entries)}")
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        for k, row in enumerate(rows):
            if len(row) != self.r:
                raise ValueError(f"row {k + 1} has {len(row)} entries, expected {self.r}")
        for i in range(self.r):
            for j in range(self.r):
                if rows[i][j] != -rows[j][i]:
                    raise SkewSymmetryError(
                        f"top block not skew-symmetric at (i,j)=({i + 1},{j + 1}): "
                        f"b[{i + 1}][{j + 1}]={rows[i][j]} but b[{j + 1}][{i + 1}]={rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ExtendedExchangeMatrix":
        n = len(rows)
        r = len(rows[0]) if rows else 0
        return cls(n, r, tuple(tuple(row) for row in rows))

    def entry(self, k: int, j: int) -> int:
        """b_{kj} with 1-based indices, k in 1..n, j in 1..r."""
        return self.entries[k - 1][j - 1]

    def top_block(self) -> "ExtendedExchangeMatrix":
        return ExtendedExchangeMatrix(self.r, self.r, self.entries[: self.r])

    def with_frozen_rows(
        self, rows: Sequence[Sequence[int]]
    ) -> "ExtendedExchangeMatrix":
        """Replace the frozen rows (r+1..n becomes r+len(rows))."""
        new_rows = self.entries[: self.r] + tuple(tuple(row) for row in rows)
        return ExtendedExchangeMatrix(len(new_rows), self.r, new_rows)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "matrix": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ExtendedExchangeMatrix":
        for key in ("n", "r", "matrix"):
            if key not in data:
                raise ValueError(f"matrix JSON missing key {key!r}")
        return cls(int(data["n"]), int(data["r"]), tuple(tuple(row) for row in data["matrix"]))


def mutate_matrix(m: ExtendedExchangeMatrix, i: int) -> ExtendedExchangeMatrix:
    """Matrix mutation at the mutable vertex i (1-based).

    b'_{kj} = -b_{kj} if k = i or j = i, otherwise
    b_{kj} + (b_{ki}|b_{ij}| + |b_{ki}|b_{ij}) / 2.
    """
    if not 1 <= i <= m.r:
        raise ValueError(f"mutation vertex {i} out of range 1..{m.r}")
    i0 = i - 1
    b = m.entries
    new_rows = []
    for k in range(m.n):
        row = []
        for j in range(m.r):
            if k == i0 or j == i0:
                row.append(-b[k][j])
            else:
                # b_{ij} lives in the top block since j is mutable; i is mutable
                bij = b[i0][j]
                bki = b[k][i0]
                row.append(b[k][j] + (bki * abs(bij) + abs(bki) * bij) // 2)
        new_rows.append(tuple(row))
    return ExtendedExchangeMatrix(m.n, m.r, tuple(new_rows))


@dataclass(frozen=True)
class IceQuiver:
    """Directed-graph encoding of an extended exchange matrix.

    Arrow counts are [b_{ij}]_+ for ordered pairs, with the mutable-to-frozen
    direction given by the negative transpose of the frozen rows.  Frozen
    vertices never carry arrows between each other.
    """

    n: int
    r: int
    arrows: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), count in self.arrows.items():
            if count < 0:
                raise ValueError(f"negative arrow multiplicity at ({i},{j})")
            if i > self.r and j > self.r:
                raise ValueError(f"arrows between frozen vertices {i} and {j}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"vertex pair ({i},{j}) out of range 1..{self.n}")
            if count:
                clean[(i, j)] = count
        object.__setattr__(self, "arrows", clean)

    @property
    def frozen(self) -> frozenset[int]:
        return frozenset(range(self.r + 1, self.n + 1))

    def arrow_count(self, i: int, j: int) -> int:
        return self.arrows.get((i, j), 0)


def to_ice_quiver(m: ExtendedExchangeMatrix) -> IceQuiver:
    arrows: dict[tuple[int, int], int] = {}
    for i in range(1, m.n + 1):
        for j in range(1, m.n + 1):
            if i > m.r and j > m.r:
                continue
            if j <= m.r:
                bij = m.entry(i, j)
            else:  # mutable -> frozen via -B~ transpose
                bij = -m.entry(j, i)
            if bij > 0:
                arrows[(i, j)] = bij
    return IceQuiver(m.n, m.r, arrows)


def from_ice_quiver(q: IceQuiver) -> ExtendedExchangeMatrix:
    rows = []
    for k in range(1, q.n + 1):
        rows.append(
            tuple(q.arrow_count(k, j) - q.arrow_count(j, k) for j in range(1, q.r + 1))
        )
    return ExtendedExchangeMatrix(q.n, q.r, tuple(rows))
