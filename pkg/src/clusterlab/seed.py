"""Seeds, seed mutation via the exchange relation, cluster monomials,
and re-rooted expansions.

Every seed carries its cluster variables as Laurent polynomials in the
fixed initial variables x_1..x_n, plus the mutation path that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exmatrix import ExtendedExchangeMatrix, mutate_matrix
from .laurent import InexactDivisionError, LaurentPoly, exact_div


class LaurentPhenomenonError(ArithmeticError):
    """An exchange-relation division left a remainder.

    This would falsify the Laurent phenomenon; the error carries a
    reproducer (matrix, path, vertex) so the failure can be replayed.
    """

    def __init__(self, matrix: ExtendedExchangeMatrix, path: tuple[int, ...], vertex: int):
        self.matrix = matrix
        self.path = path
        self.vertex = vertex
        super().__init__(
            "inexact division in seed mutation; reproducer: "
            f"matrix={matrix.to_json()}, path={list(path)}, vertex={vertex}"
        )


@dataclass(frozen=True)
class Seed:
    """An extended exchange matrix with cluster-variable expansions."""

    matrix: ExtendedExchangeMatrix
    variables: tuple[LaurentPoly, ...]
    path: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.variables) != self.matrix.n:
            raise ValueError(
                f"expected {self.matrix.n} variables, got {len(self.variables)}"
            )

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def r(self) -> int:
        return self.matrix.r

    @property
    def cluster(self) -> tuple[LaurentPoly, ...]:
        """The mutable variables u_1..u_r."""
        return self.variables[: self.r]

    @classmethod
    def initial(cls, matrix: ExtendedExchangeMatrix) -> "Seed":
        n = matrix.n
        return cls(matrix, tuple(LaurentPoly.variable(n, j) for j in range(1, n + 1)))

    def to_json(self) -> dict:
        data = self.matrix.to_json()
        data["path"] = list(self.path)
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "Seed":
        matrix = ExtendedExchangeMatrix.from_json(data)
        seed = cls.initial(matrix)
        path = data.get("path") or []
        return apply_path(seed, tuple(int(v) for v in path))


@dataclass(frozen=True)
class ClusterMonomial:
    """A product of cluster variables from one cluster, with nonnegative
    exponents, expanded in the initial variables."""

    seed: Seed
    exponents: tuple[int, ...]
    value: LaurentPoly

    def __post_init__(self):
        if len(self.exponents) != self.seed.r:
            raise ValueError(
                f"expected {self.seed.r} exponents, got {len(self.exponents)}"
            )
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")


def exchange_binomial(s: Seed, i: int) -> LaurentPoly:
    """The right-hand side of u_i u_i' = prod u_j^{[b_ji]+} + prod u_j^{[-b_ji]+},
    with j running over all n indices including frozen ones."""
    n = s.n
    pos = LaurentPoly.one(n)
    neg = LaurentPoly.one(n)
    for j in range(1, n + 1):
        bji = s.matrix.entry(j, i)
        if bji > 0:
            pos = pos * s.variables[j - 1] ** bji
        elif bji < 0:
            neg = neg * s.variables[j - 1] ** (-bji)
    return pos + neg


def mutate_seed(s: Seed, i: int) -> Seed:
    """Seed mutation at the mutable vertex i (1-based)."""
    if not 1 <= i <= s.r:
        raise ValueError(f"mutation vertex {i} out of range 1..{s.r}")
    binomial = exchange_binomial(s, i)
    try:
        new_var = exact_div(binomial, s.variables[i - 1])
    except InexactDivisionError as exc:
        raise LaurentPhenomenonError(s.matrix, s.path, i) from exc
    variables = list(s.variables)
    variables[i - 1] = new_var
    return Seed(mutate_matrix(s.matrix, i), tuple(variables), s.path + (i,))


def apply_path(initial: Seed, path: Sequence[int]) -> Seed:
    """Left-to-right composition of mutations."""
    s = initial
    for i in path:
        s = mutate_seed(s, i)
    return s


def cluster_monomial(s: Seed, a: Sequence[int]) -> ClusterMonomial:
    """The cluster monomial prod u_i^{a_i} of the seed s."""
    exps = tuple(int(x) for x in a)
    if len(exps) != s.r:
        raise ValueError(f"expected {s.r} exponents, got {len(exps)}")
    if any(e < 0 for e in exps):
        raise ValueError(f"cluster monomial exponents must be nonnegative: {exps}")
    value = LaurentPoly.one(s.n)
    for i, e in enumerate(exps):
        if e:
            value = value * s.variables[i] ** e
    return ClusterMonomial(s, exps, value)


def reroot_cluster(target_path: Sequence[int], base: Seed) -> Seed:
    """Express the cluster reached by target_path in the coordinates of base.

    Replays the mutation pattern from a fresh seed whose matrix is base's
    matrix: base.path reversed (walking back to the initial seed) followed
    by target_path.  The returned seed's variables are Laurent polynomials
    in base's cluster (coordinates 1..r) and the frozen variables.
    """
    fresh = Seed.initial(base.matrix)
    return apply_path(fresh, tuple(reversed(base.path)) + tuple(target_path))


def reroot_expand(target: ClusterMonomial, base: Seed) -> LaurentPoly:
    """Expansion of a cluster monomial in the cluster of base."""
    if not isinstance(target, ClusterMonomial):
        raise TypeError(
            "reroot_expand needs a path-carrying ClusterMonomial, "
            f"got {type(target).__name__}"
        )
    rerooted = reroot_cluster(target.seed.path, base)
    value = LaurentPoly.one(base.n)
    for i, e in enumerate(target.exponents):
        if e:
            value = value * rerooted.variables[i] ** e
    return value
