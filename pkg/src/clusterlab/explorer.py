"""Exchange-graph and cluster-complex construction with canonical seed
deduplication, plus coefficient-independence comparison of patterns.

Seeds are identified up to simultaneous renumbering of the r mutable
indices; frozen indices never permute.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exmatrix import ExtendedExchangeMatrix
from .gvec import GVector, indices_along_path
from .laurent import LaurentPoly
from .seed import Seed, mutate_seed

DEFAULT_MAX_SEEDS = 100000


def default_max_seeds() -> int:
    value = os.environ.get("CLUSTERLAB_MAX_SEEDS")
    return int(value) if value else DEFAULT_MAX_SEEDS


class TruncatedGraphError(ValueError):
    """An operation required a completely explored exchange graph."""


@dataclass(frozen=True)
class CanonicalSeedKey:
    """Canonical form of a seed: mutable variables in canonical order plus
    the correspondingly permuted matrix (lex-least among tie permutations)."""

    variables: tuple[LaurentPoly, ...]
    matrix: ExtendedExchangeMatrix

    def sort_key(self) -> tuple:
        return (tuple(v.sort_key() for v in self.variables), self.matrix.entries)


def _permute_matrix(
    m: ExtendedExchangeMatrix, perm: Sequence[int]
) -> tuple[tuple[int, ...], ...]:
    """Entries of m with mutable rows and columns reordered by perm
    (new position p holds old index perm[p]); frozen rows keep their place."""
    rows = []
    for k in range(m.n):
        src = perm[k] if k < m.r else k
        rows.append(tuple(m.entries[src][perm[j]] for j in range(m.r)))
    return tuple(rows)


def canonical_key(s: Seed) -> CanonicalSeedKey:
    r = s.r
    order = sorted(range(r), key=lambda i: s.variables[i].sort_key())
    variables = tuple(s.variables[i] for i in order)
    # tie groups: equal variables may be permuted among themselves
    groups: list[list[int]] = []
    for pos, idx in enumerate(order):
        if pos and s.variables[idx] == s.variables[order[pos - 1]]:
            groups[-1].append(idx)
        else:
            groups.append([idx])
    if all(len(g) == 1 for g in groups):
        best = _permute_matrix(s.matrix, order)
    else:
        best = None
        for arrangement in itertools.product(
            *(itertools.permutations(g) for g in groups)
        ):
            perm = [i for block in arrangement for i in block]
            candidate = _permute_matrix(s.matrix, perm)
            if best is None or candidate < best:
                best = candidate
    matrix = ExtendedExchangeMatrix(s.matrix.n, r, best)
    return CanonicalSeedKey(variables, matrix)


@dataclass(frozen=True)
class VertexRecord:
    seed: Seed
    path: tuple[int, ...]
    depth: int
    gvectors: tuple[GVector, ...]

    def reduced_indices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.reduced for g in self.gvectors[: self.seed.r])


@dataclass
class ExchangeGraphRecord:
    initial_key: CanonicalSeedKey
    vertices: dict[CanonicalSeedKey, VertexRecord]
    adjacency: dict[CanonicalSeedKey, dict[int, CanonicalSeedKey]]
    complete: bool
    max_depth_reached: int = 0
    frontier_sizes: list[int] = field(default_factory=list)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[CanonicalSeedKey, int, CanonicalSeedKey]]:
        """Each unordered edge once, labelled by the mutation vertex seen
        from its lower-id endpoint."""
        ids = self.key_ids()
        seen: set[frozenset] = set()
        out = []
        for a in sorted(self.adjacency, key=lambda k: ids[k]):
            for i, b in sorted(self.adjacency[a].items()):
                pair = frozenset((ids[a], ids[b]))
                if pair not in seen:
                    seen.add(pair)
                    out.append((a, i, b))
        return out

    def num_edges(self) -> int:
        return len(self.edges())

    def key_ids(self) -> dict[CanonicalSeedKey, int]:
        ordered = sorted(self.vertices, key=lambda k: k.sort_key())
        return {k: i for i, k in enumerate(ordered)}

    def cluster_variables(self) -> set[LaurentPoly]:
        out: set[LaurentPoly] = set()
        for key in self.vertices:
            out.update(key.variables)
        return out

    def is_regular(self) -> bool:
        """Every expanded vertex has exactly r distinct neighbors."""
        r = self.initial_key.matrix.r
        return all(
            len(set(nbrs.values())) == r for nbrs in self.adjacency.values()
        )

    def to_json(self) -> dict:
        ids = self.key_ids()
        vertices = []
        for key, rec in sorted(self.vertices.items(), key=lambda kv: ids[kv[0]]):
            vertices.append(
                {
                    "key_id": ids[key],
                    "variables": [v.render() for v in key.variables],
                    "reduced_indices": [list(g) for g in rec.reduced_indices()],
                    "path": list(rec.path),
                }
            )
        edges = [[ids[a], i, ids[b]] for a, i, b in self.edges()]
        return {"vertices": vertices, "edges": edges, "complete": self.complete}

    def to_dot(self) -> str:
        ids = self.key_ids()
        lines = ["graph exchange {"]
        for key, i in sorted(ids.items(), key=lambda kv: kv[1]):
            label = ", ".join(v.render() for v in key.variables)
            lines.append(f'  n{i} [label="{label}"];')
        for a, i, b in self.edges():
            lines.append(f'  n{ids[a]} -- n{ids[b]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def explore(
    initial: Seed,
    max_seeds: int | None = None,
    max_depth: int | None = None,
) -> ExchangeGraphRecord:
    """Breadth-first closure of the initial seed under mutation with
    canonical-key deduplication.  Hitting a limit flags the record as
    truncated rather than raising."""
    if max_seeds is None:
        max_seeds = default_max_seeds()
    if max_seeds <= 0 or (max_depth is not None and max_depth < 0):
        raise ValueError("limits must be positive")
    root_matrix = initial.matrix
    init_key = canonical_key(initial)
    vertices: dict[CanonicalSeedKey, VertexRecord] = {
        init_key: VertexRecord(initial, (), 0, indices_along_path(root_matrix, ()))
    }
    adjacency: dict[CanonicalSeedKey, dict[int, CanonicalSeedKey]] = {}
    queue: deque[CanonicalSeedKey] = deque([init_key])
    complete = True
    max_reached = 0
    while queue:
        key = queue.popleft()
        rec = vertices[key]
        if max_depth is not None and rec.depth >= max_depth:
            complete = False
            continue
        nbrs: dict[int, CanonicalSeedKey] = {}
        for i in range(1, initial.r + 1):
            nxt = mutate_seed(rec.seed, i)
            nxt_key = canonical_key(nxt)
            if nxt_key not in vertices:
                if len(vertices) >= max_seeds:
                    # neighbor stays outside the record; don't point at it
                    complete = False
                    continue
                path = rec.path + (i,)
                vertices[nxt_key] = VertexRecord(
                    nxt, path, rec.depth + 1, indices_along_path(root_matrix, path)
                )
                max_reached = max(max_reached, rec.depth + 1)
                queue.append(nxt_key)
            nbrs[i] = nxt_key
        adjacency[key] = nbrs
    depth_counts: dict[int, int] = {}
    for rec in vertices.values():
        depth_counts[rec.depth] = depth_counts.get(rec.depth, 0) + 1
    frontier_sizes = [depth_counts[d] for d in sorted(depth_counts)]
    return ExchangeGraphRecord(
        init_key, vertices, adjacency, complete, max_reached, frontier_sizes
    )


@dataclass(frozen=True)
class ClusterComplex:
    """Simplicial complex: cluster variables as vertices, clusters as
    maximal simplices."""

    vertices: tuple[LaurentPoly, ...]
    facets: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_facets(self) -> int:
        return len(self.facets)


def cluster_complex(
    g: ExchangeGraphRecord, allow_truncated: bool = False
) -> ClusterComplex:
    if not g.complete and not allow_truncated:
        raise TruncatedGraphError(
            "cluster complex of a truncated exploration; pass allow_truncated=True "
            "to accept the explored portion"
        )
    vertices = sorted(g.cluster_variables(), key=LaurentPoly.sort_key)
    facets = sorted(
        (tuple(key.variables) for key in g.vertices),
        key=lambda fs: tuple(v.sort_key() for v in fs),
    )
    return ClusterComplex(tuple(vertices), tuple(facets))


@dataclass
class ComparisonReport:
    isomorphic: bool
    complexes_isomorphic: bool
    base_vertices: int
    other_vertices: int
    complete: bool
    counterexample: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "complexes_isomorphic": self.complexes_isomorphic,
            "base_vertices": self.base_vertices,
            "other_vertices": self.other_vertices,
            "complete": self.complete,
            "counterexample": [list(p) for p in self.counterexample]
            if self.counterexample
            else None,
            "detail": self.detail,
        }


def compare_patterns(
    base: ExtendedExchangeMatrix,
    other: ExtendedExchangeMatrix,
    max_seeds: int | None = None,
    max_depth: int | None = None,
) -> ComparisonReport:
    """Verify that two patterns sharing a mutable block identify the same
    mutation paths: two paths reach the same canonical seed in one pattern
    iff they do in the other, with a compatible cluster-variable bijection.

    Runs a joint breadth-first walk over path space; the path-quotient
    comparison is sound because both explorations share the initial seed's
    path alphabet."""
    if base.entries[: base.r] != other.entries[: other.r]:
        raise ValueError("patterns must share the same top r x r block")
    if max_seeds is None:
        max_seeds = default_max_seeds()
    r = base.r
    sa = Seed.initial(base)
    sb = Seed.initial(other)
    ka, kb = canonical_key(sa), canonical_key(sb)
    map_ab: dict[CanonicalSeedKey, CanonicalSeedKey] = {ka: kb}
    map_ba: dict[CanonicalSeedKey, CanonicalSeedKey] = {kb: ka}
    paths: dict[CanonicalSeedKey, tuple[int, ...]] = {ka: ()}
    var_ab: dict[LaurentPoly, LaurentPoly] = {}
    var_ba: dict[LaurentPoly, LaurentPoly] = {}
    vars_consistent = True
    var_detail = ""

    def record_vars(seed_a: Seed, seed_b: Seed) -> None:
        nonlocal vars_consistent, var_detail
        for pos in range(r):
            va, vb = seed_a.variables[pos], seed_b.variables[pos]
            if var_ab.setdefault(va, vb) != vb or var_ba.setdefault(vb, va) != va:
                vars_consistent = False
                var_detail = (
                    f"cluster variable map inconsistent at position {pos + 1}, "
                    f"path {list(seed_a.path)}"
                )

    record_vars(sa, sb)
    queue: deque[tuple[Seed, Seed]] = deque([(sa, sb)])
    complete = True
    mismatch: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    while queue and mismatch is None:
        cur_a, cur_b = queue.popleft()
        if max_depth is not None and len(cur_a.path) >= max_depth:
            complete = False
            continue
        for i in range(1, r + 1):
            nxt_a = mutate_seed(cur_a, i)
            nxt_b = mutate_seed(cur_b, i)
            na, nb = canonical_key(nxt_a), canonical_key(nxt_b)
            known_a, known_b = na in map_ab, nb in map_ba
            if known_a or known_b:
                if not known_a or not known_b or map_ab[na] != nb:
                    # the two patterns identify different path pairs
                    earlier = paths.get(na) or paths.get(map_ba.get(nb, nb), ())
                    mismatch = (earlier, nxt_a.path)
                    break
                continue
            if len(map_ab) >= max_seeds:
                complete = False
                continue
            map_ab[na] = nb
            map_ba[nb] = na
            paths[na] = nxt_a.path
            record_vars(nxt_a, nxt_b)
            queue.append((nxt_a, nxt_b))
    iso = mismatch is None and complete
    return ComparisonReport(
        isomorphic=iso,
        complexes_isomorphic=iso and vars_consistent,
        base_vertices=len(map_ab),
        other_vertices=len(map_ba),
        complete=complete,
        counterexample=mismatch,
        detail=var_detail if not vars_consistent else ("" if iso else "path quotient mismatch" if mismatch else "truncated"),
    )
