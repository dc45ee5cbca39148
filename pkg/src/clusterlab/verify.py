"""Machine verification of the structural theorems on desk-scale instances:
proper Laurent monomial property, linear independence of cluster monomials,
non-invertibility of off-cluster variables, maximal product-closed sets,
and seeds-determined-by-clusters."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Sequence

from .explorer import CanonicalSeedKey, ExchangeGraphRecord, TruncatedGraphError
from .laurent import LaurentPoly
from .seed import Seed, reroot_cluster


@dataclass
class VerificationReport:
    name: str
    instance: str
    outcome: str  # "pass" | "fail" | "truncated"
    witness: dict | None = None
    counts: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "instance": self.instance,
            "outcome": self.outcome,
            "witness": self.witness,
            "counts": self.counts,
            "elapsed": round(self.elapsed, 6),
        }


def bounded_exponents(r: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors in {0..bound}^r with total degree <= bound."""

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 0:
            yield tuple(prefix)
            return
        for e in range(remaining + 1):
            prefix.append(e)
            yield from rec(prefix, remaining - e, slots - 1)
            prefix.pop()

    yield from rec([], bound, r)


def _require_complete(g: ExchangeGraphRecord, what: str) -> None:
    if not g.complete:
        raise TruncatedGraphError(f"{what} requires a completely explored graph")


def _is_proper(poly: LaurentPoly, r: int) -> tuple[bool, tuple[int, ...] | None]:
    """True iff every term has a negative exponent on some mutable
    coordinate; frozen exponents are coefficient data and are ignored."""
    for exps, _ in poly.term_map().items():
        if not any(e < 0 for e in exps[:r]):
            return False, exps
    return True, None


def check_proper_laurent(
    g: ExchangeGraphRecord,
    base_key: CanonicalSeedKey,
    degree_bound: int,
    instance: str = "",
) -> VerificationReport:
    """For every seed t and every monomial of degree <= degree_bound in
    which some variable outside the base cluster has positive exponent,
    assert the expansion rerooted at base is a combination of proper
    Laurent monomials in the base cluster."""
    start = time.perf_counter()
    _require_complete(g, "check_proper_laurent")
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    base_rec = g.vertices[base_key]
    base_seed = base_rec.seed
    r = base_seed.r
    base_cluster = set(base_seed.cluster)
    checked = 0
    for t_key, t_rec in g.vertices.items():
        t_seed = t_rec.seed
        outside = [v not in base_cluster for v in t_seed.cluster]
        if not any(outside):
            continue  # the base seed itself (seeds determined by clusters)
        rerooted = reroot_cluster(t_rec.path, base_seed)
        # cache powers of the rerooted variables
        powers: list[list[LaurentPoly]] = [
            [LaurentPoly.one(base_seed.n)] for _ in range(r)
        ]
        for i in range(r):
            for _ in range(degree_bound):
                powers[i].append(powers[i][-1] * rerooted.variables[i])
        for a in bounded_exponents(r, degree_bound):
            if sum(a) == 0:
                continue
            if not any(a[i] > 0 and outside[i] for i in range(r)):
                continue  # monomial supported inside the base cluster: exempt
            value = LaurentPoly.one(base_seed.n)
            for i, e in enumerate(a):
                if e:
                    value = value * powers[i][e]
            checked += 1
            proper, bad_term = _is_proper(value, r)
            if not proper:
                return VerificationReport(
                    "proper_laurent",
                    instance,
                    "fail",
                    witness={
                        "base_path": list(base_rec.path),
                        "seed_path": list(t_rec.path),
                        "exponents": list(a),
                        "offending_term": list(bad_term),
                    },
                    counts={"monomials_checked": checked},
                    elapsed=time.perf_counter() - start,
                )
    return VerificationReport(
        "proper_laurent",
        instance,
        "pass",
        counts={"monomials_checked": checked, "seeds": g.num_vertices},
        elapsed=time.perf_counter() - start,
    )


def exact_rank(rows: Sequence[dict[Hashable, int]]) -> int:
    """Rank of a sparse integer matrix by fraction-free (Bareiss-style)
    elimination; all arithmetic is exact."""
    work = [dict(row) for row in rows if any(row.values())]
    prev = 1
    rank = 0
    while work:
        pivot_row = min(work, key=lambda row: (len(row), sorted(row)))
        col = min(pivot_row)
        p = pivot_row[col]
        work.remove(pivot_row)
        rank += 1
        reduced = []
        for row in work:
            f = row.get(col, 0)
            new: dict[Hashable, int] = {}
            for k in row.keys() | pivot_row.keys():
                if k == col:
                    continue
                v = p * row.get(k, 0) - f * pivot_row.get(k, 0)
                if v % prev:
                    raise ArithmeticError("fraction-free elimination invariant broken")
                v //= prev
                if v:
                    new[k] = v
            if new:
                reduced.append(new)
        work = reduced
        prev = p
    return rank


def enumerate_cluster_monomials(
    g: ExchangeGraphRecord, degree_bound: int
) -> list[LaurentPoly]:
    """All distinct cluster monomials of total degree <= degree_bound,
    deduplicated across clusters by exact equality."""
    seen: set[LaurentPoly] = set()
    out: list[LaurentPoly] = []
    for rec in g.vertices.values():
        s = rec.seed
        for a in bounded_exponents(s.r, degree_bound):
            value = LaurentPoly.one(s.n)
            for i, e in enumerate(a):
                if e:
                    value = value * s.variables[i] ** e
            if value not in seen:
                seen.add(value)
                out.append(value)
    return out


def check_linear_independence(
    g: ExchangeGraphRecord, degree_bound: int, instance: str = ""
) -> VerificationReport:
    """Exact rank of the coefficient matrix of all cluster monomials of
    bounded degree must equal the number of distinct monomials."""
    start = time.perf_counter()
    _require_complete(g, "check_linear_independence")
    monomials = enumerate_cluster_monomials(g, degree_bound)
    rows = [dict(m.term_map()) for m in monomials]
    rank = exact_rank(rows)
    ok = rank == len(monomials)
    return VerificationReport(
        "linear_independence",
        instance,
        "pass" if ok else "fail",
        witness=None if ok else {"rank": rank, "monomials": len(monomials)},
        counts={"monomials": len(monomials), "rank": rank},
        elapsed=time.perf_counter() - start,
    )


def _is_laurent_monomial(poly: LaurentPoly) -> bool:
    # a single term with coefficient +-1, per the invertibility reading
    return poly.is_unit_monomial()


def check_not_laurent_monomial(
    g: ExchangeGraphRecord, instance: str = ""
) -> VerificationReport:
    """Every cluster variable, rerooted at any cluster it does not belong
    to, must not be a Laurent monomial (unit) there."""
    start = time.perf_counter()
    _require_complete(g, "check_not_laurent_monomial")
    # one representative (seed, position) per distinct variable
    reps: dict[LaurentPoly, tuple[CanonicalSeedKey, int]] = {}
    for key, rec in g.vertices.items():
        for pos, v in enumerate(rec.seed.cluster):
            reps.setdefault(v, (key, pos))
    checked = 0
    for base_key, base_rec in g.vertices.items():
        base_seed = base_rec.seed
        base_cluster = set(base_seed.cluster)
        reroot_cache: dict[CanonicalSeedKey, Seed] = {}
        for y, (t_key, pos) in reps.items():
            if y in base_cluster:
                continue
            if t_key not in reroot_cache:
                reroot_cache[t_key] = reroot_cluster(
                    g.vertices[t_key].path, base_seed
                )
            expansion = reroot_cache[t_key].variables[pos]
            checked += 1
            if _is_laurent_monomial(expansion):
                return VerificationReport(
                    "not_laurent_monomial",
                    instance,
                    "fail",
                    witness={
                        "variable": y.render(),
                        "base_path": list(base_rec.path),
                        "expansion": expansion.render(),
                    },
                    counts={"pairs_checked": checked},
                    elapsed=time.perf_counter() - start,
                )
    return VerificationReport(
        "not_laurent_monomial",
        instance,
        "pass",
        counts={"pairs_checked": checked},
        elapsed=time.perf_counter() - start,
    )


def check_maximal_sets(
    g: ExchangeGraphRecord,
    product_exponent_cap: int = 2,
    instance: str = "",
) -> VerificationReport:
    """Exhaustive subset scan: every maximal set of cluster variables whose
    finite products (exponents up to the cap) are all cluster monomials
    must be a cluster."""
    start = time.perf_counter()
    _require_complete(g, "check_maximal_sets")
    variables = sorted(g.cluster_variables(), key=LaurentPoly.sort_key)
    nv = len(variables)
    if nv > 12:
        raise ValueError(f"cluster-variable count {nv} exceeds the subset-scan guard (12)")
    cap = product_exponent_cap
    max_total = cap * nv
    # membership oracle: all cluster monomials up to the induced degree
    monomials = set(enumerate_cluster_monomials(g, max_total))
    clusters = {frozenset(key.variables) for key in g.vertices}

    def product_closed(subset: tuple[LaurentPoly, ...]) -> bool:
        def rec(value: LaurentPoly, idx: int) -> bool:
            if idx == len(subset):
                return value in monomials
            acc = value
            for e in range(cap + 1):
                if not rec(acc, idx + 1):
                    return False
                if e < cap:
                    acc = acc * subset[idx]
            return True

        return rec(LaurentPoly.one(subset[0].nvars), 0)

    closed_sets = []
    for mask in range(1, 1 << nv):
        subset = tuple(variables[i] for i in range(nv) if mask & (1 << i))
        if product_closed(subset):
            closed_sets.append(frozenset(subset))
    maximal = [
        s for s in closed_sets if not any(s < other for other in closed_sets)
    ]
    ok = set(maximal) == clusters
    witness = None
    if not ok:
        extra = [sorted(v.render() for v in s) for s in maximal if s not in clusters]
        missing = [sorted(v.render() for v in s) for s in clusters if s not in set(maximal)]
        witness = {"non_cluster_maximal_sets": extra, "clusters_not_maximal": missing}
    return VerificationReport(
        "maximal_sets",
        instance,
        "pass" if ok else "fail",
        witness=witness,
        counts={
            "variables": nv,
            "subsets": (1 << nv) - 1,
            "maximal_sets": len(maximal),
            "clusters": len(clusters),
            "exponent_cap": cap,
        },
        elapsed=time.perf_counter() - start,
    )


def check_seed_determined(
    g: ExchangeGraphRecord, instance: str = ""
) -> VerificationReport:
    """No two distinct canonical keys may share the same multiset of
    mutable variables.  Valid on truncated explorations."""
    start = time.perf_counter()
    by_cluster: dict[tuple, CanonicalSeedKey] = {}
    for key in g.vertices:
        cluster = tuple(v.sort_key() for v in key.variables)
        existing = by_cluster.get(cluster)
        if existing is not None and existing != key:
            return VerificationReport(
                "seed_determined",
                instance,
                "fail",
                witness={
                    "path_a": list(g.vertices[existing].path),
                    "path_b": list(g.vertices[key].path),
                    "cluster": [v.render() for v in key.variables],
                },
                counts={"seeds": g.num_vertices},
                elapsed=time.perf_counter() - start,
            )
        by_cluster[cluster] = key
    return VerificationReport(
        "seed_determined",
        instance,
        "pass",
        counts={"seeds": g.num_vertices, "distinct_clusters": len(by_cluster)},
        elapsed=time.perf_counter() - start,
    )
