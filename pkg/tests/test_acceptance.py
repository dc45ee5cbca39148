"""Acceptance suite: one test per acceptance criterion, each emitting a
single PASS/FAIL line.  All checks are exact integer arithmetic; the only
tolerances are the pinned wall-clock budgets stated inline."""

import itertools
import random
import time

import pytest

from clusterlab.exmatrix import ExtendedExchangeMatrix
from clusterlab.explorer import (
    canonical_key,
    cluster_complex,
    compare_patterns,
    explore,
)
from clusterlab.gvec import (
    GVector,
    check_sign_coherence,
    indices_along_path,
    pushforward_index,
)
from clusterlab.seed import Seed, apply_path
from clusterlab.tropical import separated_variable_checked
from clusterlab.verify import (
    check_linear_independence,
    check_maximal_sets,
    check_proper_laurent,
    check_seed_determined,
)

A2 = ExtendedExchangeMatrix.from_rows([[0, 1], [-1, 0]])
A3 = ExtendedExchangeMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
A4 = ExtendedExchangeMatrix.from_rows(
    [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]]
)
MARKOV = ExtendedExchangeMatrix.from_rows([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def emit(name: str, ok: bool, elapsed: float, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {status} in {elapsed:.2f}s{suffix}")
    assert ok, name


def extend(top: ExtendedExchangeMatrix, rows) -> ExtendedExchangeMatrix:
    return ExtendedExchangeMatrix.from_rows(
        [list(r) for r in top.entries] + [list(r) for r in rows]
    )


def principal_rows(r: int):
    return [[1 if j == i else 0 for j in range(r)] for i in range(r)]


@pytest.fixture(scope="module")
def a2_graph():
    return explore(Seed.initial(A2))


@pytest.fixture(scope="module")
def a3_graph():
    return explore(Seed.initial(A3))


def test_a2_enumeration(a2_graph):
    start = time.perf_counter()
    g = explore(Seed.initial(A2))
    elapsed = time.perf_counter() - start
    degrees_ok = all(len(set(n.values())) == 2 for n in g.adjacency.values())
    ok = (
        g.num_vertices == 5
        and g.num_edges() == 5
        and g.complete
        and degrees_ok  # connected 2-regular on 5 vertices: the 5-cycle
        and len(g.cluster_variables()) == 5
        and elapsed < 1.0
    )
    emit("a2-enumeration", ok, elapsed, "5 seeds, 5 edges, 5 variables")


def test_a3_enumeration():
    start = time.perf_counter()
    g = explore(Seed.initial(A3))
    complex_ = cluster_complex(g)
    elapsed = time.perf_counter() - start
    ok = (
        g.num_vertices == 14
        and g.num_edges() == 21
        and g.complete
        and g.is_regular()
        and len(g.cluster_variables()) == 9
        and complex_.num_vertices == 9
        and complex_.num_facets == 14
        and elapsed < 5.0
    )
    emit("a3-enumeration", ok, elapsed, "14 seeds, 21 edges, complex 9/14")


def test_a4_enumeration():
    start = time.perf_counter()
    g = explore(Seed.initial(A4))
    elapsed = time.perf_counter() - start
    ok = (
        g.num_vertices == 42
        and g.complete
        and len(g.cluster_variables()) == 14
        and elapsed < 60.0
    )
    emit("a4-enumeration", ok, elapsed, "42 seeds, 14 variables")


def test_coefficient_independence():
    start = time.perf_counter()
    rng = random.Random(20260823)
    runs = 0
    ok = True
    for top in (A2, A3):
        for _ in range(20):
            nrows = rng.randint(1, 3)
            rows = [
                [rng.randint(-2, 2) for _ in range(top.r)] for _ in range(nrows)
            ]
            report = compare_patterns(top, extend(top, rows))
            runs += 1
            if not (report.isomorphic and report.complexes_isomorphic):
                ok = False
                break
        if not ok:
            break
    elapsed = time.perf_counter() - start
    emit("coefficient-independence", ok, elapsed, f"{runs} randomized extensions")


def test_proper_laurent_property():
    start = time.perf_counter()
    rng = random.Random(20260824)
    instances = []
    for top, degree in ((A2, 3), (A3, 2)):
        r = top.r
        randoms = [[rng.randint(-2, 2) for _ in range(r)] for _ in range(2)]
        for rows in ([], principal_rows(r), randoms):
            instances.append((extend(top, rows), degree))
    checked = 0
    ok = True
    for matrix, degree in instances:
        g = explore(Seed.initial(matrix))
        for base_key in g.vertices:
            report = check_proper_laurent(g, base_key, degree)
            checked += report.counts.get("monomials_checked", 0)
            if not report.passed:
                ok = False
                break
        if not ok:
            break
    elapsed = time.perf_counter() - start
    emit("proper-laurent", ok, elapsed, f"{checked} monomials, all bases")


def test_linear_independence():
    start = time.perf_counter()
    ok = True
    total = 0
    for top in (A2, A3):
        matrix = extend(top, principal_rows(top.r))
        g = explore(Seed.initial(matrix))
        report = check_linear_independence(g, 2)
        total += report.counts["monomials"]
        ok = ok and report.passed
    elapsed = time.perf_counter() - start
    emit("linear-independence", ok, elapsed, f"{total} monomials, exact rank")


def test_separation_identity():
    # the checked evaluator raises SeparationMismatchError on any
    # disagreement with direct mutation; equality is exact
    start = time.perf_counter()
    rng = random.Random(20260823)
    for k in range(200):
        family = k % 3
        if family == 0:
            top = A2
        elif family == 1:
            top = A3
        else:
            r = 3
            rows = [[0] * r for _ in range(r)]
            for i in range(r):
                for j in range(i + 1, r):
                    v = rng.randint(-2, 2)
                    rows[i][j] = v
                    rows[j][i] = -v
            top = ExtendedExchangeMatrix.from_rows(rows)
        r = top.r
        extra = [
            [rng.randint(-2, 2) for _ in range(r)]
            for _ in range(rng.randint(0, 2))
        ]
        matrix = extend(top, extra)
        # random rank-3 draws can be of strongly growing (infinite) type,
        # where expansions explode combinatorially; their paths stay short
        cap = 4 if family == 2 else 8
        path = tuple(rng.randint(1, r) for _ in range(rng.randint(0, cap)))
        separated_variable_checked(matrix, path, rng.randint(1, r))
    elapsed = time.perf_counter() - start
    emit("separation-identity", True, elapsed, "200 triples, zero tolerance")


def test_index_calculus(a2_graph, a3_graph):
    start = time.perf_counter()
    ok = True

    # hand-derived one-step pushforward on A2
    from clusterlab.exmatrix import mutate_matrix

    g1 = pushforward_index(GVector((1, 0), 2), 1, mutate_matrix(A2, 1))
    ok = ok and g1.full == (-1, 1)

    # path independence: all pairs of bounded paths to the same seed
    for matrix, max_len in ((A2, 8), (A3, 5)):
        initial = Seed.initial(matrix)
        by_key = {}
        for length in range(max_len + 1):
            for path in itertools.product(
                range(1, matrix.r + 1), repeat=length
            ):
                seed = apply_path(initial, path)
                key = canonical_key(seed)
                gs = indices_along_path(matrix, path)
                order = sorted(
                    range(matrix.r),
                    key=lambda i: seed.variables[i].sort_key(),
                )
                matched = tuple(gs[i].reduced for i in order)
                ok = ok and by_key.setdefault(key, matched) == matched

    # sign coherence at every seed of the explored graphs
    for g in (a2_graph, a3_graph):
        for rec in g.vertices.values():
            coherent, _ = check_sign_coherence(rec.gvectors[: rec.seed.r])
            ok = ok and coherent

    # frozen-row replacement leaves reduced indices untouched
    rng = random.Random(20260825)
    for _ in range(20):
        rows = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(2)]
        path = tuple(rng.randint(1, 3) for _ in range(6))
        plain = indices_along_path(A3, path)
        decorated = indices_along_path(extend(A3, rows), path)
        ok = ok and [g.reduced for g in plain[:3]] == [
            g.reduced for g in decorated[:3]
        ]

    elapsed = time.perf_counter() - start
    emit("index-calculus", ok, elapsed)


def test_seeds_determined_by_clusters(a2_graph, a3_graph):
    start = time.perf_counter()
    graphs = [
        a2_graph,
        a3_graph,
        explore(Seed.initial(A4)),
        explore(Seed.initial(MARKOV), max_depth=6),
    ]
    ok = all(check_seed_determined(g).passed for g in graphs)
    seeds = sum(g.num_vertices for g in graphs)
    elapsed = time.perf_counter() - start
    emit("seeds-determined-by-clusters", ok, elapsed, f"{seeds} seeds incl. Markov depth 6")


def test_laurent_phenomenon_stress():
    # mutate_seed raises LaurentPhenomenonError on any inexact division;
    # reaching the end of this test means zero such events
    start = time.perf_counter()
    for matrix in (A2, A3, A4):
        explore(Seed.initial(matrix))
    explore(Seed.initial(MARKOV), max_depth=6)
    rng = random.Random(20260826)
    for _ in range(100):
        rows = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i + 1, 3):
                v = rng.randint(-2, 2)
                rows[i][j] = v
                rows[j][i] = -v
        m = ExtendedExchangeMatrix.from_rows(rows)
        apply_path(Seed.initial(m), tuple(rng.randint(1, 3) for _ in range(4)))
    elapsed = time.perf_counter() - start
    emit("laurent-phenomenon-stress", True, elapsed, "100 random quivers, depth 4")


def test_maximal_sets(a2_graph):
    start = time.perf_counter()
    report = check_maximal_sets(a2_graph, 2)
    ok = report.passed and report.counts["maximal_sets"] == 5
    elapsed = time.perf_counter() - start
    emit("maximal-sets", ok, elapsed, "exponent cap 2, 5 clusters")
