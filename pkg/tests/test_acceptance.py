"""Acceptance criteria, one reported PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` (the lines are printed even
when output capture is on).
"""

import itertools
import random
import time

import networkx as nx
import pytest

from gitfan.chambers import (
    certified_bound,
    embedding_numbers,
    gitfan,
    gitfan_box_oracle,
    interior_cones,
    sigma,
)
from gitfan.cone import clear_caches
from gitfan.fan import validate_fan
from gitfan.fixtures import example1_random, shipped_fixtures, sl3_flag, sl3_type1, sl4_example
from gitfan.geometry import (
    canonical_class,
    is_locally_factorial,
    is_q_factorial,
    morphism_graph,
    picard,
)
from gitfan.lattice import det, hnf, index, intersect, matmul, relative_index, snf, span
from gitfan.subgroup import kernel_epimorphic, kernel_observable

from conftest import random_unimodular

# reference diagram of equivariant morphisms between the nine embeddings
REFERENCE_EDGES = [
    (1, 5), (1, 7), (1, 9), (2, 5), (2, 8), (2, 9), (3, 6), (3, 7),
    (3, 9), (4, 6), (4, 8), (4, 9), (5, 9), (6, 9), (7, 9), (8, 9),
]
REFERENCE_DIMS = {1: 3, 2: 3, 3: 3, 4: 3, 5: 2, 6: 2, 7: 2, 8: 2, 9: 1}


def report(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\nCRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_sl4_fan(capsys):
    clear_caches()
    t = time.perf_counter()
    p = sl4_example()
    fan = gitfan(p)
    n_int = len(interior_cones(p, fan))
    dt = time.perf_counter() - t
    ok = len(fan) == 18 and n_int == 9 and dt < 5
    report(capsys, 1, ok, f"SL(4) fan has {len(fan)} cones, {n_int} interior, {dt:.2f}s (< 5s)")


def test_criterion_2_sl4_morphisms(capsys):
    p = sl4_example()
    fan = gitfan(p)
    g = morphism_graph(p, fan)
    ours = nx.DiGraph()
    ours.add_nodes_from((n, {"dim": g.dims[n]}) for n in g.nodes)
    ours.add_edges_from(g.edges)
    ref = nx.DiGraph()
    ref.add_nodes_from((n, {"dim": d}) for n, d in REFERENCE_DIMS.items())
    ref.add_edges_from(REFERENCE_EDGES)
    iso = nx.is_isomorphic(ours, ref, node_match=lambda a, b: a["dim"] == b["dim"])
    nums = embedding_numbers(p, fan)
    qf = {k for k, i in nums.items() if is_q_factorial(p, chamber=i, fan=fan)}
    full = {k for k, i in nums.items() if fan.cone(i).dim == 3}
    lf = all(is_locally_factorial(p, chamber=nums[k], fan=fan) for k in (1, 2, 3, 4))
    ok = len(g.nodes) == 9 and len(g.edges) == 16 and iso and qf == full == {1, 2, 3, 4} and lf
    report(
        capsys, 2, ok,
        f"{len(g.nodes)} nodes, {len(g.edges)} edges, isomorphic={iso}, "
        f"Q-factorial={sorted(qf)}, 1-4 locally factorial={lf}",
    )


def test_criterion_3_sl3_type1(capsys):
    results = []
    for p, q in [(1, 1), (2, 1), (1, 2), (3, 2)]:
        prob = sl3_type1(p, q)
        fan = gitfan(prob)
        ids = interior_cones(prob, fan)
        _, idx = picard(prob, chamber=ids[0], fan=fan)
        dc = canonical_class(prob)
        results.append(
            ((p, q), len(ids) == 1 and idx == p * (p + q) and dc == (-4 * p - 2 * q,), idx, dc)
        )
    ok = all(r[1] for r in results)
    detail = "; ".join(f"(p,q)={pq}: index {i}, D_c={dc[0]}" for pq, _, i, dc in results)
    report(capsys, 3, ok, detail)


def test_criterion_4_oracle_equivalence(capsys):
    t = time.perf_counter()
    problems = [prob for prob, _ in shipped_fixtures().values()]
    problems += [example1_random(seed) for seed in range(20)]
    bad = []
    for prob in problems:
        fan = gitfan(prob)
        validate_fan(set(fan.cones), prob.weight_cone)
        if fan.support != prob.weight_cone:
            bad.append(prob.name)
        if gitfan_box_oracle(prob, certified_bound(fan)) != set(fan.cones):
            bad.append(prob.name)
    dt = time.perf_counter() - t
    ok = not bad and dt < 60
    report(capsys, 4, ok, f"{len(problems)} problems match the box oracle, failures={bad}, {dt:.1f}s (< 60s)")


def _random_relint(c, rng):
    gens = [tuple(r) for r in c.rays]
    lin = c.lineality
    p = [0] * c.d
    for r in gens:
        k = rng.randint(1, 7)
        p = [a + k * b for a, b in zip(p, r)]
    for v in lin:
        k = rng.randint(-7, 7)
        p = [a + k * b for a, b in zip(p, v)]
    return tuple(p)


def test_criterion_5_sigma_stability(capsys):
    rng = random.Random(5)
    problems = [prob for prob, _ in shipped_fixtures().values()]
    problems += [example1_random(seed) for seed in range(20)]
    checked, bad = 0, []
    for prob in problems:
        fan = gitfan(prob)
        for c in fan.cones:
            a, b = _random_relint(c, rng), _random_relint(c, rng)
            sa, sb = sigma(prob, a), sigma(prob, b)
            checked += 1
            if not (sa == sb == c and sa.contains_relint(a) and sb.contains_relint(b)):
                bad.append((prob.name, c))
    report(capsys, 5, not bad, f"{checked} cones, two relint samples each, failures={len(bad)}")


def test_criterion_6_flag_subgroups(capsys):
    p = sl3_flag()
    bad = []
    for mu in itertools.product(range(-3, 4), repeat=2):
        strictly = mu[0] > 0 and mu[1] > 0
        dominant = mu[0] >= 0 and mu[1] >= 0
        if kernel_observable(p, mu) != strictly or kernel_epimorphic(p, mu) != (not dominant):
            bad.append(mu)
    report(capsys, 6, not bad, f"49 grid characters in [-3,3]^2, mismatches={bad}")


def test_criterion_7_lattice_properties(capsys):
    t = time.perf_counter()
    rng = random.Random(7)
    fails = []
    for trial in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        H, U = hnf(M)
        S, P, Q = snf(M)
        diag = [S[i][i] for i in range(min(m, n))]
        if matmul(M, U) != H or abs(det(U)) != 1:
            fails.append(("hnf", trial))
        if matmul(matmul(P, M), Q) != S or abs(det(P)) != 1 or abs(det(Q)) != 1:
            fails.append(("snf", trial))
        nz = [x for x in diag if x]
        if any(x < 0 for x in diag) or any(b % a for a, b in zip(nz, nz[1:])):
            fails.append(("snf-divisibility", trial))
        # canonical under unimodular re-generation of the same lattice
        vecs = [tuple(row[j] for row in M) for j in range(n)]
        MU = matmul(M, random_unimodular(rng, n))
        regen = [tuple(row[j] for row in MU) for j in range(n)]
        if span(vecs, m) != span(regen, m):
            fails.append(("canonical", trial))
        # index multiplicativity for a chain L2 <= L1 of full rank
        d = rng.randint(1, 3)
        L1 = span([tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(d + 1)], d)
        if L1.rank == d:
            k = rng.randint(1, 3)
            L2 = span([tuple(k * x for x in b) for b in L1.basis[:-1]] + [L1.basis[-1]], d)
            if index(L2) != index(L1) * relative_index(L1, L2):
                fails.append(("index", trial))
        # intersection against pointwise box membership in Z^2
        if trial % 4 == 0:
            A = span([tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(2)], 2)
            B = span([tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(2)], 2)
            I = intersect(A, B)
            for v in itertools.product(range(-6, 7), repeat=2):
                if (v in I) != (v in A and v in B):
                    fails.append(("intersect", trial))
                    break
    dt = time.perf_counter() - t
    ok = not fails and dt < 30
    report(capsys, 7, ok, f"200 randomized trials, failures={fails[:5]}, {dt:.1f}s (< 30s)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
