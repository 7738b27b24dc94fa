"""Built-in problems: SL(3) and SL(4) examples, flag variety, random families."""

from __future__ import annotations

import itertools
import math
import random

from .chambers import ALL_SUBSETS, EXPLICIT, GitProblem, SupportFamily, WeightSystem
from .cone import cone_from_rays
from .lattice import det


def quadric_supports(n: int) -> list:
    """Supports of points on ``x_1 y_1 + ... + x_n y_n = 0`` in ``K^n + K^n``.

    Index ``i`` is ``x_i`` and ``n + i`` is ``y_i``. A support is realizable
    unless exactly one pair ``x_i y_i`` lies in it (a lone nonzero product
    cannot cancel).
    """
    out = []
    for r in range(2 * n + 1):
        for s in itertools.combinations(range(1, 2 * n + 1), r):
            pairs = sum(1 for i in range(1, n + 1) if i in s and n + i in s)
            if pairs != 1:
                out.append(s)
    return out


def sl3_type1(p: int = 1, q: int = 1) -> GitProblem:
    if not (p > 0 and p + q > 0 and math.gcd(p, p + q) == 1):
        raise ValueError("need p > 0, p + q > 0 and gcd(p, p + q) = 1")
    return GitProblem(
        WeightSystem(1, [(p,)] * 3 + [(p + q,)] * 3),
        SupportFamily(EXPLICIT, quadric_supports(3)),
        relation_degrees=[(2 * p + q,)],
        name=f"sl3-type1-({p},{q})",
        notes="G/B^u in SL(3); Z is the quadric sum x_i y_i = 0, torus weights p, p+q",
    )


def sl3_type2(p: int = 1, q: int = 2) -> GitProblem:
    if not (p > 0 and q > 0 and math.gcd(p, q) == 1):
        raise ValueError("need p, q > 0 coprime")
    return GitProblem(
        WeightSystem(1, [(p,)] * 3 + [(q,)] * 3),
        SupportFamily(ALL_SUBSETS),
        name=f"sl3-type2-({p},{q})",
        notes="Z = K^3 + K^3 with torus weights p, q; no relations",
    )


def sl3_flag() -> GitProblem:
    """``G/B`` for SL(3): weights in fundamental-weight coordinates."""
    return GitProblem(
        WeightSystem(2, [(1, 0)] * 3 + [(0, 1)] * 3),
        SupportFamily(EXPLICIT, quadric_supports(3)),
        relation_degrees=[(1, 1)],
        name="sl3-flag",
        notes="G/B^u in SL(3) with the full maximal torus; C is the dominant chamber",
    )


SL4_WEIGHTS = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1), (0, 0, -1)]


def sl4_example(with_middle: bool = True) -> GitProblem:
    """The SL(4) example with the five basic weights in (eps1, eps2, eps3) coordinates.

    Every subset of the four extreme weights (indices 1, 2, 4, 5) is a
    support. With ``with_middle`` the middle weight eps1+eps2 (index 3) is
    added to a support whenever it lies in that support's cone; otherwise
    index 3 only occurs in the full support.
    """
    extreme = (1, 2, 4, 5)
    supports = []
    for r in range(5):
        for s in itertools.combinations(extreme, r):
            supports.append(s)
            if with_middle and cone_from_rays([SL4_WEIGHTS[i - 1] for i in s], 3).contains(
                SL4_WEIGHTS[2]
            ):
                supports.append(tuple(sorted(s + (3,))))
    supports.append((1, 2, 3, 4, 5))
    return GitProblem(
        WeightSystem(3, SL4_WEIGHTS),
        SupportFamily(EXPLICIT, supports),
        name="sl4-example" if with_middle else "sl4-example-extreme-only",
        notes="H = T B' with H_1 = P^u in SL(4); orbit cones are all cones over "
        "subsets of the four extreme weights",
    )


def nilpotent_sl4() -> GitProblem:
    return GitProblem(
        WeightSystem(1, [(1,), (1,), (2,)]),
        SupportFamily(ALL_SUBSETS),
        name="nilpotent-sl4",
        notes="rank-one torus with positive weights (schematic weights; only positivity "
        "enters the embedding count)",
    )


def example1_random(seed: int, d: int | None = None, m: int | None = None, entry: int = 2):
    """Random weights containing a lattice basis and spanning a pointed cone.

    All subsets of the weights are supports.
    """
    rng = random.Random(seed)
    d = d or rng.randint(2, 3)
    m = m or rng.randint(d + 1, 6)
    functional = [rng.randint(1, 3) for _ in range(d)]

    def draw():
        while True:
            v = tuple(rng.randint(-entry, entry) for _ in range(d))
            if sum(a * b for a, b in zip(v, functional)) > 0:
                return v

    while True:
        basis = [draw() for _ in range(d)]
        if abs(det(basis)) == 1:
            break
    weights = list(basis)
    while len(weights) < m:
        v = draw()
        if v not in weights:
            weights.append(v)
    rng.shuffle(weights)
    return GitProblem(
        WeightSystem(d, weights),
        SupportFamily(ALL_SUBSETS),
        name=f"example1-random-{seed}",
        notes=f"seeded random weights (seed {seed}); all subsets are supports",
    )


FIXTURES = {
    "sl3-type1": sl3_type1,
    "sl3-type2": sl3_type2,
    "sl3-flag": sl3_flag,
    "sl4-example": sl4_example,
    "nilpotent-sl4": nilpotent_sl4,
}


TYPE1_PAIRS = ((1, 1), (2, 1), (1, 2), (3, 2))
RANDOM_SEEDS = (0, 1, 2)

FLAG_QUERIES = (
    {"type": "kernel", "mu": (1, 1)},
    {"type": "kernel", "mu": (1, 0)},
    {"type": "kernel", "mu": (-1, 0)},
    {"type": "subspace", "basis": ((1, 1),)},
    {"type": "subspace", "basis": ((1, -1),)},
)


def shipped_fixtures() -> dict:
    """File name (without ``.json``) to ``(problem, subgroup_queries)``."""
    out = {}
    for p, q in TYPE1_PAIRS:
        out[f"sl3-type1-{p}-{q}"] = (sl3_type1(p, q), ())
    out["sl3-type2"] = (sl3_type2(), ())
    out["sl3-flag"] = (sl3_flag(), FLAG_QUERIES)
    out["sl4-example"] = (sl4_example(), ({"type": "kernel", "mu": (1, 1, 0)}, {"type": "kernel", "mu": (1, 0, 0)}))
    out["sl4-example-extreme-only"] = (sl4_example(with_middle=False), ())
    out["nilpotent-sl4"] = (nilpotent_sl4(), ({"type": "kernel", "mu": (1,)},))
    for seed in RANDOM_SEEDS:
        out[f"example1-random-{seed}"] = (example1_random(seed), ())
    return out


def write_fixtures(directory) -> list:
    """Regenerate the shipped JSON fixtures into ``directory``."""
    from pathlib import Path

    from .problem_io import dumps

    paths = []
    for name, (problem, queries) in shipped_fixtures().items():
        path = Path(directory) / f"{name}.json"
        path.write_text(dumps(problem, queries))
        paths.append(path)
    return paths
