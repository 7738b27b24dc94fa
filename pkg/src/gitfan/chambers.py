"""Orbit cones, GIT-cones and assembly of the GIT-fan.

The input is combinatorial: weights ``mu_1..mu_m`` in ``Z^d`` together with
the family of realizable supports ``I = {i : f_i(z) != 0}``. The orbit cone
of a support is ``cone(mu_i : i in I)`` and the GIT-cone of a character is
the intersection of all orbit cones containing it.

Maximal GIT-cones are found by enumerating the full-dimensional cells of the
arrangement of orbit-cone walls inside the weight cone (sign-vector search
pruned by exact LP), evaluating the GIT-cone at a generic point of each cell.
All lower cones are faces of those, and every member of the result is
re-checked against the defining intersection.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .cone import Cone, cone_from_inequalities, cone_from_rays, faces, relint_point
from .errors import DataInconsistencyError, ValidationError
from .fan import Fan, validate_fan
from .lattice import rank
from .lp import find_feasible

ALL_SUBSETS = "all_subsets"
EXPLICIT = "explicit"


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class WeightSystem:
    d: int
    weights: tuple

    def __post_init__(self):
        weights = tuple(tuple(int(x) for x in w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if self.d < 1:
            raise ValidationError("lattice rank must be positive")
        if not weights:
            raise ValidationError("at least one weight is required")
        for i, w in enumerate(weights, 1):
            if len(w) != self.d:
                raise ValidationError(f"weight {i} has length {len(w)}, expected {self.d}")
            if not any(w):
                raise ValidationError(f"weight {i} is zero")
        if rank(weights) != self.d:
            raise ValidationError("the weights do not span a full-rank sublattice")

    @property
    def m(self) -> int:
        return len(self.weights)

    def weights_of(self, support) -> list:
        return [self.weights[i - 1] for i in sorted(support)]


@dataclass(frozen=True)
class SupportFamily:
    """Realizable supports, as sets of 1-based weight indices."""

    mode: str = ALL_SUBSETS
    supports: tuple = ()

    def __post_init__(self):
        if self.mode not in (ALL_SUBSETS, EXPLICIT):
            raise ValidationError(f"unknown support mode {self.mode!r}")
        canon = tuple(sorted({tuple(sorted(set(int(i) for i in s))) for s in self.supports}))
        object.__setattr__(self, "supports", canon)

    def subsets(self, m: int):
        if self.mode == ALL_SUBSETS:
            idx = range(1, m + 1)
            return [c for r in range(m + 1) for c in itertools.combinations(idx, r)]
        for s in self.supports:
            if any(not 1 <= i <= m for i in s):
                raise ValidationError(f"support {list(s)} uses an index outside 1..{m}")
        return list(self.supports)


@dataclass(frozen=True)
class OrbitConeSet:
    cones: tuple
    supports_by_cone: dict = field(compare=False)


@dataclass(frozen=True)
class GitProblem:
    ws: WeightSystem
    family: SupportFamily = SupportFamily()
    relation_degrees: tuple = ()
    name: str = ""
    notes: str = ""
    grosshans_assumed: bool = True

    def __post_init__(self):
        degs = tuple(tuple(int(x) for x in g) for g in self.relation_degrees)
        object.__setattr__(self, "relation_degrees", degs)
        for g in degs:
            if len(g) != self.ws.d:
                raise ValidationError(f"relation degree {list(g)} has the wrong length")

    @property
    def d(self) -> int:
        return self.ws.d

    @cached_property
    def weight_cone(self) -> Cone:
        return weight_cone(self.ws)

    @cached_property
    def orbit_cone_set(self) -> OrbitConeSet:
        return orbit_cones(self.ws, self.family)

    @cached_property
    def _sigma_cache(self) -> dict:
        return {}


def weight_cone(ws: WeightSystem) -> Cone:
    return cone_from_rays(ws.weights, ws.d)


def orbit_cones(ws: WeightSystem, family: SupportFamily) -> OrbitConeSet:
    supports = family.subsets(ws.m)
    full = tuple(range(1, ws.m + 1))
    if family.mode == EXPLICIT and full not in supports:
        raise ValidationError("an explicit support family must contain the full support")
    by_cone: dict = {}
    for s in supports:
        c = cone_from_rays(ws.weights_of(s), ws.d)
        by_cone.setdefault(c, []).append(tuple(s))
    cones = tuple(sorted(by_cone, key=Cone.sort_key))
    return OrbitConeSet(cones, {c: tuple(sorted(by_cone[c])) for c in cones})


def sigma(problem: GitProblem, chi) -> Cone:
    """The GIT-cone of ``chi``: intersection of all orbit cones containing it."""
    chi = tuple(int(x) for x in chi)
    if len(chi) != problem.d:
        raise DataInconsistencyError("CHI_OUTSIDE_SUPPORT", f"{list(chi)} has the wrong length")
    if not problem.weight_cone.contains(chi):
        raise DataInconsistencyError(
            "CHI_OUTSIDE_SUPPORT", f"{list(chi)} is not in the weight cone"
        )
    cones = problem.orbit_cone_set.cones
    key = frozenset(i for i, c in enumerate(cones) if c.contains(chi))
    return _sigma_by_key(problem, key)


def _sigma_by_key(problem, key) -> Cone:
    cache = problem._sigma_cache
    if key not in cache:
        cones = problem.orbit_cone_set.cones
        ineqs = [n for i in key for n in cones[i].facets]
        eqs = [e for i in key for e in cones[i].equations]
        cache[key] = cone_from_inequalities(ineqs, problem.d, eqs)
    return cache[key]


def cone_sample(c: Cone) -> tuple:
    """Deterministic relative-interior point; the origin for the zero cone."""
    return relint_point(c) if not c.is_zero else (0,) * c.d


def _canonical_sign(n):
    first = next(x for x in n if x)
    return n if first > 0 else tuple(-x for x in n)


def walls(problem: GitProblem) -> list:
    """Hyperplanes that can separate GIT-chambers inside the weight cone.

    Facet hyperplanes of full-dimensional orbit cones and spans of
    codimension-one orbit cones, restricted to those meeting the interior
    of the weight cone.
    """
    d = problem.d
    hs = set()
    for c in problem.orbit_cone_set.cones:
        if c.dim == d:
            hs.update(_canonical_sign(n) for n in c.facets)
        elif c.dim == d - 1:
            hs.add(_canonical_sign(c.equations[0]))
    gens = problem.weight_cone.generators()
    out = []
    for n in sorted(hs):
        vals = [_dot(n, g) for g in gens]
        if any(v > 0 for v in vals) and any(v < 0 for v in vals):
            out.append(n)
    return out


def _feasible(rows, d):
    if not rows:
        return tuple(Fraction(0) for _ in range(d))
    return find_feasible(rows, [1] * len(rows), n=d)


def _children(base, hyperplanes, signs, x, d):
    """Feasible one-step extensions of a sign-vector prefix, with witnesses."""
    j = len(signs)
    n = hyperplanes[j]
    v = _dot(n, x)
    out = []
    for s in (1, -1):
        if v * s > 0:
            out.append((signs + (s,), x))
            continue
        rows = list(base) + [
            tuple(si * a for a in hyperplanes[i]) for i, si in enumerate(signs + (s,))
        ]
        y = _feasible(rows, d)
        if y is not None:
            out.append((signs + (s,), y))
    return out


def _generic_point(problem, base, hyperplanes, signs, x):
    """An integer point of the open cell avoiding every low-dimensional orbit-cone span."""
    d = problem.d
    rows = list(base) + [tuple(s * a for a in h) for h, s in zip(hyperplanes, signs)]
    low = [c for c in problem.orbit_cone_set.cones if c.dim <= d - 2]

    def bad(p):
        return any(all(_dot(e, p) == 0 for e in c.equations) for c in low)

    x = [Fraction(v) for v in x]
    if not bad(x):
        return _integral(x)
    margin = min((_dot(r, x) for r in rows), default=1)
    for j in itertools.count(1):
        v = [j**k for k in range(d)]
        bound = 1 + max((abs(_dot(r, v)) for r in rows), default=0)
        for k in range(1, len(low) + 2):
            t = margin / (2 * bound * k)
            p = [a + t * b for a, b in zip(x, v)]
            if not bad(p):
                return _integral(p)


def _integral(p):
    den = math.lcm(*(Fraction(v).denominator for v in p))
    q = [int(Fraction(v) * den) for v in p]
    g = math.gcd(*q)
    return tuple(v // g for v in q) if g > 1 else tuple(q)


def _subtree(args):
    problem, base, hyperplanes, signs, x = args
    d = problem.d
    found = []
    stack = [(signs, x)]
    while stack:
        s, y = stack.pop()
        if len(s) == len(hyperplanes):
            p = _generic_point(problem, base, hyperplanes, s, y)
            found.append(sigma(problem, p))
        else:
            stack.extend(reversed(_children(base, hyperplanes, s, y, d)))
    return found


def _workers(workers):
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("GITFAN_THREADS")
    return max(1, int(env)) if env else 1


def maximal_git_cones(problem: GitProblem, workers=None) -> list:
    d = problem.d
    C = problem.weight_cone
    base = list(C.facets)
    hyperplanes = walls(problem)
    x0 = _feasible(base, d)
    n_workers = _workers(workers)
    if n_workers == 1 or not hyperplanes:
        found = _subtree((problem, base, hyperplanes, (), x0))
    else:
        frontier = [((), x0)]
        while len(frontier) < 2 * n_workers and len(frontier[0][0]) < len(hyperplanes):
            frontier = [
                child for s, y in frontier for child in _children(base, hyperplanes, s, y, d)
            ]
        jobs = [(problem, base, hyperplanes, s, y) for s, y in frontier]
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            found = [c for part in pool.map(_subtree, jobs) for c in part]
    out = set()
    for c in found:
        if c.dim != d:
            raise DataInconsistencyError(
                "LOW_DIMENSIONAL_CHAMBER", f"generic cell point gave {c}"
            )
        out.add(c)
    return sorted(out, key=Cone.sort_key)


def gitfan(problem: GitProblem, workers=None) -> Fan:
    """The GIT-fan: maximal GIT-cones and all of their faces, validated."""
    members = {f for c in maximal_git_cones(problem, workers) for f in faces(c)}
    fan = validate_fan(members, problem.weight_cone)
    for c in fan.cones:
        s = sigma(problem, cone_sample(c))
        if s != c:
            raise DataInconsistencyError(
                "SIGMA_MISMATCH",
                f"cone {fan.id_of(c)} {c} differs from the GIT-cone {s} of its sample point",
            )
    return fan


def interior_cones(problem: GitProblem, fan: Fan) -> list:
    """Ids of fan cones whose relative interior meets the interior of the weight cone."""
    C = problem.weight_cone
    return [fan.id_of(c) for c in fan.cones if C.dim == C.d and C.contains_relint(cone_sample(c))]


def embedding_numbers(problem: GitProblem, fan: Fan) -> dict:
    """Conventional numbering of interior cones: maximal first, 1-based.

    Maps embedding number to fan id.
    """
    ids = interior_cones(problem, fan)
    ordered = sorted(ids, key=lambda i: (-fan.cone(i).dim, fan.cone(i).rays, fan.cone(i).lineality))
    return {k: i for k, i in enumerate(ordered, 1)}


def certified_bound(fan: Fan) -> int:
    """Smallest box radius containing the sample point of every fan cone."""
    return max([1] + [abs(x) for c in fan.cones for x in cone_sample(c)])


def gitfan_box_oracle(problem: GitProblem, bound: int) -> set:
    """``{sigma(chi) : chi in C, |chi|_inf <= bound}`` by brute force."""
    import numpy as np

    if bound < 1:
        raise ValueError("bound must be positive")
    d = problem.d
    cones = problem.orbit_cone_set.cones
    C = problem.weight_cone
    rows, spans = [], []
    for c in (C,) + cones:
        ge = list(range(len(rows), len(rows) + len(c.facets)))
        rows.extend(c.facets)
        eq = list(range(len(rows), len(rows) + len(c.equations)))
        rows.extend(c.equations)
        spans.append((ge, eq))
    grid = range(-bound, bound + 1)
    biggest = max([1] + [abs(x) for r in rows for x in r])
    dtype = np.int64 if biggest * bound * d < 2**62 else object
    pts = np.array(list(itertools.product(grid, repeat=d)), dtype=dtype)
    A = np.array(rows, dtype=dtype).reshape(len(rows), d)
    vals = pts @ A.T

    def member(ge, eq):
        ok = np.ones(len(pts), dtype=bool)
        if ge:
            ok &= np.all(vals[:, ge] >= 0, axis=1)
        if eq:
            ok &= np.all(vals[:, eq] == 0, axis=1)
        return ok

    in_C = member(*spans[0])
    bits = np.stack([member(*sp) for sp in spans[1:]], axis=1)[in_C]
    out = set()
    for row in np.unique(bits, axis=0):
        key = frozenset(int(i) for i in np.flatnonzero(row))
        out.add(_sigma_by_key(problem, key))
    return out
