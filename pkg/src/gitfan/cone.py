"""Exact rational polyhedral cones, pointed or not.

A :class:`Cone` stores both descriptions in canonical form:

* ``lineality``: HNF basis of the saturated lattice of the lineality space;
* ``rays``: primitive extreme rays of the pointed part, each taken in the
  orthogonal complement of the lineality space, sorted lexicographically;
* ``equations``: HNF basis of the integer vectors orthogonal to the span;
* ``facets``: primitive inner facet normals, taken inside the span, sorted.

Conversions between the two descriptions use an (adjacency-free) double
description method on integer vectors, with a rank test to discard
non-extreme rays after every insertion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ZeroConeError
from .lattice import identity, kernel, orthogonal_lattice, rank, saturate, span
from .lp import find_feasible


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _primitive(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    if any(isinstance(x, Fraction) for x in v):
        den = math.lcm(*(Fraction(x).denominator for x in v))
        v = [int(Fraction(x) * den) for x in v]
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(int(x) for x in v)


def _orthogonal_basis(vectors):
    """Gram-Schmidt over Q (no normalisation)."""
    out = []
    for v in vectors:
        w = [Fraction(x) for x in v]
        for q, qq in out:
            c = _dot(w, q) / qq
            if c:
                w = [x - c * y for x, y in zip(w, q)]
        if any(w):
            out.append((w, _dot(w, w)))
    return out


def _project_off(v, ortho):
    """Orthogonal projection of ``v`` onto the complement of ``span(ortho)``."""
    if not ortho:
        return v
    w = [Fraction(x) for x in v]
    for q, qq in ortho:
        c = _dot(w, q) / qq
        if c:
            w = [x - c * y for x, y in zip(w, q)]
    return w


def _canonical_subspace(vectors, d):
    """Canonical integer basis of the rational span of ``vectors``."""
    return saturate(span(vectors, d)).basis


def _extreme(cands, constraints, equations, lin, d):
    """Keep the extreme rays among ``cands``, canonicalised modulo ``lin``."""
    ortho = _orthogonal_basis(lin)
    target = d - len(lin) - 1
    out = {}
    for r in cands:
        r = _primitive(_project_off(r, ortho))
        if not any(r) or r in out:
            continue
        tight = [a for a in constraints if _dot(a, r) == 0]
        if rank(tight + list(equations)) == target:
            out[r] = True
    return list(out)


def _double_description(ineqs, eqs, d):
    """Generators of ``{x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs}``.

    Returns ``(lineality_vectors, ray_vectors)``; rays are extreme but not
    yet canonical.
    """
    eqs = [tuple(e) for e in eqs if any(e)]
    lin = [tuple(v) for v in (kernel(eqs, d) if eqs else identity(d))]
    rays: list[tuple] = []
    done: list[tuple] = []
    for a in ineqs:
        a = tuple(int(x) for x in a)
        if not any(a):
            continue
        vals = [_dot(a, l) for l in lin]
        k = next((i for i, v in enumerate(vals) if v), None)
        if k is not None:
            l, al = lin[k], vals[k]
            if al < 0:
                l, al = tuple(-x for x in l), -al
            lin = [
                _primitive([al * x - v * y for x, y in zip(l2, l)])
                for i, (l2, v) in enumerate(zip(lin, vals))
                if i != k
            ]
            rays = [_primitive([al * x - _dot(a, r) * y for x, y in zip(r, l)]) for r in rays]
            rays.append(l)
        else:
            pos, zero, neg = [], [], []
            for r in rays:
                v = _dot(a, r)
                (pos if v > 0 else neg if v < 0 else zero).append((v, r))
            rays = [r for _, r in pos] + [r for _, r in zero]
            for vp, p in pos:
                for vn, n in neg:
                    rays.append(_primitive([vp * x - vn * y for x, y in zip(n, p)]))
        done.append(a)
        rays = _extreme(rays, done, eqs, lin, d)
    return lin, rays


@dataclass(frozen=True)
class Cone:
    d: int
    rays: tuple
    lineality: tuple
    facets: tuple
    equations: tuple

    @property
    def dim(self) -> int:
        return self.d - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    def generators(self):
        """Rays plus both signs of every lineality vector."""
        return (
            list(self.rays)
            + list(self.lineality)
            + [tuple(-x for x in v) for v in self.lineality]
        )

    def contains(self, v) -> bool:
        if len(v) != self.d:
            raise ValueError("dimension mismatch")
        return all(_dot(e, v) == 0 for e in self.equations) and all(
            _dot(n, v) >= 0 for n in self.facets
        )

    def contains_relint(self, v) -> bool:
        if len(v) != self.d:
            raise ValueError("dimension mismatch")
        return all(_dot(e, v) == 0 for e in self.equations) and all(
            _dot(n, v) > 0 for n in self.facets
        )

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators())

    def sort_key(self):
        return (self.dim, self.rays, self.lineality)

    def __repr__(self):
        parts = [f"rays={list(self.rays)}"]
        if self.lineality:
            parts.append(f"lineality={list(self.lineality)}")
        return f"Cone(d={self.d}, dim={self.dim}, " + ", ".join(parts) + ")"


def _assemble(lin, ray_cands, facet_cands, d) -> Cone:
    """Build the canonical cone from generators and candidate facet normals."""
    lineality = _canonical_subspace(lin, d)
    rays = sorted(_extreme(ray_cands, list(facet_cands), _eq_of(ray_cands, lineality, d), lineality, d))
    equations = orthogonal_lattice(list(rays) + list(lineality), d).basis
    dim = d - len(equations)
    ortho_eq = _orthogonal_basis(equations)
    facets = {}
    for a in facet_cands:
        n = _primitive(_project_off(a, ortho_eq))
        if not any(n) or n in facets:
            continue
        tight = [r for r in rays if _dot(n, r) == 0]
        if rank(tight + list(lineality)) == dim - 1:
            facets[n] = True
    return Cone(d, tuple(rays), tuple(lineality), tuple(sorted(facets)), tuple(equations))


def _eq_of(gens, lineality, d):
    return orthogonal_lattice(list(gens) + list(lineality), d).basis


@lru_cache(maxsize=None)
def _from_rays_cached(gens: tuple, d: int) -> Cone:
    gens = [g for g in gens if any(g)]
    equations = orthogonal_lattice(gens, d).basis
    # facets of the cone are the extreme rays of the dual cone
    _, dual_rays = _double_description(gens, (), d)
    ortho_eq = _orthogonal_basis(equations)
    facet_cands = [_primitive(_project_off(r, ortho_eq)) for r in dual_rays]
    facet_cands = [f for f in facet_cands if any(f)]
    lin = kernel(list(facet_cands) + list(equations), d) if (facet_cands or equations) else identity(d)
    return _assemble(lin, gens, facet_cands, d)


def cone_from_rays(rays, d: int) -> Cone:
    """The cone generated by ``rays`` (empty input gives the zero cone)."""
    gens = tuple(sorted({tuple(int(x) for x in r) for r in rays}))
    if any(len(g) != d for g in gens):
        raise ValueError(f"generators must have length {d}")
    return _from_rays_cached(gens, d)


@lru_cache(maxsize=None)
def _from_hrep_cached(ineqs: tuple, eqs: tuple, d: int) -> Cone:
    lin, rays = _double_description(ineqs, eqs, d)
    return _assemble(lin, rays, [a for a in ineqs if any(a)], d)


def cone_from_inequalities(normals, d: int, equations=()) -> Cone:
    """``{x : n.x >= 0 for n in normals, e.x = 0 for e in equations}``."""
    ineqs = tuple(sorted({tuple(int(x) for x in n) for n in normals}))
    eqs = tuple(sorted({tuple(int(x) for x in e) for e in equations}))
    if any(len(v) != d for v in ineqs + eqs):
        raise ValueError(f"normals must have length {d}")
    return _from_hrep_cached(ineqs, eqs, d)


def contains(c: Cone, v) -> bool:
    return c.contains(v)


def contains_relint(c: Cone, v) -> bool:
    return c.contains_relint(v)


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.d != c2.d:
        raise ValueError("ambient dimensions differ")
    return cone_from_inequalities(c1.facets + c2.facets, c1.d, c1.equations + c2.equations)


def whole_space(d: int) -> Cone:
    return cone_from_inequalities((), d)


def zero_cone(d: int) -> Cone:
    return cone_from_rays((), d)


@lru_cache(maxsize=None)
def _faces(c: Cone) -> tuple:
    rays = c.rays
    seen = {frozenset(range(len(rays)))}
    stack = [frozenset(range(len(rays)))]
    while stack:
        S = stack.pop()
        for n in c.facets:
            T = frozenset(i for i in S if _dot(n, rays[i]) == 0)
            if T == S:
                continue
            # close T: all rays tight on every facet tight on T
            tight_facets = [m for m in c.facets if all(_dot(m, rays[i]) == 0 for i in T)]
            T = frozenset(
                i for i in range(len(rays)) if all(_dot(m, rays[i]) == 0 for m in tight_facets)
            )
            if T not in seen:
                seen.add(T)
                stack.append(T)
    lin = c.generators()[len(rays):]
    out = [cone_from_rays([rays[i] for i in sorted(S)] + lin, c.d) for S in seen]
    return tuple(sorted(out, key=Cone.sort_key))


def faces(c: Cone) -> list[Cone]:
    """All faces of ``c``, from the lineality space up to ``c`` itself."""
    return list(_faces(c))


def is_face_of(f: Cone, c: Cone) -> bool:
    if f.d != c.d or not c.contains_cone(f):
        return False
    gens = f.generators()
    tight = [n for n in c.facets if all(_dot(n, g) == 0 for g in gens)]
    face_rays = [r for r in c.rays if all(_dot(n, r) == 0 for n in tight)]
    lin = c.generators()[len(c.rays):]
    return cone_from_rays(face_rays + lin, c.d) == f


def relint_point(c: Cone) -> tuple:
    """Sum of the stored primitive rays; lies in the relative interior."""
    if c.is_zero:
        raise ZeroConeError("the zero cone has no nonzero relative interior point")
    return tuple(sum(r[i] for r in c.rays) for i in range(c.d))


def lp_contains(c: Cone, v) -> bool:
    """Membership via an explicit nonnegative combination of generators (LP)."""
    gens = c.generators()
    if not gens:
        return not any(v)
    cols = list(zip(*gens))
    return find_feasible(eq=cols, eq_rhs=list(v), n=len(gens), nonneg=True) is not None


def clear_caches():
    """Drop the memoised constructors and face lattices (used for timing)."""
    _from_rays_cached.cache_clear()
    _from_hrep_cached.cache_clear()
    _faces.cache_clear()
