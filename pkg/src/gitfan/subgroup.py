"""Observability and epimorphicity predicates as exact cone/lattice tests.

Positive multiples of a character lie in the weight semigroup iff the
character lies in the weight cone ``C`` (a rational nonnegative
combination scales to an integral one), so every semigroup condition below
becomes an LP over ``C``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chambers import GitProblem
from .errors import ValidationError
from .lattice import Sublattice, saturate, span
from .lp import find_feasible


@dataclass(frozen=True)
class SubspaceDatum:
    """A sublattice ``R(S)`` given by spanning weights, stored saturated.

    Build with :meth:`from_vectors`.
    """

    basis: tuple
    primitive_lattice: Sublattice

    @classmethod
    def from_vectors(cls, vectors, d: int) -> "SubspaceDatum":
        vectors = tuple(tuple(int(x) for x in v) for v in vectors)
        if any(len(v) != d for v in vectors):
            raise ValidationError(f"subspace generators must have length {d}")
        return cls(vectors, saturate(span(vectors, d)))

    @property
    def d(self):
        return self.primitive_lattice.ambient_rank


@dataclass(frozen=True)
class PredicateResult:
    query: str
    value: bool
    # a False answer is only conclusive when H_1 is Grosshans
    converse_requires_grosshans: bool
    grosshans_assumed: bool

    def to_dict(self):
        return {
            "query": self.query,
            "value": self.value,
            "converse_requires_grosshans": self.converse_requires_grosshans,
            "grosshans_assumed": self.grosshans_assumed,
        }


def _check(problem, s: SubspaceDatum):
    if s.d != problem.d:
        raise ValidationError(f"subspace lives in rank {s.d}, problem has rank {problem.d}")


def _rows(problem, basis):
    """Facet and equation rows of C in coordinates on ``basis``."""
    C = problem.weight_cone

    def pull(n):
        return [sum(a * b for a, b in zip(n, v)) for v in basis]

    return [pull(n) for n in C.facets], [pull(e) for e in C.equations]


def is_observable_subspace(problem: GitProblem, s: SubspaceDatum) -> bool:
    """Whether ``span(s)`` meets the interior of C (LP with strict facet rows)."""
    _check(problem, s)
    C = problem.weight_cone
    basis = s.primitive_lattice.basis
    if C.dim < C.d or not basis:
        return False
    facets, _ = _rows(problem, basis)
    r = len(basis)
    return find_feasible(ge=facets, ge_rhs=[1] * len(facets), n=r) is not None


def is_epimorphic_subspace(problem: GitProblem, s: SubspaceDatum) -> bool:
    """Whether ``span(s)`` meets C only in 0.

    One LP per coordinate sign: some ``lambda`` with ``B lambda`` in C and
    ``+-lambda_j >= 1``.
    """
    _check(problem, s)
    basis = s.primitive_lattice.basis
    r = len(basis)
    facets, eqs = _rows(problem, basis)
    for j in range(r):
        for sign in (1, -1):
            unit = [sign * int(k == j) for k in range(r)]
            x = find_feasible(
                ge=facets + [unit],
                ge_rhs=[0] * len(facets) + [1],
                eq=eqs,
                eq_rhs=[0] * len(eqs),
                n=r,
            )
            if x is not None:
                return False
    return True


def _vec(problem, mu):
    mu = tuple(int(x) for x in mu)
    if len(mu) != problem.d:
        raise ValidationError(f"character must have length {problem.d}")
    return mu


def _interior(problem, mu) -> bool:
    C = problem.weight_cone
    return C.dim == C.d and C.contains_relint(mu)


def kernel_observable(problem: GitProblem, mu) -> bool:
    return _interior(problem, _vec(problem, mu))


def kernel_epimorphic(problem: GitProblem, mu) -> bool:
    return not problem.weight_cone.contains(_vec(problem, mu))


def existence_small_boundary(problem: GitProblem, mu) -> bool:
    """A projective embedding with small boundary exists for ``Ker(mu)``."""
    return _interior(problem, _vec(problem, mu))


def run_query(problem: GitProblem, q: dict) -> list[PredicateResult]:
    """Evaluate one ``{type: kernel, mu}`` or ``{type: subspace, basis}`` query."""
    g = problem.grosshans_assumed
    if q["type"] == "kernel":
        mu = _vec(problem, q["mu"])
        tag = f"kernel {list(mu)}"
        return [
            PredicateResult(f"{tag} observable", kernel_observable(problem, mu), True, g),
            PredicateResult(f"{tag} epimorphic", kernel_epimorphic(problem, mu), False, g),
            PredicateResult(
                f"{tag} small boundary embedding", existence_small_boundary(problem, mu), True, g
            ),
        ]
    s = SubspaceDatum.from_vectors(q["basis"], problem.d)
    tag = f"subspace {[list(v) for v in s.basis]}"
    return [
        PredicateResult(f"{tag} observable", is_observable_subspace(problem, s), True, g),
        PredicateResult(f"{tag} epimorphic", is_epimorphic_subspace(problem, s), False, g),
    ]
