"""Geometry of the projective embeddings attached to interior GIT-cones.

Each interior cone of the GIT-fan gives one embedding ``X(chi)``. This
module derives its combinatorial invariants: the equivariant-morphism
graph, relevant supports and ``cov(chi)``, the Picard sublattice of the
character lattice, factoriality, divisor cones and the canonical class.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .chambers import GitProblem, cone_sample, embedding_numbers, gitfan, interior_cones, sigma
from .cone import Cone, faces
from .errors import DataInconsistencyError
from .fan import Fan
from .lattice import INFINITE, Sublattice, index, intersect, span

ASSUMPTIONS = (
    "H_1 is assumed to be a Grosshans subgroup (input flag, not verified); "
    "smoothness is never claimed"
)


@dataclass(frozen=True)
class MorphismGraph:
    """Nodes are fan ids of interior cones; ``a -> b`` iff cone b is a proper face of cone a."""

    nodes: tuple
    dims: dict
    edges: tuple

    def successors(self, a):
        return [b for x, b in self.edges if x == a]

    def hasse(self) -> "MorphismGraph":
        succ = {a: set(self.successors(a)) for a in self.nodes}
        keep = [
            (a, b)
            for a, b in self.edges
            if not any(b in succ[c] for c in succ[a] if c != b)
        ]
        return MorphismGraph(self.nodes, self.dims, tuple(keep))

    def to_dot(self, name="morphisms", numbering=None) -> str:
        """DOT digraph; ``numbering`` maps fan id to an extra display number."""
        lines = [f"digraph {name} {{"]
        for n in self.nodes:
            label = f"{n} (dim {self.dims[n]})"
            if numbering:
                label = f"#{numbering[n]}: cone {label}"
            lines.append(f'  {n} [label="{label}"];')
        for a, b in self.edges:
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def morphism_graph(problem: GitProblem, fan: Fan) -> MorphismGraph:
    nodes = tuple(interior_cones(problem, fan))
    node_set = set(nodes)
    edges = []
    for a in nodes:
        for f in faces(fan.cone(a)):
            b = fan.id_of(f)
            if b != a and b in node_set:
                edges.append((a, b))
    return MorphismGraph(nodes, {n: fan.cone(n).dim for n in nodes}, tuple(sorted(edges)))


def _resolve_chi(problem, chi=None, chamber=None, fan=None):
    if chamber is not None:
        fan = fan or gitfan(problem)
        if chamber not in interior_cones(problem, fan):
            raise DataInconsistencyError("UNKNOWN_ID", f"{chamber} is not an interior cone id")
        return cone_sample(fan.cone(chamber))
    chi = tuple(int(x) for x in chi)
    C = problem.weight_cone
    if len(chi) != problem.d or not (C.dim == C.d and C.contains_relint(chi)):
        raise DataInconsistencyError(
            "CHI_OUTSIDE_INTERIOR", f"{list(chi)} is not in the interior of the weight cone"
        )
    return chi


def relevant_faces(problem: GitProblem, chi=None, *, chamber=None, fan=None) -> list:
    """Supports ``I`` whose orbit cone contains ``chi`` in its relative interior."""
    chi = _resolve_chi(problem, chi, chamber, fan)
    ocs = problem.orbit_cone_set
    out = [s for c in ocs.cones if c.contains_relint(chi) for s in ocs.supports_by_cone[c]]
    return sorted(out, key=lambda s: (len(s), s))


def cov(problem: GitProblem, chi=None, *, chamber=None, fan=None, mode="minimal") -> list:
    """Inclusion-minimal relevant supports.

    ``mode="maximal"`` gives the inclusion-maximal ones instead (diagnostics only).
    """
    rel = [frozenset(s) for s in relevant_faces(problem, chi, chamber=chamber, fan=fan)]
    if mode == "minimal":
        keep = [s for s in rel if not any(t < s for t in rel)]
    elif mode == "maximal":
        keep = [s for s in rel if not any(t > s for t in rel)]
    else:
        raise ValueError(f"unknown cov mode {mode!r}")
    return sorted((tuple(sorted(s)) for s in keep), key=lambda s: (len(s), s))


def picard(problem: GitProblem, chi=None, *, chamber=None, fan=None, mode="minimal"):
    """``(Pic, index)`` with Pic the intersection of the spans of the cov supports."""
    supports = cov(problem, chi, chamber=chamber, fan=fan, mode=mode)
    d = problem.d
    lattice = span([tuple(int(i == j) for j in range(d)) for i in range(d)], d)
    for s in supports:
        lattice = intersect(lattice, span(problem.ws.weights_of(s), d))
    return lattice, index(lattice)


def is_locally_factorial(problem: GitProblem, chi=None, *, chamber=None, fan=None) -> bool:
    d = problem.d
    return all(
        index(span(problem.ws.weights_of(s), d)) == 1
        for s in cov(problem, chi, chamber=chamber, fan=fan)
    )


def is_q_factorial(problem: GitProblem, chi=None, *, chamber=None, fan=None) -> bool:
    chi = _resolve_chi(problem, chi, chamber, fan)
    return sigma(problem, chi).dim == problem.d


def divisor_cones(problem: GitProblem, chi=None, *, chamber=None, fan=None):
    """``(Eff, SAmple)``; the ample cone is the relative interior of SAmple."""
    chi = _resolve_chi(problem, chi, chamber, fan)
    return problem.weight_cone, sigma(problem, chi)


def canonical_class(problem: GitProblem) -> tuple:
    """Sum of relation degrees minus the sum of all weights."""
    d = problem.d
    return tuple(
        sum(g[k] for g in problem.relation_degrees) - sum(w[k] for w in problem.ws.weights)
        for k in range(d)
    )


def _index_json(i):
    return "infinite" if i == INFINITE else i


def _index_from_json(i):
    return INFINITE if i == "infinite" else int(i)


def cone_to_dict(c: Cone) -> dict:
    return {
        "d": c.d,
        "dim": c.dim,
        "rays": [list(r) for r in c.rays],
        "lineality": [list(v) for v in c.lineality],
        "facets": [list(n) for n in c.facets],
        "equations": [list(e) for e in c.equations],
    }


def cone_from_dict(data: dict) -> Cone:
    def vecs(key):
        return tuple(tuple(int(x) for x in v) for v in data[key])

    return Cone(int(data["d"]), vecs("rays"), vecs("lineality"), vecs("facets"), vecs("equations"))


@dataclass(frozen=True)
class EmbeddingReport:
    chamber_id: int
    embedding_number: int
    chi: tuple
    sigma: Cone
    is_projective_small_boundary: bool
    picard: Sublattice
    picard_index: object
    locally_factorial: bool
    q_factorial: bool
    eff: Cone
    sample: Cone
    ample_is_relint_of: int
    canonical_class: tuple
    cov_supports: tuple
    grosshans_assumed: bool
    assumptions: str = ASSUMPTIONS

    def to_dict(self) -> dict:
        out = asdict(self)
        out["chi"] = list(self.chi)
        out["sigma"] = cone_to_dict(self.sigma)
        out["eff"] = cone_to_dict(self.eff)
        out["sample"] = cone_to_dict(self.sample)
        out["picard"] = {
            "ambient_rank": self.picard.ambient_rank,
            "basis": [list(b) for b in self.picard.basis],
        }
        out["picard_index"] = _index_json(self.picard_index)
        out["canonical_class"] = list(self.canonical_class)
        out["cov_supports"] = [list(s) for s in self.cov_supports]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "EmbeddingReport":
        pic = data["picard"]
        return cls(
            chamber_id=int(data["chamber_id"]),
            embedding_number=int(data["embedding_number"]),
            chi=tuple(int(x) for x in data["chi"]),
            sigma=cone_from_dict(data["sigma"]),
            is_projective_small_boundary=bool(data["is_projective_small_boundary"]),
            picard=Sublattice(
                int(pic["ambient_rank"]), tuple(tuple(int(x) for x in b) for b in pic["basis"])
            ),
            picard_index=_index_from_json(data["picard_index"]),
            locally_factorial=bool(data["locally_factorial"]),
            q_factorial=bool(data["q_factorial"]),
            eff=cone_from_dict(data["eff"]),
            sample=cone_from_dict(data["sample"]),
            ample_is_relint_of=int(data["ample_is_relint_of"]),
            canonical_class=tuple(int(x) for x in data["canonical_class"]),
            cov_supports=tuple(tuple(int(i) for i in s) for s in data["cov_supports"]),
            grosshans_assumed=bool(data["grosshans_assumed"]),
            assumptions=data.get("assumptions", ASSUMPTIONS),
        )


def embedding_report(problem: GitProblem, chamber_id: int, fan: Fan | None = None) -> EmbeddingReport:
    fan = fan or gitfan(problem)
    numbers = {i: k for k, i in embedding_numbers(problem, fan).items()}
    if chamber_id not in numbers:
        raise DataInconsistencyError("UNKNOWN_ID", f"{chamber_id} is not an interior cone id")
    chi = cone_sample(fan.cone(chamber_id))
    return report_at(problem, chi, fan, chamber_id=chamber_id, number=numbers[chamber_id])


def report_at(problem: GitProblem, chi, fan: Fan, chamber_id=None, number=None) -> EmbeddingReport:
    """Report for an explicit interior character ``chi``."""
    chi = _resolve_chi(problem, chi)
    s = sigma(problem, chi)
    cid = fan.id_of(s) if chamber_id is None else chamber_id
    if number is None:
        number = {i: k for k, i in embedding_numbers(problem, fan).items()}[cid]
    pic, idx = picard(problem, chi)
    eff, sample = divisor_cones(problem, chi)
    return EmbeddingReport(
        chamber_id=cid,
        embedding_number=number,
        chi=chi,
        sigma=s,
        is_projective_small_boundary=True,
        picard=pic,
        picard_index=idx,
        locally_factorial=is_locally_factorial(problem, chi),
        q_factorial=s.dim == problem.d,
        eff=eff,
        sample=sample,
        ample_is_relint_of=cid,
        canonical_class=canonical_class(problem),
        cov_supports=tuple(cov(problem, chi)),
        grosshans_assumed=problem.grosshans_assumed,
    )
