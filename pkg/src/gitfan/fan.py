"""Fans: validated, canonically labelled collections of cones."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .cone import Cone, faces, intersect, is_face_of, relint_point
from .errors import FanValidationError


def _sample(c: Cone):
    return relint_point(c) if not c.is_zero else (0,) * c.d


@dataclass(frozen=True)
class Fan:
    """Cones sorted by ``(dim, rays, lineality)``; cone ``i`` has id ``i + 1``."""

    cones: tuple
    support: Cone

    def __len__(self):
        return len(self.cones)

    @property
    def ids(self):
        return range(1, len(self.cones) + 1)

    def cone(self, cone_id: int) -> Cone:
        if not 1 <= cone_id <= len(self.cones):
            raise KeyError(cone_id)
        return self.cones[cone_id - 1]

    def id_of(self, c: Cone) -> int:
        return self._index[c]

    @cached_property
    def _index(self):
        return {c: i + 1 for i, c in enumerate(self.cones)}

    def __contains__(self, c: Cone):
        return c in self._index


def validate_fan(cones, support: Cone) -> Fan:
    """Check the fan axioms and that the union of ``cones`` is ``support``.

    Raises :class:`FanValidationError` with a witness on failure.
    """
    members = set(cones)
    ordered = tuple(sorted(members, key=Cone.sort_key))
    for c in ordered:
        if c.d != support.d:
            raise FanValidationError("SUPPORT_MISMATCH", f"{c} has the wrong ambient rank", c)
        for f in faces(c):
            if f not in members:
                raise FanValidationError(
                    "NOT_FACE_CLOSED", f"face {f} of {c} is missing", (c, f)
                )
    maximal = _maximal(ordered)
    # with face closure, compatibility of maximal pairs implies it for all pairs
    for a, b in combinations(maximal, 2):
        m = intersect(a, b)
        if not (is_face_of(m, a) and is_face_of(m, b)):
            raise FanValidationError(
                "BAD_INTERSECTION", f"{a} and {b} meet in {m}, not a common face", (a, b)
            )
    _check_support(maximal, support)
    return Fan(ordered, support)


def _maximal(ordered):
    """Members that are not a proper face of another member (face-closed input)."""
    proper = {f for c in ordered for f in faces(c) if f != c}
    return [c for c in ordered if c not in proper]


def _check_support(maximal, support: Cone):
    """Pure of full dimension, inside the support, walls shared correctly.

    A wall (facet of a maximal cone) whose relative interior lies in the
    relative interior of the support must belong to exactly two maximal
    cones; a wall on the boundary of the support to exactly one.
    """
    k = support.dim
    if not maximal:
        raise FanValidationError("SUPPORT_MISMATCH", "empty fan", _sample(support))
    for c in maximal:
        if not support.contains_cone(c):
            raise FanValidationError(
                "SUPPORT_MISMATCH", f"{c} is not contained in the support", _sample(c)
            )
        if c.dim != k:
            raise FanValidationError(
                "SUPPORT_MISMATCH", f"maximal cone {c} has dimension {c.dim} < {k}", _sample(c)
            )
    owners: dict[Cone, int] = {}
    for c in maximal:
        for f in faces(c):
            if f.dim == k - 1:
                owners[f] = owners.get(f, 0) + 1
    for wall, count in sorted(owners.items(), key=lambda kv: kv[0].sort_key()):
        p = _sample(wall)
        expected = 2 if support.contains_relint(p) else 1
        if count != expected:
            raise FanValidationError(
                "SUPPORT_MISMATCH",
                f"wall {wall} lies in {count} maximal cones, expected {expected}",
                p,
            )


def maximal_cones(f: Fan) -> list[int]:
    return [f.id_of(c) for c in _maximal(f.cones)]


def faces_poset(f: Fan) -> list[tuple[int, int]]:
    """Every pair ``(child, parent)`` with child a proper face of parent."""
    out = []
    for parent in f.cones:
        pid = f.id_of(parent)
        for child in faces(parent):
            if child != parent:
                out.append((f.id_of(child), pid))
    return sorted(out)
