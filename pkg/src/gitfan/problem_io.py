"""Reading and writing problem files (JSON, schema version 1)."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .chambers import ALL_SUBSETS, GitProblem, SupportFamily, WeightSystem
from .errors import ParseError

SCHEMA_VERSION = 1
INT64 = 2**63


@dataclass(frozen=True)
class ProblemFile:
    problem: GitProblem
    subgroup_queries: tuple = ()


@lru_cache(maxsize=1)
def schema() -> dict:
    return json.loads(resources.files("gitfan.data").joinpath("problem.schema.json").read_text())


def encode_int(x: int):
    """Plain JSON int inside the signed 64-bit range, decimal string outside it."""
    return x if -INT64 <= x < INT64 else str(x)


def _vec(v):
    return tuple(int(x) for x in v)


def _vec_out(v):
    return [encode_int(int(x)) for x in v]


def problem_from_dict(data: dict) -> ProblemFile:
    try:
        jsonschema.validate(data, schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ParseError(f"invalid problem file at {where}: {exc.message}") from None
    sup = data["supports"]
    family = SupportFamily(sup["mode"], sup.get("sets", ()))
    problem = GitProblem(
        WeightSystem(data["rank"], [_vec(w) for w in data["weights"]]),
        family,
        relation_degrees=[_vec(g) for g in data.get("relation_degrees", [])],
        name=data.get("name", ""),
        notes=data.get("notes", ""),
        grosshans_assumed=data.get("grosshans_assumed", True),
    )
    queries = []
    for q in data.get("subgroup_queries", []):
        if q["type"] == "kernel":
            queries.append({"type": "kernel", "mu": _vec(q["mu"])})
        else:
            queries.append({"type": "subspace", "basis": tuple(_vec(v) for v in q["basis"])})
    return ProblemFile(problem, tuple(queries))


def problem_to_dict(problem: GitProblem, subgroup_queries=()) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "name": problem.name,
        "rank": problem.d,
        "weights": [_vec_out(w) for w in problem.ws.weights],
    }
    if problem.family.mode == ALL_SUBSETS:
        out["supports"] = {"mode": ALL_SUBSETS}
    else:
        out["supports"] = {"mode": problem.family.mode, "sets": [list(s) for s in problem.family.supports]}
    if problem.relation_degrees:
        out["relation_degrees"] = [_vec_out(g) for g in problem.relation_degrees]
    out["grosshans_assumed"] = problem.grosshans_assumed
    if problem.notes:
        out["notes"] = problem.notes
    qs = []
    for q in subgroup_queries:
        if q["type"] == "kernel":
            qs.append({"type": "kernel", "mu": _vec_out(q["mu"])})
        else:
            qs.append({"type": "subspace", "basis": [_vec_out(v) for v in q["basis"]]})
    if qs:
        out["subgroup_queries"] = qs
    return out


def loads(text: str) -> ProblemFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return problem_from_dict(data)


_FLAT = re.compile(r'\[\s+([-\d",\s]+?)\s+\]')


def pretty_json(data) -> str:
    """Indented JSON with innermost integer arrays kept on one line."""
    text = json.dumps(data, indent=2)
    return _FLAT.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text) + "\n"


def dumps(problem: GitProblem, subgroup_queries=()) -> str:
    return pretty_json(problem_to_dict(problem, subgroup_queries))


def fixture_names() -> list:
    return sorted(
        p.name[: -len(".json")]
        for p in resources.files("gitfan.data").joinpath("fixtures").iterdir()
        if p.name.endswith(".json")
    )


def load(path) -> ProblemFile:
    """Load a problem file; a bare shipped fixture name is accepted too."""
    p = Path(path)
    if not p.exists() and str(path) in fixture_names():
        text = resources.files("gitfan.data").joinpath("fixtures", f"{path}.json").read_text()
        return loads(text)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
