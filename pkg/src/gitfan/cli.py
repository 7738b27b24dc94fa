"""Command line front end: ``gitfan <command> <problem file> [flags]``."""

from __future__ import annotations

import argparse
import sys

from .chambers import certified_bound, embedding_numbers, gitfan, gitfan_box_oracle, interior_cones
from .errors import DataInconsistencyError, FanValidationError, GitFanError, ParseError
from .fan import maximal_cones
from .geometry import cone_to_dict, embedding_report, morphism_graph, report_at
from .problem_io import encode_int, load, pretty_json
from .subgroup import run_query


def _big(obj):
    """Recursively swap integers outside the 64-bit range for strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, dict):
        return {k: _big(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_big(v) for v in obj]
    return obj


def _vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _vecs(vs):
    return "[" + ", ".join(_vec(v) for v in vs) + "]"


def _parse_chi(text):
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise ParseError(f"--chi expects comma separated integers, got {text!r}") from None


def cmd_fan(pf, args, out):
    problem = pf.problem
    fan = gitfan(problem)
    maximal = maximal_cones(fan)
    if args.json:
        data = {
            "name": problem.name,
            "cones": [dict(id=i, **cone_to_dict(fan.cone(i))) for i in fan.ids],
            "maximal": maximal,
            "interior": interior_cones(problem, fan),
        }
        out.write(pretty_json(_big(data)))
        return
    out.write(f"{problem.name}: {len(fan)} cones, {len(maximal)} maximal\n")
    for i in fan.ids:
        c = fan.cone(i)
        line = f"{i:>3}  dim {c.dim}  rays {_vecs(c.rays)}"
        if c.lineality:
            line += f"  lineality {_vecs(c.lineality)}"
        line += f"  facets {_vecs(c.facets)}"
        out.write(line + "\n")


def cmd_chambers(pf, args, out):
    problem = pf.problem
    fan = gitfan(problem)
    numbers = embedding_numbers(problem, fan)
    if args.json:
        data = {
            "name": problem.name,
            "embeddings": len(numbers),
            "chambers": [
                dict(number=k, id=i, **cone_to_dict(fan.cone(i))) for k, i in numbers.items()
            ],
        }
        out.write(pretty_json(_big(data)))
        return
    noun = "embedding" if len(numbers) == 1 else "embeddings"
    out.write(f"{problem.name}: {len(numbers)} {noun}\n")
    for k, i in numbers.items():
        c = fan.cone(i)
        out.write(f"#{k}  cone {i}  dim {c.dim}  rays {_vecs(c.rays)}\n")


def cmd_morphisms(pf, args, out):
    problem = pf.problem
    fan = gitfan(problem)
    g = morphism_graph(problem, fan)
    if args.hasse:
        g = g.hasse()
    numbering = {i: k for k, i in embedding_numbers(problem, fan).items()}
    if args.dot:
        out.write(g.to_dot(numbering=numbering))
        return
    if args.json:
        data = {
            "nodes": [{"id": n, "number": numbering[n], "dim": g.dims[n]} for n in g.nodes],
            "edges": [list(e) for e in g.edges],
        }
        out.write(pretty_json(data))
        return
    out.write(f"{len(g.nodes)} nodes, {len(g.edges)} edges\n")
    for a, b in g.edges:
        out.write(f"{a} -> {b}\n")


def _report_text(r, out):
    out.write(f"embedding #{r.embedding_number} (cone {r.chamber_id})\n")
    out.write(f"  chi: {_vec(r.chi)}\n")
    out.write(f"  sample cone: dim {r.sample.dim}, rays {_vecs(r.sample.rays)}\n")
    out.write(f"  cov: {[list(s) for s in r.cov_supports]}\n")
    out.write(f"  picard basis: {_vecs(r.picard.basis)}\n")
    idx = "infinite" if r.picard_index == float("inf") else r.picard_index
    out.write(f"  picard_index: {idx}\n")
    out.write(f"  locally factorial: {str(r.locally_factorial).lower()}\n")
    out.write(f"  Q-factorial: {str(r.q_factorial).lower()}\n")
    out.write(f"  effective cone rays: {_vecs(r.eff.rays)}\n")
    out.write(f"  canonical_class: {_vec(r.canonical_class)}\n")
    out.write(f"  assumptions: {r.assumptions}\n")


def cmd_geometry(pf, args, out):
    problem = pf.problem
    fan = gitfan(problem)
    if args.chi is not None:
        reports = [report_at(problem, _parse_chi(args.chi), fan)]
    elif args.chamber is not None:
        reports = [embedding_report(problem, args.chamber, fan)]
    else:
        reports = [embedding_report(problem, i, fan) for i in embedding_numbers(problem, fan).values()]
    if args.json:
        out.write(pretty_json(_big([r.to_dict() for r in reports])))
        return
    for r in reports:
        _report_text(r, out)


def cmd_subgroup(pf, args, out):
    results = [r for q in pf.subgroup_queries for r in run_query(pf.problem, q)]
    if args.json:
        out.write(pretty_json([r.to_dict() for r in results]))
        return
    if not results:
        out.write("no subgroup queries\n")
    for r in results:
        note = " (sufficient; converse needs Grosshans)" if r.converse_requires_grosshans else ""
        out.write(f"{r.query}: {str(r.value).lower()}{note}\n")


def cmd_verify(pf, args, out):
    problem = pf.problem
    fan = gitfan(problem)  # validates the fan axioms and the support
    cert = certified_bound(fan)
    bound = args.box if args.box is not None else cert
    oracle = gitfan_box_oracle(problem, bound)
    ours = set(fan.cones)
    if oracle != ours:
        missing = sorted(ours - oracle, key=lambda c: c.sort_key())
        extra = sorted(oracle - ours, key=lambda c: c.sort_key())
        raise DataInconsistencyError(
            "ORACLE_MISMATCH",
            f"box {bound}: {len(missing)} fan cones not seen, {len(extra)} unexpected oracle cones "
            f"(certified bound {cert})",
        )
    out.write(f"PASS: {len(ours)} cones matched (box {bound}, certified bound {cert})\n")


def build_parser():
    ap = argparse.ArgumentParser(prog="gitfan", description="GIT-fans and small-boundary embeddings")
    ap.add_argument("command", choices=sorted(HANDLERS))
    ap.add_argument("file", help="problem JSON file or the name of a shipped fixture")
    ap.add_argument("--json", action="store_true", help="machine readable output")
    ap.add_argument("--dot", action="store_true", help="morphism graph as DOT")
    ap.add_argument("--hasse", action="store_true", help="transitive reduction of the morphism graph")
    ap.add_argument("--chamber", type=int, help="fan id of an interior cone")
    ap.add_argument("--chi", help="character in the interior of the weight cone, e.g. 3,2,1")
    ap.add_argument("--box", type=int, help="box radius for the oracle in verify")
    return ap


HANDLERS = {
    "fan": cmd_fan,
    "chambers": cmd_chambers,
    "morphisms": cmd_morphisms,
    "geometry": cmd_geometry,
    "subgroup": cmd_subgroup,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        pf = load(args.file)
        HANDLERS[args.command](pf, args, sys.stdout)
    except FanValidationError as exc:
        print(f"error: {exc} (witness: {exc.witness})", file=sys.stderr)
        return exc.exit_code
    except GitFanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
