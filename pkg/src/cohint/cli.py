"""Command-line front end.

    cohint describe --input pair.json
    cohint poset    --input pair.json [--dot PATH]
    cohint verify   --input pair.json [--cutoff N] [--json PATH|-]
    cohint rank1    --input pair.json [--cutoff N]

Exit codes: 0 success / identity holds, 1 identity (or rank-1 comparison)
fails, 2 invalid input.

Input document (JSON)::

    {
      "group": {"family": "gl", "n": 2},
      "representation": {"weights": [[[1, -1], 1], [[-1, 1], 1]], "adjoint": 0},
      "options": {"cutoff": 20}
    }

Group families: {"family": "torus", "rank": r}, {"family": "gl", "n": n},
{"family": "sl", "n": n}, {"family": "product", "factors": [...]}, or raw
data {"rank": r, "roots": [...], "weyl_generators": [[[...]]], "dim": ...}.
For sl(n), "coordinates": "gl" lets weights be written in the n coordinates
of gl(n); they are restricted to the coroot lattice.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from . import group_rep
from .bps import Options, rank1_conjecture_check, verify_integrality
from .group_rep import DescriptorError, GroupDescriptor, PairVG, SymmetricRep, is_symmetric
from .lattice import LatticeError
from .poset import poset_data, to_dot
from .weyl import GroupError

DEFAULT_CUTOFF = 20

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class InputError(ValueError):
    pass


@dataclass
class InputDescriptor:
    group: dict
    representation: dict
    options: dict = field(default_factory=lambda: {"cutoff": DEFAULT_CUTOFF})


def _int_vector(v: Any, what: str) -> list[int]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise InputError(f"{what} must be a list of integers, got {v!r}")
    return list(v)


def _weight_pairs(items: Any, what: str) -> list[list]:
    """Normalise [[coeffs, mult], ...] (or bare coefficient lists) into sorted aggregated pairs."""
    if not isinstance(items, list):
        raise InputError(f"{what} must be a list")
    counts: dict[tuple, int] = {}
    for it in items:
        if isinstance(it, list) and len(it) == 2 and isinstance(it[0], list):
            coeffs, mult = _int_vector(it[0], what), it[1]
            if not isinstance(mult, int) or mult < 0:
                raise InputError(f"bad multiplicity {mult!r} in {what}")
        else:
            coeffs, mult = _int_vector(it, what), 1
        counts[tuple(coeffs)] = counts.get(tuple(coeffs), 0) + mult
    return [[list(k), m] for k, m in sorted(counts.items()) if m > 0]


def _normalise_group(g: Any) -> dict:
    if not isinstance(g, dict):
        raise InputError("group must be an object")
    fam = g.get("family")
    if fam == "torus":
        return {"family": "torus", "rank": _nonneg(g.get("rank"), "torus rank")}
    if fam in ("gl", "sl"):
        return {"family": fam, "n": _nonneg(g.get("n"), f"{fam} size", minimum=1)}
    if fam == "product":
        factors = g.get("factors")
        if not isinstance(factors, list) or not factors:
            raise InputError("product needs a nonempty list of factors")
        return {"family": "product", "factors": [_normalise_group(f) for f in factors]}
    if fam is not None:
        raise InputError(f"unknown family {fam!r}")
    rank = _nonneg(g.get("rank"), "rank")
    gens = g.get("weyl_generators", [])
    if not isinstance(gens, list):
        raise InputError("weyl_generators must be a list of matrices")
    mats = []
    for m in gens:
        if not isinstance(m, list) or len(m) != rank:
            raise InputError(f"Weyl generator {m!r} is not a {rank}x{rank} matrix")
        mats.append([_int_vector(row, "matrix row") for row in m])
    out = {"rank": rank, "roots": _weight_pairs(g.get("roots", []), "roots"), "weyl_generators": mats,
           "label": str(g.get("label", "raw"))}
    if g.get("dim") is not None:
        out["dim"] = _nonneg(g["dim"], "dim")
    return out


def _nonneg(x: Any, what: str, minimum: int = 0) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or x < minimum:
        raise InputError(f"{what} must be an integer >= {minimum}, got {x!r}")
    return x


def parse_descriptor(doc: Any) -> InputDescriptor:
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    if "group" not in doc or "representation" not in doc:
        raise InputError("input needs 'group' and 'representation'")
    group = _normalise_group(doc["group"])
    rep = doc["representation"]
    if not isinstance(rep, dict):
        raise InputError("representation must be an object")
    coords = rep.get("coordinates", "lattice")
    if coords not in ("lattice", "gl"):
        raise InputError(f"unknown coordinates {coords!r}")
    if coords == "gl" and group.get("family") != "sl":
        raise InputError("gl coordinates are only meaningful for the sl family")
    representation = {
        "weights": _weight_pairs(rep.get("weights", []), "weights"),
        "adjoint": _nonneg(rep.get("adjoint", 0), "adjoint copies"),
        "coordinates": coords,
    }
    opts = doc.get("options", {}) or {}
    if not isinstance(opts, dict):
        raise InputError("options must be an object")
    cutoff = opts.get("cutoff", DEFAULT_CUTOFF)
    if not isinstance(cutoff, int) or isinstance(cutoff, bool):
        raise InputError("cutoff must be an integer")
    return InputDescriptor(group, representation, {"cutoff": cutoff})


def serialize(desc: InputDescriptor) -> dict:
    return {"group": desc.group, "representation": desc.representation, "options": desc.options}


def build_group(g: dict) -> GroupDescriptor:
    fam = g.get("family")
    if fam == "torus":
        return group_rep.torus(g["rank"])
    if fam == "gl":
        return group_rep.gl(g["n"])
    if fam == "sl":
        return group_rep.sl(g["n"])
    if fam == "product":
        return group_rep.product(*(build_group(f) for f in g["factors"]))
    roots = [tuple(c) for c, m in g["roots"] for _ in range(m)]
    return group_rep.raw(g["rank"], roots, g["weyl_generators"], label=g.get("label", "raw"), dim=g.get("dim"))


def build_pair(desc: InputDescriptor) -> PairVG:
    group = build_group(desc.group)
    rep_doc = desc.representation
    pairs = rep_doc["weights"]
    if rep_doc["coordinates"] == "gl":
        pairs = [(group_rep.sl_coroot_coordinates(c), m) for c, m in pairs]
    rep = SymmetricRep.with_multiplicities(group.rank, pairs)
    for _ in range(rep_doc["adjoint"]):
        rep = rep + group_rep.adjoint(group)
    return PairVG(rep, group)


def load(path: str) -> InputDescriptor:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return parse_descriptor(doc)


def _symmetric_pair(desc: InputDescriptor) -> PairVG:
    p = build_pair(desc)
    if not is_symmetric(p.rep):
        raise InputError("representation is not symmetric")
    return p


# -- subcommands ------------------------------------------------------------

def cmd_describe(desc: InputDescriptor, out=None) -> int:
    out = out or sys.stdout
    p = _symmetric_pair(desc)
    print(f"group {p.group.label}", file=out)
    print(f"rank {p.rank}, dim G {p.group.dim}, |W| {p.group.weyl.order}, "
          f"dim V {p.rep.dim}, d {p.d}, symmetric: yes", file=out)
    return EXIT_OK


def cmd_poset(desc: InputDescriptor, dot_path: str | None = None, out=None) -> int:
    out = out or sys.stdout
    p = _symmetric_pair(desc)
    data = poset_data(p)
    orbit_of = {i: k for k, o in enumerate(data.orbits) for i in o}
    print(f"{len(data.classes)} classes, {len(data.orbits)} orbits, {len(data.hasse)} covering edges", file=out)
    print(f"{'class':>5} {'orbit':>5} {'dimV^l':>6} {'roots':>5} {'dim g_l':>7} {'d':>4} {'r':>4} "
          f"{'|W_l|':>5} {'|W^l|':>5} {'|Wbar|':>6}  cocharacter", file=out)
    for i, c in enumerate(data.classes):
        s = data.stabilizers[i]
        print(f"{i:>5} {orbit_of[i]:>5} {len(c.v_fixed_key):>6} {len(c.root_key):>5} {c.g_lambda_dim:>7} "
              f"{c.d:>4} {c.r:>4} {s.setwise.order:>5} {s.pointwise.order:>5} {s.relative_order:>6}  "
              f"{list(c.rep_cochar)}", file=out)
    if dot_path:
        with open(dot_path, "w") as fh:
            fh.write(to_dot(data))
    return EXIT_OK


def cmd_verify(desc: InputDescriptor, cutoff: int | None = None, json_path: str | None = None,
               corrupt_kernel: bool = False, out=None) -> int:
    out = out or sys.stdout
    p = _symmetric_pair(desc)
    cutoff = desc.options["cutoff"] if cutoff is None else cutoff
    options = Options(drop=1 if corrupt_kernel else 0)
    report = verify_integrality(p, cutoff, options=options)
    cons = report.contributions
    header = f"{'deg':>5} {'H*(V/G)':>8} " + " ".join(f"{'orb' + str(k):>6}" for k in range(len(cons))) + f" {'resid':>6}"
    print(header, file=out)
    degrees = sorted(set(report.target_series) | set(report.residual) | {n for c in cons for n in c.dims})
    for n in degrees:
        row = f"{n:>5} {report.target_series.get(n, 0):>8} " + " ".join(f"{c.dims.get(n, 0):>6}" for c in cons)
        print(row + f" {report.residual.get(n, 0):>6}", file=out)
    for k, c in enumerate(cons):
        print(f"orb{k}: classes {list(c.orbit)}, |Wbar| {c.relative_weyl_order}, "
              f"epsilon {list(c.eps)}, P dims {_fmt(c.p_dims)}", file=out)
    verdict = "PASS" if report.passed else "FAIL"
    print(f"{verdict}: integrality identity {'holds' if report.passed else 'fails'} up to shifted degree {cutoff}", file=out)
    if json_path:
        doc = json.dumps(report.to_json(), indent=2, sort_keys=True)
        if json_path == "-":
            print(doc, file=out)
        else:
            with open(json_path, "w") as fh:
                fh.write(doc + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_rank1(desc: InputDescriptor, cutoff: int | None = None, out=None) -> int:
    out = out or sys.stdout
    p = _symmetric_pair(desc)
    cutoff = desc.options["cutoff"] if cutoff is None else cutoff
    rep = rank1_conjecture_check(p, cutoff)
    print(f"{'deg':>5} {'engine':>7} {'closed':>7}", file=out)
    for n in sorted(set(rep.engine) | set(rep.closed_form)):
        print(f"{n:>5} {rep.engine.get(n, 0):>7} {rep.closed_form.get(n, 0):>7}", file=out)
    print(f"total dim {rep.total_dim}, palindromic: {'yes' if rep.palindromic else 'no'}", file=out)
    print(f"match: {'yes' if rep.match else 'no'}", file=out)
    return EXIT_OK if rep.match else EXIT_FAIL


def _fmt(m: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(m.items())) + "}"


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH", help="JSON input descriptor")
    parser = argparse.ArgumentParser(prog="cohint", description="Cohomological integrality for symmetric representations")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("describe", parents=[common], help="summarise the pair (V, G)")
    sp = sub.add_parser("poset", parents=[common], help="list partition classes")
    sp.add_argument("--dot", metavar="PATH", help="write the Hasse diagram as DOT")
    sv = sub.add_parser("verify", parents=[common], help="check the integrality identity degree by degree")
    sv.add_argument("--cutoff", type=int)
    sv.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    sv.add_argument("--corrupt-kernel", action="store_true", help=argparse.SUPPRESS)
    sr = sub.add_parser("rank1", parents=[common], help="compare P with the rank-1 closed form")
    sr.add_argument("--cutoff", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        desc = load(args.input)
        if args.command == "describe":
            return cmd_describe(desc)
        if args.command == "poset":
            return cmd_poset(desc, args.dot)
        if args.command == "verify":
            return cmd_verify(desc, args.cutoff, args.json, args.corrupt_kernel)
        return cmd_rank1(desc, args.cutoff)
    except (InputError, DescriptorError, GroupError, LatticeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
