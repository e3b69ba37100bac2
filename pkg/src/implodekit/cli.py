"""Command-line front end.  Reports go to stdout (or --output); diagnostics to stderr.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import report, sun
from .basicaffine import EMBEDDED_POINT_SCHEMA, embed_su_n, su3_quadric_residual, wz_coordinates
from .chamber import enumerate_faces, face_of, face_relations, make_face
from .errors import ImplodeKitError
from .implosion import (STRATUM_SCHEMA, GroupPointSUn, implode_equivalent_su_n, strata_report, su_n_datum_check,
                        universal_strata)
from .numgeom import SUITE_SCHEMA, rng_for
from .quantization import (CHARACTER_SCHEMA, CUT_SCHEMA, character_to_json, cut_polytope, holomorphic_induct, lr_as_weights,
                           rr_implosion, tensor_decompose)
from .rootdata import (RootDatum, build_root_datum, positive_roots, root_datum_from_json, torus,
                       unitary_group, weyl_group_order)
from .verify import SUITES, run_suite

SEED_ENV = "IMPLODEKIT_SEED"
MAX_SEED = 2**64

GROUP_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "datum", "rank_ss", "central_rank", "dim",
                 "positive_roots", "rho", "weyl_group_order"],
    "properties": {"schema_version": {"const": 1}, "dim": {"type": "integer"},
                   "weyl_group_order": {"type": "integer", "minimum": 1}},
}

FACES_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "faces", "order"],
    "properties": {
        "schema_version": {"const": 1},
        "faces": {"type": "array", "items": {"type": "object", "required": ["face", "dim"]}},
        "order": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
    },
}

SMOOTH_LOCUS_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "faces", "smooth_faces"],
    "properties": {"schema_version": {"const": 1},
                   "faces": {"type": "array", "items": {"type": "object",
                                                        "required": ["face", "smoothness"]}}},
}

EQUIVALENT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "equivalent"],
    "properties": {"schema_version": {"const": 1}, "equivalent": {"type": "boolean"}},
}

_SERIES_NAME = re.compile(r"^([A-Ga-g])(\d+)(?:/(adjoint|ad|sc|simply-connected))?$")


class InputError(Exception):
    pass


def parse_group(spec: str) -> RootDatum:
    """A2, B3/adjoint, SU(3), SO(3), U(2), T2, or a path to a root-datum JSON file."""
    s = spec.strip()
    if m := re.fullmatch(r"SU\((\d+)\)", s, re.I):
        return build_root_datum("A", int(m[1]) - 1, name=f"SU({m[1]})")
    if re.fullmatch(r"SO\(3\)", s, re.I):
        return build_root_datum("A", 1, "adjoint", name="SO(3)")
    if m := re.fullmatch(r"U\((\d+)\)", s, re.I):
        return unitary_group(int(m[1]))
    if m := re.fullmatch(r"T(\d+)", s):
        return torus(int(m[1]))
    if m := _SERIES_NAME.fullmatch(s):
        letter, rank = m[1].upper(), int(m[2])
        series = letter if letter in "ABCD" else f"{letter}{rank}"
        return build_root_datum(series, rank, m[3] or "simply-connected")
    path = Path(s)
    if path.is_file():
        return root_datum_from_json(path.read_text())
    raise InputError(f"unrecognised group {spec!r} (not a known name or a readable file)")


def parse_weight(text: str, exact: bool = False) -> tuple:
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        vals = tuple(Fraction(p) for p in parts)
    except ValueError:
        raise InputError(f"bad weight {text!r}") from None
    if exact:
        if any(v.denominator != 1 for v in vals):
            raise InputError(f"weight {text!r} must be integral")
        return tuple(int(v) for v in vals)
    return tuple(int(v) if v.denominator == 1 else v for v in vals)


def parse_weight_list(text: str, sep: str, exact: bool = False) -> list:
    text = text.strip()
    if not text:
        return []
    return [parse_weight(t, exact) for t in re.split(sep, text)]


def _matrix(obj) -> np.ndarray:
    try:
        return np.array([[complex(*e) if isinstance(e, list) else complex(e) for e in row] for row in obj])
    except (TypeError, ValueError):
        raise InputError("matrices are lists of rows of [re, im] pairs") from None


# -- commands ------------------------------------------------------------------------

def cmd_describe_group(args, d):
    return {"schema_version": 1, "group": d.name, "datum": d.to_json(), "rank_ss": d.rank_ss,
            "central_rank": d.central_rank, "dim": d.dim_group,
            "positive_roots": [list(a.weight) for a in positive_roots(d)],
            "rho": list(d.rho), "weyl_group_order": weyl_group_order(d)}, True


def cmd_faces(args, d):
    order = face_relations(d)
    faces = list(order.faces)
    return {"schema_version": 1, "group": d.name,
            "faces": [{"face": f.to_json(), "dim": f.dim} for f in faces],
            "order": sorted([list(a), list(b)] for a, b in order.pairs)}, True


def cmd_strata(args, d):
    return strata_report(d), True


def cmd_smooth_locus(args, d):
    rows = []
    for s in universal_strata(d):
        row = {"face": s.face.to_json(), "smoothness": s.smoothness.to_json(), "real_dim": s.real_dim}
        if s.smoothness.slice_complex_dim is not None:
            row["slice_complex_dim"] = s.smoothness.slice_complex_dim
        rows.append(row)
    smooth = [r["face"] for r in rows if r["smoothness"]["kind"] == "Smooth"]
    return {"schema_version": 1, "group": d.name, "faces": rows, "smooth_faces": smooth}, True


def cmd_embed(args, d):
    n = su_n_datum_check(d)
    if args.weight is None:
        raise InputError("embed needs --lambda")
    lam = parse_weight(args.weight)
    k = np.eye(n, dtype=complex) if args.identity else sun.random_su(n, rng_for(args.seed, "embed"))
    point = embed_su_n(k, lam)
    out = point.to_json(d.name)
    if n == 3:
        w, z = wz_coordinates(point)
        out["w"] = [[x.real, x.imag] for x in w]
        out["z"] = [[x.real, x.imag] for x in z]
        out["quadric_residual"] = su3_quadric_residual(point)
    return out, True


def cmd_verify(args, d):
    out = run_suite(args.suite, d, args.seed, args.count, args.tolerance)
    return out, out["pass"]


def cmd_quantize(args, d):
    if args.tensor is None and args.induce is None:
        raise InputError("quantize needs --tensor or --induce")
    if args.tensor is not None:
        factors = parse_weight_list(args.tensor, r"\s+x\s+", exact=True)
        if len(factors) != 2:
            raise InputError('--tensor takes two weights, e.g. "1,0 x 0,1"')
        result = tensor_decompose(d, *factors)
    else:
        t = {}
        for w in parse_weight_list(args.induce, r"\s*;\s*", exact=True):
            t[w] = t.get(w, 0) + 1
        result = holomorphic_induct(d, t)
    return {"schema_version": 1, "group": d.name, "character": character_to_json(result)}, True


def cmd_implode_quantize(args, d):
    labels = parse_weight_list(args.orbits or "", r"\s+x\s+", exact=True)
    result = rr_implosion(d, labels)
    out = {"schema_version": 1, "group": d.name, "character": character_to_json(result)}
    ok = True
    if len(labels) == 2 and d.series == "A" and d.isogeny == "simply-connected" and not d.central_rank:
        ok = lr_as_weights(d.rank_ss + 1, *labels) == result
        out["lr_agrees"] = ok
    return out, ok


def cmd_cut_polytope(args, d):
    if args.lambda0 is None or args.points is None:
        raise InputError("cut-polytope needs --lambda0 and --points")
    lam0 = parse_weight(args.lambda0)
    points = parse_weight_list(args.points, r"\s*;\s*")
    tau = face_of(d, lam0) if args.face is None else make_face(d, parse_weight(args.face, exact=True))
    kept = cut_polytope(d, points, lam0, tau)
    as_str = lambda p: [str(Fraction(x)) for x in p]  # noqa: E731
    return {"schema_version": 1, "group": d.name, "face": tau.to_json(), "lambda0": as_str(lam0),
            "points": [as_str(p) for p in kept]}, True


def cmd_equivalent(args, d):
    su_n_datum_check(d)
    if args.input is None:
        raise InputError("equivalent needs --input (JSON file, or - for stdin)")
    raw = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    try:
        obj = json.loads(raw)
        m1 = GroupPointSUn(_matrix(obj["k1"]), tuple(Fraction(str(x)) for x in obj["lambda1"]))
        m2 = GroupPointSUn(_matrix(obj["k2"]), tuple(Fraction(str(x)) for x in obj["lambda2"]))
    except (KeyError, TypeError, json.JSONDecodeError) as e:
        raise InputError(f"bad equivalence input: {e}") from None
    return {"schema_version": 1, "group": d.name, "equivalent": implode_equivalent_su_n(m1, m2)}, True


# subcommand -> (handler, schema of its JSON report)
COMMANDS = {
    "describe-group": (cmd_describe_group, GROUP_SCHEMA),
    "faces": (cmd_faces, FACES_SCHEMA),
    "strata": (cmd_strata, STRATUM_SCHEMA),
    "smooth-locus": (cmd_smooth_locus, SMOOTH_LOCUS_SCHEMA),
    "embed": (cmd_embed, EMBEDDED_POINT_SCHEMA),
    "verify": (cmd_verify, SUITE_SCHEMA),
    "quantize": (cmd_quantize, CHARACTER_SCHEMA),
    "implode-quantize": (cmd_implode_quantize, CHARACTER_SCHEMA),
    "cut-polytope": (cmd_cut_polytope, CUT_SCHEMA),
    "equivalent": (cmd_equivalent, EQUIVALENT_SCHEMA),
}

# commands whose group may be omitted
_GROUP_OPTIONAL = {"verify"}


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _positive_int(text):
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return x


def _seed(text):
    x = int(text)
    if not 0 <= x < MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="A2, B3/adjoint, SU(3), SO(3), U(2), T1 or a JSON file")
    common.add_argument("--seed", type=_seed, default=None, help=f"default: ${SEED_ENV} or 0")
    common.add_argument("--count", type=_positive_int, default=200)
    common.add_argument("--tolerance", type=_positive_float, default=None,
                        help="replace the residual bound of every check")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="implodekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "embed":
            p.add_argument("--lambda", dest="weight", help='dominant weight, e.g. "1,1/2"')
            p.add_argument("--identity", action="store_true", help="use k = 1 instead of a seeded random k")
        elif name == "verify":
            p.add_argument("--suite", choices=SUITES, required=True)
        elif name == "quantize":
            p.add_argument("--tensor", help='two weights, e.g. "1,0 x 0,1"')
            p.add_argument("--induce", help='weights separated by ";" to induce holomorphically')
        elif name == "implode-quantize":
            p.add_argument("--orbits", default="", help='orbit labels, e.g. "1,0 x 0,1"')
        elif name == "cut-polytope":
            p.add_argument("--lambda0")
            p.add_argument("--points", help='weights separated by ";"')
            p.add_argument("--face", help="vanishing set of the face; default: the face of lambda0")
        elif name == "equivalent":
            p.add_argument("--input", help='JSON {"k1", "lambda1", "k2", "lambda2"}; - for stdin')
    return parser


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    return _seed(raw)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func, _ = COMMANDS[args.command]
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.group is None and args.command not in _GROUP_OPTIONAL:
            raise InputError(f"{args.command} needs --group")
        d = parse_group(args.group) if args.group is not None else None
        payload, ok = func(args, d)
        text = report.dumps(payload) if args.format == "json" else report.to_text(payload)
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
    except (InputError, ImplodeKitError, ValueError, OSError, argparse.ArgumentTypeError) as e:
        print(f"implodekit: error: {e}", file=sys.stderr)
        return 2
    if not ok:
        print(f"implodekit: {args.command}: check failed", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))
