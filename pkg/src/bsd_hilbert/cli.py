"""Command-line front end.

Subcommands: ``distance``, ``norm``, ``compare``, ``verify``, ``sample`` and
``bidisc-demo``. Points and tangent vectors are given as JSON, either as a
matrix payload ``{"rows": r, "cols": c, "data": [[...], ...]}`` or as a plain
(nested) list; entries are numbers or ``[re, im]`` pairs. Any option can
also be read from a JSON file with ``--input PATH``; flags given on the
command line win over the file.

Exit status is 0 on success, 1 on invalid input and 2 when a verification
suite fails.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from .domains import TypeIV, membership_violation, parse_domain, sample_interior, sample_shilov
from .metrics import (bergman_norm, caratheodory_norm, disc_distance, finsler_norm,
                      hilbert_distance, metric_report)
from .oracle import oracle_distance, verify_invariance, verify_oracle_agreement, verify_semimetric

__all__ = ["main", "build_parser", "encode_matrix", "decode_matrix"]

DEFAULTS = {
    "seed": 0,
    "tol": 1e-10,
    "samples": 16384,
    "refine": 200,
    "output": "json",
    "triples": 1000,
    "trials": 100,
    "pairs": 20,
    "grid": 10,
    "count": 1,
    "kind": "interior",
}


class ValidationError(ValueError):
    pass


def encode_complex(c):
    return [float(c.real), float(c.imag)]


def encode_matrix(m):
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    return {"rows": m.shape[0], "cols": m.shape[1],
            "data": [[encode_complex(x) for x in row] for row in m]}


def _decode_entry(x):
    if isinstance(x, list) and len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
        return complex(x[0], x[1])
    if isinstance(x, (int, float)):
        return complex(x)
    raise ValidationError(f"cannot read {x!r} as a complex number")


def decode_matrix(payload):
    """Inverse of ``encode_matrix``.

    Also accepts a scalar, a flat list of reals (one row) or a list of rows
    whose entries are reals or ``[re, im]`` pairs.
    """
    if isinstance(payload, str):
        try:
            payload = json.loads(payload)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON matrix: {exc}") from None
    if isinstance(payload, dict):
        try:
            rows, cols, data = payload["rows"], payload["cols"], payload["data"]
        except KeyError as exc:
            raise ValidationError(f"matrix payload is missing {exc}") from None
        m = np.array([[_decode_entry(x) for x in row] for row in data], dtype=complex)
        if m.shape != (rows, cols):
            raise ValidationError(f"matrix data has shape {m.shape}, declared {(rows, cols)}")
        return m
    if isinstance(payload, (int, float)):
        return np.array([[complex(payload)]])
    if isinstance(payload, list) and payload and all(isinstance(x, (int, float)) for x in payload):
        return np.array([[complex(x) for x in payload]])
    if isinstance(payload, list) and payload and all(isinstance(r, list) for r in payload):
        rows = [[_decode_entry(x) for x in row] for row in payload]
        if len({len(r) for r in rows}) != 1:
            raise ValidationError("matrix rows have different lengths")
        return np.array(rows, dtype=complex)
    raise ValidationError(f"cannot read {payload!r} as a matrix")


def _domain(args):
    if args.domain is None:
        raise ValidationError("--domain is required")
    try:
        return parse_domain(args.domain, args.p, args.q, args.n)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _point(domain, payload, name):
    if payload is None:
        raise ValidationError(f"--{name} is required")
    z = decode_matrix(payload)
    if domain.family == "IV" and z.ndim == 2 and z.shape[1] == 1:
        z = z.T
    if z.shape != domain.shape:
        raise ValidationError(f"{name} has shape {z.shape}, expected {domain.shape} for {domain.label}")
    return z


def _interior_point(domain, payload, name, tol):
    z = _point(domain, payload, name)
    why = membership_violation(domain, z, sym_tol=tol)
    if why is not None:
        raise ValidationError(f"{name} is not an interior point of {domain.label}: {why}")
    return z


def _tangent(domain, payload, tol):
    xi = _point(domain, payload, "xi")
    if domain.family == "II" and np.linalg.norm(xi + xi.T) > tol:
        raise ValidationError("xi must be antisymmetric for type II")
    if domain.family == "III" and np.linalg.norm(xi - xi.T) > tol:
        raise ValidationError("xi must be symmetric for type III")
    return xi


def cmd_distance(args):
    domain = _domain(args)
    z1 = _interior_point(domain, args.z1, "z1", args.tol)
    z2 = _interior_point(domain, args.z2, "z2", args.tol)
    rep = metric_report(domain, z1, z2)
    out = {"domain": domain.label, **rep.to_dict()}
    if args.oracle:
        res = oracle_distance(domain, z1, z2, args.samples, args.refine, args.seed)
        out["oracle"] = {"best_value": res.best_value, "gap": rep.distance - res.best_value,
                         "samples_used": res.samples_used, "refined": res.refined,
                         "argmax": [encode_matrix(x) for x in res.argmax]}
    return [out], 0


def _norms(domain, xi):
    return {"finsler": finsler_norm(domain, xi), "caratheodory": caratheodory_norm(domain, xi),
            "bergman": bergman_norm(domain, xi)}


def cmd_norm(args):
    domain = _domain(args)
    xi = _tangent(domain, args.xi, args.tol)
    return [{"domain": domain.label, **_norms(domain, xi)}], 0


def _ratio(a, b):
    if a is None or b is None or b == 0.0:
        return None
    return a / b


def cmd_compare(args):
    domain = _domain(args)
    xi = _tangent(domain, args.xi, args.tol)
    row = {"domain": domain.label, **_norms(domain, xi)}
    row["finsler/caratheodory"] = _ratio(row["finsler"], row["caratheodory"])
    row["finsler/bergman"] = _ratio(row["finsler"], row["bergman"])
    row["caratheodory/bergman"] = _ratio(row["caratheodory"], row["bergman"])
    return [row], 0


def cmd_verify(args):
    domain = _domain(args)
    tol = args.tol_given
    suites = [
        verify_semimetric(domain, args.triples, args.seed, **({"tol": tol} if tol else {})),
        verify_invariance(domain, args.trials, args.seed, **({"tol": tol} if tol else {})),
        verify_oracle_agreement(domain, args.pairs, args.seed, args.samples, args.refine,
                                **({"upper": tol, "lower": tol} if tol else {})),
    ]
    rows = [{"domain": domain.label, **r.to_dict()} for r in suites]
    return rows, 0 if all(r.passed for r in suites) else 2


def cmd_sample(args):
    domain = _domain(args)
    rng = np.random.default_rng(args.seed)
    draw = sample_interior if args.kind == "interior" else sample_shilov
    rows = []
    for _ in range(args.count):
        z = draw(domain, int(rng.integers(2 ** 63)))
        rows.append({"domain": domain.label, "kind": args.kind, "point": encode_matrix(z)})
    return rows, 0


def bidisc_rows(grid=10):
    """Sum of disc distances versus the type IV distance of the image point."""
    dom = TypeIV(2)
    zero = np.zeros((1, 2), dtype=complex)
    rows = []
    for x in np.linspace(0.0, 0.9, grid):
        for y in np.linspace(0.0, 0.9, grid):
            image = np.array([[(x + y) / np.sqrt(2.0), 1j * (x - y) / np.sqrt(2.0)]])
            disc = disc_distance(x) + disc_distance(y)
            lie = hilbert_distance(dom, zero, image)
            rows.append({"x": float(x), "y": float(y), "bidisc": disc, "type_iv": lie,
                         "difference": lie - disc})
    return rows


def cmd_bidisc(args):
    return bidisc_rows(args.grid), 0


COMMANDS = {
    "distance": cmd_distance,
    "norm": cmd_norm,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "sample": cmd_sample,
    "bidisc-demo": cmd_bidisc,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--domain", choices=["type-i", "type-ii", "type-iii", "type-iv"])
    common.add_argument("--p", type=int)
    common.add_argument("--q", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--seed", type=int, help="random seed (default 0)")
    common.add_argument("--tol", type=float, help="validation tolerance (default 1e-10)")
    common.add_argument("--samples", type=int, help="oracle boundary pairs (default 16384)")
    common.add_argument("--refine", type=int, help="oracle refinement iterations (default 200)")
    common.add_argument("--output", choices=["json", "csv"])
    common.add_argument("--input", metavar="PATH", help="JSON file with option values")

    parser = argparse.ArgumentParser(prog="bsd-hilbert", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", parents=[common], help="closed-form Hilbert distance")
    p.add_argument("--z1")
    p.add_argument("--z2")
    p.add_argument("--oracle", action="store_true", default=None,
                   help="also run the brute-force oracle and report the gap")

    for name, text in (("norm", "infinitesimal norms at the origin"),
                       ("compare", "Finsler, Caratheodory and Bergman norms with ratios")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--xi", help="tangent vector at the origin")

    p = sub.add_parser("verify", parents=[common], help="semimetric, invariance and oracle suites")
    p.add_argument("--triples", type=int, help="semimetric triples (default 1000)")
    p.add_argument("--trials", type=int, help="invariance trials (default 100)")
    p.add_argument("--pairs", type=int, help="oracle pairs (default 20)")

    p = sub.add_parser("sample", parents=[common], help="seeded random points")
    p.add_argument("--kind", choices=["interior", "shilov"])
    p.add_argument("--count", type=int)

    p = sub.add_parser("bidisc-demo", parents=[common], help="bidisc versus type IV n=2")
    p.add_argument("--grid", type=int, help="grid points per axis on [0, 0.9] (default 10)")
    return parser


def _resolve(args):
    if args.input:
        try:
            with open(args.input) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"cannot read --input file: {exc}") from None
        if not isinstance(data, dict):
            raise ValidationError("--input file must hold a JSON object")
        for key, val in data.items():
            key = key.replace("-", "_")
            if not hasattr(args, key) or key == "command":
                raise ValidationError(f"unknown option {key!r} in --input file")
            if getattr(args, key) is None:
                setattr(args, key, val if not isinstance(val, (dict, list)) else json.dumps(val))
    args.tol_given = args.tol
    for key, val in DEFAULTS.items():
        if getattr(args, key, val) is None:
            setattr(args, key, val)
    if getattr(args, "oracle", None) is None:
        args.oracle = False
    return args


def _flatten(row):
    out = {}
    for key, val in row.items():
        if key == "sigma":
            out.update({f"sigma_{i + 1}": s for i, s in enumerate(val)})
        elif key == "oracle":
            out.update({"oracle_best_value": val["best_value"], "oracle_gap": val["gap"]})
        elif key == "details":
            out.update(val)
        elif key == "point":
            out.update({"rows": val["rows"], "cols": val["cols"],
                        "data": json.dumps(val["data"])})
        else:
            out[key] = val
    return out


def render(rows, fmt):
    if fmt == "json":
        return json.dumps(rows[0] if len(rows) == 1 else rows, indent=2)
    flat = [_flatten(r) for r in rows]
    fields = list(dict.fromkeys(k for r in flat for k in r))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in flat:
        writer.writerow({k: ("" if r.get(k) is None else repr(r[k]) if isinstance(r.get(k), float)
                             else r.get(k)) for k in fields})
    return buf.getvalue().rstrip("\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _resolve(args)
        rows, status = COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(render(rows, args.output))
    return status
