"""Command-line front end.

Subcommands: construct, verify, eta, bounds, export.  Exit codes are part of
the contract: 0 ok, 1 verification failure, 2 usage or parameter error,
3 catalog gap, 4 oracle budget exceeded.  All outputs are deterministic;
JSON artifacts are key-sorted and byte-identical across runs.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, constructions, minors, serialize, vortex
from .errors import (
    BudgetExceeded,
    GenusOutOfCatalog,
    GZero,
    HadwigerError,
    KTooSmall,
    NotInCatalog,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CATALOG = 3
EXIT_BUDGET = 4


def default_cap() -> int:
    cap = os.environ.get("HADWIGER_ETA_CAP")
    return int(cap) if cap else 12


def _write(path: str | None, text: str):
    if path:
        with open(path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    cert = constructions.with_apex(args.g, args.p, args.k, args.a)
    rep = constructions.verify_certificate(cert)
    _write(args.out, serialize.dumps(serialize.certificate_to_json(cert)))
    if not rep.ok:
        print(rep, file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.certificate) as f:
            obj = json.load(f)
        cert = serialize.certificate_from_json(obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"unreadable certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = constructions.verify_certificate(cert)
    g, p, k, a = cert.structure.params
    rep.extend(bounds.sandwich_check(cert, g, p, k, a, cap=default_cap()), prefix="sandwich-")
    print(serialize.dumps({"ok": rep.ok, "checks": rep.to_json()}), end="")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_eta(args) -> int:
    try:
        with open(args.graph) as f:
            g = serialize.graph_from_json(json.load(f))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"unreadable graph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cap = args.cap if args.cap is not None else default_cap()
    eta, model = minors.hadwiger_model(g, cap=cap)
    print(eta)
    if args.witness:
        _write(args.witness, serialize.dumps(serialize.model_to_json(model)))
    return EXIT_OK


def cmd_bounds(args) -> int:
    rows = [
        ("surface_bound", bounds.surface_bound(args.g)),
        ("lemma21_bound", bounds.lemma21_bound(args.k, args.tw)),
        ("main_upper", bounds.main_upper(args.g, args.p, args.k)),
        ("full_upper", bounds.full_upper(args.g, args.p, args.k, args.a)),
        ("main_tool_bound", bounds.main_tool_bound(args.k, args.p, args.g)),
        ("lower_guarantee", bounds.lower_guarantee(args.g, args.p, args.k, args.a)),
    ]
    for name, value in rows:
        print(f"{name:16} {value}")
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        with open(args.certificate) as f:
            cert = serialize.certificate_from_json(json.load(f))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"unreadable certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    host = vortex.flatten(cert.structure)
    if args.format == "dot":
        _write(args.out, serialize.graph_to_dot(host))
    else:
        _write(args.out, serialize.dumps(serialize.graph_to_json(host)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadwiger",
        description="Construct, verify and bound complete-minor certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a certificate for (g,p,k,a)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--out", help="certificate output path (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eta", help="exact Hadwiger number of a graph file")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, help="oracle vertex cap (env HADWIGER_ETA_CAP)")
    p.add_argument("--witness", help="write the witness model here")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("bounds", help="print all bound values for (g,p,k,a)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--tw", type=int, default=0, help="treewidth for the degree bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("export", help="export a certificate's flattened graph")
    p.add_argument("certificate")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GenusOutOfCatalog, NotInCatalog) as exc:
        print(f"catalog: {exc}", file=sys.stderr)
        return EXIT_CATALOG
    except BudgetExceeded as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GZero, KTooSmall, ValueError) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HadwigerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
