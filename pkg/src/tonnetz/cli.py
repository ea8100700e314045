"""Command-line interface: ``tonnetz build|analyze|render|classify|irrational``.

Every command prints one JSON report on stdout. Validation failures exit
with status 2 and a machine-readable ``error.reason``.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from tonnetz import analysis, chains, core, lattice, render, topology
from tonnetz.errors import TonnetzError
from tonnetz.kernels import BACKEND


def _exact(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vector(args) -> core.LengthVector:
    return core.validate(args.n, args.k, args.lengths)


def _default_name(prefix: str, nums, suffix: str) -> str:
    return "-".join([prefix, *map(str, nums)]) + suffix


def cmd_build(args) -> dict:
    L = _vector(args)
    T = core.build_complex(L, permissive=args.permissive)
    out = Path(args.out or _default_name("tonnetz", [L.n, L.k, *L.lengths], ".txt"))
    out.write_text(core.dumps_tonnetz(T))
    return {
        "facets": len(T.facets),
        "generic": L.generic,
        "reduced": L.reduced,
        "path": str(out),
    }


def cmd_analyze(args) -> dict:
    L = _vector(args)
    T = core.build_complex(L, permissive=args.permissive)
    f = T.f_vector()
    result: dict = {
        "generic": L.generic,
        "reduced": L.reduced,
        "f_vector": f,
        "euler_characteristic": T.euler_characteristic(),
        "components": len(topology.connected_components(T)),
        "manifold": topology.verify_manifold(T).as_dict(),
    }
    if L.generic:
        result["stirling_f_vector"] = core.stirling_f_vector(L.n, L.k)
    if not args.no_oracle:
        h = topology.simplicial_homology(T)
        result["betti"] = list(h.betti)
        result["torsion"] = [list(t) for t in h.torsion]
        result["snf_backend"] = BACKEND
    if not (L.generic and L.reduced):
        return result
    M, det = chains.pairing_matrix(L.n, L.k, T)
    sub = lattice.lambda_L(L)
    sys_ = lattice.shortest_vector(sub)
    result.update({
        "pairing_matrix": M,
        "pairing_determinant": det,
        "lambda_L": {"hnf": [list(r) for r in sub.basis], "index": sub.index, "record": sub.dumps()},
        "systole2": _exact(sys_.normalized),
        "systole_hint": f"{float(sys_.normalized) ** 0.5:.6f}",
        "systole_vector": list(sys_.vector),
        "main_theorem": lattice.verify_main_theorem(L).holds,
    })
    return result


def cmd_render(args) -> dict:
    L = _vector(args)
    out = Path(args.out or _default_name("tonnetz", [L.n, L.k, *L.lengths], ".svg"))
    out.write_text(render.render_svg(L, args.rows, args.cols, origin=args.origin))
    return {"path": str(out), "rows": args.rows, "cols": args.cols, "points": (args.rows + 1) * (args.cols + 1)}


def cmd_classify(args) -> dict:
    return analysis.classify(args.n, args.k, oracle=not args.no_oracle).as_dict()


def cmd_irrational(args) -> dict:
    P = lattice.irrational_patch(args.k, args.radius)
    out = Path(args.out or _default_name("irrational", [args.k, args.radius], ".txt"))
    out.write_text(core.dumps_complex(P.facets, f"irrational {args.k} {args.radius}"))
    C, _ = P.complex()
    return {
        "vertices": len(P.vertices),
        "facets": len(P.facets),
        "cells": len(P.cells),
        "f_vector": C.f_vector(),
        "path": str(out),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tonnetz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def lengths(p):
        p.add_argument("n", type=int)
        p.add_argument("k", type=int)
        p.add_argument("lengths", type=int, nargs="+")

    p = sub.add_parser("build", help="write the facet list of Tonn^{n,k}(L)")
    lengths(p)
    p.add_argument("-o", "--out")
    p.add_argument("--permissive", action="store_true", help="allow non-generic vectors")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="invariants, homology, lattice and main theorem check")
    lengths(p)
    p.add_argument("--permissive", action="store_true")
    p.add_argument("--no-oracle", action="store_true", help="skip Smith normal form homology")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("render", help="SVG of an unfolded k=3 Tonnetz")
    lengths(p)
    p.add_argument("-o", "--out")
    p.add_argument("--rows", type=int, default=4)
    p.add_argument("--cols", type=int, default=6)
    p.add_argument("--origin", type=int, default=0, help="label of the top-left point")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("classify", help="isomorphism classes of generic vectors")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--no-oracle", action="store_true", help="skip the exhaustive cross-check")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("irrational", help="finite patch of the irrational Tonnetz")
    p.add_argument("k", type=int)
    p.add_argument("radius", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_irrational)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "command")}
    report: dict = {"command": args.command, "input": echo}
    start = time.perf_counter()
    status = 0
    try:
        report["result"] = args.func(args)
    except TonnetzError as exc:
        report["error"] = {"reason": exc.reason, "message": str(exc)}
        status = 2
    report["timing_ms"] = int((time.perf_counter() - start) * 1000)
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
