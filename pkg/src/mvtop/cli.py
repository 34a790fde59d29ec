"""Command-line front end.

Exit codes: 0 when every check passes (or the predicate holds), 1 when a
check fails or the predicate is false, 2 on input or resource errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Any

from . import __version__
from .adjunction import check_triangles, is_sober, is_spatial, omega_of_space, rebase_space
from .errors import DEFAULT_LIMIT, CheckReport, InputError, MVTopError
from .frames import DFrame, check_d_frame, enumerate_points, spectrum
from .fuzzy import Carrier, parse_fuzzy
from .io import (dump, frame_from_dict, load_json, parse_D, resolve, space_from_dict,
                 space_to_dict, table_from_dict, table_kind, table_to_dict)
from .mvcore import Chain
from .operators import InteriorOperator, check_interior_operator, check_nbhd_function
from .spaces import (CrispMap, MVSpace, check_axioms, generate_topology, interior,
                     is_continuous, is_hausdorff, is_neighbourhood, is_T0, nbhd_system)


class Run:
    """Collects what a command produced; rendered as text or JSON at the end."""

    def __init__(self, command: str):
        self.command = command
        self.reports: list[CheckReport] = []
        self.result: dict[str, Any] = {}
        self.inputs: dict[str, str] = {}
        self.lines: list[str] = []

    def add(self, rep: CheckReport) -> CheckReport:
        self.reports.append(rep)
        return rep

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def qualifier(self) -> str | None:
        qs = sorted({r.qualifier for r in self.reports if r.qualifier})
        return ",".join(qs) or None

    def to_dict(self, elapsed_ms: int) -> dict[str, Any]:
        return {
            "command": self.command,
            "passed": self.passed,
            "qualifier": self.qualifier,
            "witnesses": [dict(cx, check=r.name) for r in self.reports for cx in r.counterexamples],
            "elapsed_ms": elapsed_ms,
            "inputs": self.inputs,
            "reports": [r.to_dict() for r in self.reports],
            "result": self.result,
        }

    def to_text(self) -> str:
        out = [str(r) for r in self.reports]
        out.extend(self.lines)
        return "\n".join(out)


def _hash_input(run: Run, arg: str) -> dict[str, Any]:
    p = resolve(arg)
    run.inputs[arg] = hashlib.sha256(p.read_bytes()).hexdigest()
    return load_json(p)


def _load_model(run: Run, arg: str, limit: int, validate: bool = True) -> MVSpace | DFrame:
    data = _hash_input(run, arg)
    stem = resolve(arg).stem
    if "elements" in data:
        return frame_from_dict(data, name=stem, validate=validate)
    return space_from_dict(data, limit, name=stem, validate=validate)


def _load_space(run: Run, arg: str, limit: int, validate: bool = True) -> MVSpace:
    m = _load_model(run, arg, limit, validate)
    if not isinstance(m, MVSpace):
        raise InputError(f"{arg} is a frame file; this command needs a space")
    return m


def _codomain(args, default: Chain | None) -> Chain:
    if args.codomain is not None:
        return Chain(args.codomain)
    if default is None:
        raise InputError("no codomain: pass --codomain or give the frame a chain_denominator")
    return default


def _as_frame(m: MVSpace | DFrame, V: Chain | None = None) -> DFrame:
    if isinstance(m, DFrame):
        return m
    return omega_of_space(rebase_space(m, V) if V else m)


# ---- commands -------------------------------------------------------------

def cmd_check(run: Run, args) -> None:
    S = _load_space(run, args.model, args.limit, validate=False)
    run.add(check_axioms(S, args.limit))
    run.result = {"opens": len(S.opens), "T0": is_T0(S), "hausdorff": is_hausdorff(S)}
    run.lines.append(f"|τ| = {len(S.opens)}, T0 = {is_T0(S)}, Hausdorff = {is_hausdorff(S)}")


def cmd_generate(run: Run, args) -> None:
    if args.model:
        S = _load_space(run, args.model, args.limit)
    else:
        if not args.carrier or args.chain is None:
            raise InputError("generate needs a space file or --carrier and --chain")
        carrier = Carrier([c.strip() for c in args.carrier.split(",")])
        chain = Chain(args.chain)
        D = parse_D(args.D if args.D in ("boolean", "chain") else args.D.split(","), chain)
        gens = [parse_fuzzy(carrier, chain, g) for g in args.gen]
        S = generate_topology(carrier, chain, D, gens, limit=args.limit, name="generated")
    rep = run.add(check_axioms(S, args.limit))
    rep.name = "generate"
    run.result = space_to_dict(S)
    run.lines.append(f"{len(S.opens)} opens:")
    run.lines.extend("  " + o.compact() for o in S.opens)
    if args.out:
        dump(space_to_dict(S), args.out)


def cmd_interior(run: Run, args) -> None:
    S = _load_space(run, args.model, args.limit)
    a = parse_fuzzy(S.carrier, S.chain, args.alpha)
    res = interior(S, a)
    run.add(CheckReport("interior"))
    run.result = {"alpha": a.to_json(), "interior": res.to_json()}
    run.lines.append(f"interior({a.compact()}) = {res.compact()}")


def cmd_nbhd(run: Run, args) -> None:
    S = _load_space(run, args.model, args.limit)
    mu = nbhd_system(S, args.point)
    if args.table:
        tab = mu.table(args.limit)
        rows = [{"in": u.to_json(), "mu": str(v)} for u, v in tab.items()]
        run.add(CheckReport("nbhd"))
        run.result = {"point": args.point, "table": rows}
        run.lines.append(f"mu_{args.point}: {len(rows)} entries")
        if args.out:
            dump({"point": args.point, "table": rows}, args.out)
        return
    if not args.alpha:
        raise InputError("nbhd needs a fuzzy set or --table")
    u = parse_fuzzy(S.carrier, S.chain, args.alpha)
    v = mu(u)
    nb = is_neighbourhood(S, u, args.point)
    rep = run.add(CheckReport("is-neighbourhood"))
    if not nb:
        rep.fail("not-a-neighbourhood", point=args.point, u=u.compact(), mu=str(v))
    run.result = {"point": args.point, "u": u.to_json(), "mu": str(v), "neighbourhood": nb}
    run.lines.append(f"mu_{args.point}({u.compact()}) = {v}")


def cmd_points(run: Run, args) -> None:
    m = _load_model(run, args.model, args.limit)
    V = _codomain(args, m.chain)
    M = _as_frame(m, V)
    pts = enumerate_points(M, V)
    run.add(CheckReport("points", qualifier=f"over-{V}"))
    run.result = {"count": len(pts), "points": [p.to_json() for p in pts]}
    run.lines.append(f"{len(pts)} point(s) over {V}:")
    for i, p in enumerate(pts):
        run.lines.append(f"  p{i}: " + ", ".join(f"{k}->{v}" for k, v in p.to_json().items()))


def cmd_sober(run: Run, args) -> None:
    m = _load_model(run, args.model, args.limit)
    V = _codomain(args, m.chain)
    S = spectrum(m, V) if isinstance(m, DFrame) else m
    rep = run.add(is_sober(S, V))
    run.result = rep.details


def cmd_spatial(run: Run, args) -> None:
    m = _load_model(run, args.model, args.limit)
    V = _codomain(args, m.chain)
    rep = run.add(is_spatial(_as_frame(m, V), V))
    run.result = rep.details


def cmd_triangles(run: Run, args) -> None:
    m = _load_model(run, args.model, args.limit)
    V = _codomain(args, m.chain)
    run.add(check_triangles(m, V))
    if isinstance(m, MVSpace):
        run.add(check_triangles(omega_of_space(rebase_space(m, V)), V))


def cmd_continuous(run: Run, args) -> None:
    S = _load_space(run, args.source, args.limit)
    T = _load_space(run, args.target, args.limit)
    f = CrispMap.parse(S.carrier, T.carrier, args.map or "")
    run.add(is_continuous(f, S, T))
    run.result = {"map": {x: f(x) for x in S.carrier.names}}


def cmd_frame_check(run: Run, args) -> None:
    M = _load_model(run, args.model, args.limit, validate=False)
    if isinstance(M, MVSpace):
        M = omega_of_space(M)
    run.add(check_d_frame(M))
    run.result = {"elements": len(M)}


def cmd_op_check(run: Run, args) -> None:
    data = _hash_input(run, args.model)
    kind = table_kind(data)
    T = table_from_dict(data, kind, args.limit)
    if isinstance(T, InteriorOperator):
        run.add(check_interior_operator(T))
    else:
        run.add(check_nbhd_function(T))
    run.result = {"kind": kind, "entries": len(T.table)}
    if args.out:
        dump(table_to_dict(T), args.out)


COMMANDS = {
    "check": (cmd_check, "check the MV-space axioms of a space file"),
    "generate": (cmd_generate, "generate the topology of a carrier, chain, D and generators"),
    "interior": (cmd_interior, "interior of a fuzzy set"),
    "nbhd": (cmd_nbhd, "neighbourhood system value (or full table) at a point"),
    "points": (cmd_points, "enumerate the points of a frame (or of the opens of a space)"),
    "sober": (cmd_sober, "decide sobriety of a space (or of the spectrum of a frame)"),
    "spatial": (cmd_spatial, "decide spatiality of a frame (or of the opens of a space)"),
    "triangles": (cmd_triangles, "verify both triangle identities"),
    "continuous": (cmd_continuous, "check continuity of a map between two spaces"),
    "frame-check": (cmd_frame_check, "check the D-frame laws of a frame file"),
    "op-check": (cmd_op_check, "check an interior-operator or neighbourhood-function table"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--codomain", type=int, metavar="Q",
                        help="denominator of the codomain chain for point enumeration")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                        help="refuse exhaustive work over more than this many fuzzy sets")
    common.add_argument("--out", metavar="PATH", help="write the produced model/table here")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 so reports are byte-identical")

    p = argparse.ArgumentParser(prog="mvtop", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("--version", action="version", version=f"mvtop {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        if name == "generate":
            sp.add_argument("model", nargs="?", help="space file with generators")
            sp.add_argument("--carrier", help="comma-separated point names")
            sp.add_argument("--chain", type=int, metavar="Q", help="chain denominator")
            sp.add_argument("--D", default="boolean", help='"boolean", "chain" or a comma list')
            sp.add_argument("--gen", action="append", default=[], metavar="FUZZY",
                            help="generator in compact form, e.g. x=1/2,y=3/5 (repeatable)")
        elif name == "continuous":
            sp.add_argument("source")
            sp.add_argument("target")
            sp.add_argument("--map", help="map literal such as y=z,z=y (unlisted shared names fixed)")
        else:
            sp.add_argument("model", help="model file or bundled fixture name")
        if name == "interior":
            sp.add_argument("alpha", help="fuzzy set, e.g. x=1/2,y=7/10,z=7/10")
        if name == "nbhd":
            sp.add_argument("point")
            sp.add_argument("alpha", nargs="?")
            sp.add_argument("--table", action="store_true", help="materialize μ over all of V^X")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run = Run(args.command)
    t0 = time.perf_counter()
    try:
        COMMANDS[args.command][0](run, args)
    except MVTopError as e:
        msg = f"error: {e}"
        if args.json:
            print(json.dumps({"command": args.command, "passed": False, "error": str(e),
                              "kind": type(e).__name__}, ensure_ascii=False))
        else:
            print(msg, file=sys.stderr)
        return 2
    elapsed = 0 if args.no_timing else int(round((time.perf_counter() - t0) * 1000))
    if args.json:
        print(json.dumps(run.to_dict(elapsed), ensure_ascii=False, sort_keys=False))
    else:
        print(run.to_text())
    return 0 if run.passed else 1


if __name__ == "__main__":
    sys.exit(main())
