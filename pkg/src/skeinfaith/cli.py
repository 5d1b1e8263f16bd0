"""Command-line front end.

Every subcommand prints a human-readable rendering and/or a single-line
machine record (``key=value`` pairs, see ``formats.format_record``).

Exit codes: 0 property verified / command succeeded, 1 property refuted,
2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import faithful, graded, surface, tldiag
from .formats import (
    format_record,
    load_element,
    load_triangulation,
    parse_dt,
    parse_vector,
)
from .graded import GradedHandlebodyElem, GradedSurfaceElem
from .qring import RingCtx

EXIT_OK, EXIT_REFUTED, EXIT_INPUT = 0, 1, 2


class Outcome:
    def __init__(self, code: int, pretty: Sequence[str], record: dict):
        self.code = code
        self.pretty = list(pretty)
        self.record = record


def _ring(args) -> RingCtx | None:
    return RingCtx.parse(args.ring) if args.ring else None


def _surface_elem(path, tri, ctx) -> GradedSurfaceElem:
    x = load_element(path, tri, ctx)
    if not isinstance(x, GradedSurfaceElem):
        raise ValueError(f"{path}: expected a surface element (terms with 't')")
    return x


def cmd_product(args) -> Outcome:
    tri = load_triangulation(args.surface)
    ctx = _ring(args)
    x = _surface_elem(args.lhs, tri, ctx)
    y = _surface_elem(args.rhs, tri, ctx or x.ctx)
    z = graded.product(x, y)
    return Outcome(EXIT_OK, [str(z)], {"result": str(z), "ring": str(z.ctx)})


def cmd_act(args) -> Outcome:
    tri = load_triangulation(args.surface)
    ctx = _ring(args)
    x = _surface_elem(args.lhs, tri, ctx)
    v = load_element(args.rhs, tri, ctx or x.ctx)
    if not isinstance(v, GradedHandlebodyElem):
        raise ValueError(f"{args.rhs}: expected a handlebody element (terms without 't')")
    w = graded.act(x, v)
    return Outcome(EXIT_OK, [str(w)], {"result": str(w), "ring": str(w.ctx)})


def cmd_check(args) -> Outcome:
    tri = load_triangulation(args.surface)
    if args.kind == "lambda":
        reason = surface.lambda_violation(tri, parse_vector(args.coord))
    else:
        c = parse_dt(args.coord)
        if len(c.n) != tri.edges:
            raise ValueError(f"coordinate has {len(c.n)} edge entries, triangulation has {tri.edges}")
        if args.kind == "gamma":
            reason = surface.gamma_violation(tri, c)
        else:
            reason = surface.gamma_violation(tri, c)
            if reason is None:
                reason = surface.triangular_violation(tri, c)
            else:
                reason = f"not in Gamma: {reason}"
    member = reason is None
    pretty = [f"{args.kind}: {'member' if member else 'not a member'}" + ("" if member else f" ({reason})")]
    rec = {"check": args.kind, "coord": args.coord, "member": member}
    if not member:
        rec["reason"] = reason
    return Outcome(EXIT_OK if member else EXIT_REFUTED, pretty, rec)


def cmd_twist_reduce(args) -> Outcome:
    tri = load_triangulation(args.surface)
    ctx = _ring(args) or RingCtx.generic()
    c = parse_dt(args.coord)
    if args.edge is not None:
        coeff, rest = graded.single_twist_reduce(tri, c, args.edge, ctx)
        text = f"({coeff}) * {rest} * 1"
    else:
        coeff, n = graded.twist_reduce(tri, c, ctx)
        text = f"({coeff}) * S({list(n)})".replace(" ", "").replace(")*S", ") * S")
    return Outcome(EXIT_OK, [text], {"coeff": str(coeff), "result": text})


def cmd_tl_resolve(args) -> Outcome:
    word = tldiag.DiagramWord.parse(args.word, args.strands)
    value = tldiag.resolve(word)
    return Outcome(EXIT_OK, [repr(value)], {"strands": args.strands, "states": 2 ** len(word.crossings),
                                            "result": repr(value)})


def cmd_tl_twist_coeff(args) -> Outcome:
    coeff = tldiag.twist_lemma_coefficient(args.n)
    return Outcome(EXIT_OK, [str(coeff)], {"n": args.n, "coeff": str(coeff)})


def cmd_certify(args) -> Outcome:
    tri = load_triangulation(args.surface)
    ctx = _ring(args)
    y = _surface_elem(args.element, tri, ctx)
    cert = faithful.injectivity_certificate(y)
    if cert is None:
        return Outcome(EXIT_REFUTED, ["element is zero: nothing to certify"], {"zero": True})
    pretty = [
        f"probe m = {list(cert.probe)}, twist exponents s = {list(cert.exponents)}",
        f"Vandermonde determinant = {cert.determinant}",
        f"y * S({[cert.witness_multiple * x for x in cert.probe]}) = {cert.action_value}",
    ]
    rec = {"zero": False, "probe": list(cert.probe), "exponents": list(cert.exponents),
           "determinant": cert.determinant, "witness_multiple": cert.witness_multiple,
           "action_value": str(cert.action_value), "verified": cert.verified}
    return Outcome(EXIT_OK if cert.verified else EXIT_REFUTED, pretty, rec)


def cmd_witness(args) -> Outcome:
    tri = load_triangulation(args.surface)
    base = parse_dt(args.base) if args.base else None
    w = faithful.kernel_witness(args.root, tri, base=base, edge=args.edge, probe_bound=args.probe_bound)
    pretty = [
        f"y = {w.element}",
        f"symbolic: {w.residue_identity} -> {'ok' if w.symbolic_ok else 'FAILED'}",
        f"sampled: {len(w.probes)} probes, {len(w.failures)} nonzero",
    ]
    rec = {"root": args.root, "element": str(w.element), "symbolic": w.symbolic_ok,
           "probes": len(w.probes), "failures": len(w.failures), "verified": w.verified}
    return Outcome(EXIT_OK if w.verified else EXIT_REFUTED, pretty, rec)


def cmd_chebyshev_witness(args) -> Outcome:
    tri = load_triangulation(args.surface)
    alpha = parse_dt(args.alpha)
    if len(alpha.n) != tri.edges:
        raise ValueError(f"alpha has {len(alpha.n)} edge entries, triangulation has {tri.edges}")
    w = faithful.chebyshev_witness(args.root, tri, alpha, _ring(args))
    return Outcome(EXIT_OK if w.nonzero else EXIT_REFUTED, [f"a = {w.element}"],
                   {"root": args.root, "element": str(w.element), "nonzero": w.nonzero})


def cmd_tn_loop(args) -> Outcome:
    ctx = _ring(args) or RingCtx.root(args.root)
    ok = faithful.verify_tn_loop_identity(args.root, ctx)
    return Outcome(EXIT_OK if ok else EXIT_REFUTED,
                   [f"T_{args.root}(-q^2 - q^-2) {'==' if ok else '!='} {2 * (-1) ** args.root} in {ctx}"],
                   {"root": args.root, "ring": str(ctx), "holds": ok})


def cmd_components(args) -> Outcome:
    tri = load_triangulation(args.surface)
    m = parse_vector(args.coord)
    k = surface.count_components(tri, m)
    return Outcome(EXIT_OK, [f"S({list(m)}) has {k} components"], {"coord": args.coord, "components": k})


def cmd_thurston_form(args) -> Outcome:
    tri = load_triangulation(args.surface)
    q = surface.compute_thurston_form(tri).tolist()
    return Outcome(EXIT_OK, [str(row) for row in q], {"edges": tri.edges, "form": q})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="generic | root:N (overrides rings recorded in element files)")
    common.add_argument("--output", choices=("pretty", "record", "both"), default="both")

    p = argparse.ArgumentParser(prog="skeinfaith", parents=[common],
                                description="Graded skein algebra computations and faithfulness checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, surface_arg: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.set_defaults(func=fn)
        if surface_arg:
            sp.add_argument("--surface", default="torus", help="preset name or triangulation JSON file")
        return sp

    sp = add("product", cmd_product, "graded product of two surface elements")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)

    sp = add("act", cmd_act, "action of a surface element on a handlebody element")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)

    sp = add("check", cmd_check, "membership in Lambda / Gamma / triangular")
    kind = sp.add_mutually_exclusive_group(required=True)
    kind.add_argument("--lambda", dest="kind", action="store_const", const="lambda")
    kind.add_argument("--gamma", dest="kind", action="store_const", const="gamma")
    kind.add_argument("--triangular", dest="kind", action="store_const", const="triangular")
    sp.add_argument("--coord", required=True, help="m1,m2,... or n1,..;t1,..")

    sp = add("twist-reduce", cmd_twist_reduce, "C(n,t) * 1 as a multiple of S(n)")
    sp.add_argument("--coord", required=True)
    sp.add_argument("--edge", type=int, help="clear only this edge's twist")

    sp = add("tl-resolve", cmd_tl_resolve, "state sum of a diagram word", surface_arg=False)
    sp.add_argument("--strands", "-n", type=int, required=True)
    sp.add_argument("--word", required=True, help="tokens: si, si', ei, k+, k-, kj+")

    sp = add("tl-twist-coeff", cmd_tl_twist_coeff, "twist-lemma coefficient from the state sum", surface_arg=False)
    sp.add_argument("-n", type=int, required=True)

    sp = add("certify", cmd_certify, "generic-q injectivity certificate")
    sp.add_argument("--element", required=True)

    sp = add("witness", cmd_witness, "root-of-unity kernel witness")
    sp.add_argument("--root", type=int, required=True)
    sp.add_argument("--probe-bound", type=int, default=10)
    sp.add_argument("--edge", type=int, default=0)
    sp.add_argument("--base", help="triangular base coordinate n;t (default: boundary curve)")

    sp = add("chebyshev-witness", cmd_chebyshev_witness, "T_N threaded along alpha minus 2(-1)^N")
    sp.add_argument("--root", type=int, required=True)
    sp.add_argument("--alpha", required=True)

    sp = add("tn-loop", cmd_tn_loop, "check T_N(-q^2-q^-2) = 2(-1)^N", surface_arg=False)
    sp.add_argument("--root", type=int, required=True)

    sp = add("components", cmd_components, "components of the normal multicurve S(m)")
    sp.add_argument("--coord", required=True)

    add("thurston-form", cmd_thurston_form, "the antisymmetric form Q")
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        outcome = args.func(args)
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        if args.output != "pretty":
            print(format_record({"cmd": args.command, "status": "error", "exit": EXIT_INPUT, "message": msg}), file=out)
        return EXIT_INPUT
    status = {EXIT_OK: "ok", EXIT_REFUTED: "refuted"}[outcome.code]
    if args.output in ("pretty", "both"):
        for line in outcome.pretty:
            print(line, file=out)
    if args.output in ("record", "both"):
        print(format_record({"cmd": args.command, "status": status, "exit": outcome.code, **outcome.record}), file=out)
    return outcome.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
