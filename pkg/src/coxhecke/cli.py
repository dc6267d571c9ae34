"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource or radius guard.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .coxeter import (
    DEFAULT_MEM_CAP,
    BallError,
    BallTooLarge,
    CoxeterMatrix,
    CoxeterParseError,
    RadiusError,
    build_ball,
    catalog,
    component_type,
    group_order,
    is_finite_type,
    parse_coxeter,
    poincare_exact,
    poincare_truncated,
    type_name,
)
from .deodhar import build_complex, homology, sign_map, verify_chain, verify_truncated_acyclicity
from .euler import PoleError, SpecializationError, specialize, verify_theorem_A
from .exactmath import NotExpandableError, rf_series
from .expr import ExprError, format_element, parse_element
from .hecke import LinearCharacter, canonical_trace, character, mul
from .serialize import fraction_str, poly_json, rf_json
from .verify import VerifyConfig, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input handling


def load_system(args) -> CoxeterMatrix:
    sources = [x for x in (args.system, args.input, args.type) if x]
    if not sources:
        raise UsageError("no Coxeter system given (positional name, --input or --type)")
    if len(sources) > 1:
        raise UsageError("give exactly one of: positional system, --input, --type")
    if args.type:
        return catalog(args.type)
    src = args.system or args.input
    if src.lstrip().startswith("{"):
        return parse_coxeter(src)
    if os.path.isfile(src):
        with open(src) as fh:
            return parse_coxeter(fh.read())
    if args.input:
        raise UsageError(f"input file {src!r} not found")
    return parse_coxeter(src)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}; expected a/b") from None


def sign_order(m: CoxeterMatrix, text: Optional[str]) -> list[int]:
    if not text:
        return list(range(m.rank))
    names = [x.strip() for x in text.split(",") if x.strip()]
    try:
        order = [m.index(x) for x in names]
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if sorted(order) != list(range(m.rank)):
        raise UsageError("--order must list every generator exactly once")
    return order


# ---------------------------------------------------------------------------
# commands; each returns (payload, text lines, exit code)


def cmd_info(args, m: CoxeterMatrix):
    finite = is_finite_type(m)
    comps = []
    for c in m.components():
        kind = component_type(m, c)
        comps.append({"generators": [m.names[i] for i in sorted(c)], "type": kind or "infinite", "finite": kind is not None})
    lattice = []
    for k in range(m.rank + 1):
        for sub in combinations(range(m.rank), k):
            lattice.append({
                "subset": m.subset_name(sub),
                "finite": is_finite_type(m, sub),
                "type": type_name(m, sub),
            })
    payload = {
        "rank": m.rank,
        "names": list(m.names),
        "labels": [list(r) for r in m.labels],
        "type": type_name(m),
        "finite": finite,
        "order": group_order(m),
        "components": comps,
        "parabolics": lattice,
    }
    lines = [
        f"rank: {m.rank}",
        f"generators: {' '.join(m.names)}",
        "labels:",
        *["  " + " ".join(m.label_str(i, j).rjust(3) for j in range(m.rank)) for i in range(m.rank)],
        f"type: {type_name(m)}",
        f"finite: {'yes' if finite else 'no'}",
    ]
    if finite:
        lines.append(f"|W| = {group_order(m)}")
    lines.append("components:")
    lines += [f"  {c['generators']}: {c['type']}" for c in comps]
    lines.append("parabolic subsets:")
    lines += [f"  {p['subset']}: {'finite' if p['finite'] else 'infinite'} ({p['type']})" for p in lattice]
    return payload, lines, EXIT_OK


def cmd_poincare(args, m: CoxeterMatrix):
    p = poincare_exact(m, mem_cap=args.mem_cap)
    payload = {"poincare": rf_json(p)}
    lines = [f"p(q) = {p}"]
    code = EXIT_OK
    if args.max_length is not None:
        L = args.max_length
        ball = build_ball(m, L, args.mem_cap)
        counts = poincare_truncated(ball, L)
        series = rf_series(p, L)
        match = series == [counts[k] for k in range(L + 1)]
        payload.update({
            "order": L,
            "series": [fraction_str(x) for x in series],
            "counts": [str(counts[k]) for k in range(L + 1)],
            "match": match,
        })
        lines += [
            f"series to order {L}: {' '.join(fraction_str(x) for x in series)}",
            f"length counts:      {' '.join(str(counts[k]) for k in range(L + 1))}",
            f"match: {match}",
        ]
        if not match:
            code = EXIT_FAIL
    return payload, lines, code


def cmd_hecke(args, m: CoxeterMatrix):
    if len(args.exprs) != 2:
        raise UsageError("hecke needs [SYSTEM] EXPR_A EXPR_B")
    if is_finite_type(m) and args.max_length is None:
        ball = build_ball(m, mem_cap=args.mem_cap)
    else:
        ball = build_ball(m, args.max_length if args.max_length is not None else 8, args.mem_cap)
    a = parse_element(ball, args.exprs[0])
    b = parse_element(ball, args.exprs[1])
    prod = mul(a, b)
    payload = {
        "a": format_element(a),
        "b": format_element(b),
        "product": format_element(prod),
        "eps_q": poly_json(character(LinearCharacter.AUGMENTATION_Q, prod)),
        "eps_sign": poly_json(character(LinearCharacter.SIGN, prod)),
        "trace": poly_json(canonical_trace(prod)),
    }
    lines = [
        f"{payload['a']}  *  {payload['b']}",
        f"= {payload['product']}",
        f"eps_q    = {character(LinearCharacter.AUGMENTATION_Q, prod)}",
        f"eps_-1   = {character(LinearCharacter.SIGN, prod)}",
        f"trace    = {canonical_trace(prod)}",
    ]
    return payload, lines, EXIT_OK


def cmd_deodhar(args, m: CoxeterMatrix):
    sgn = sign_map(sign_order(m, args.order))
    if is_finite_type(m):
        if args.max_length is not None or args.coradius is not None:
            raise UsageError(f"{type_name(m)} is finite: use complete mode (no --radius/--coradius)")
        ball = build_ball(m, mem_cap=args.mem_cap)
        c = build_complex(ball, sgn)
        chain_ok = verify_chain(c)
        rep = homology(c)
        payload = rep.to_json()
        payload["chain"] = chain_ok
        lines = [
            f"chain complex: {chain_ok}",
            f"dim C_k: {rep.degrees}",
            f"dim H_k: {rep.homology}",
            f"actions: H_0 -> {rep.actions.get('0')}, top -> {rep.actions.get('top', rep.actions.get('0'))}",
            f"actions verified: {rep.actions_verified}",
        ]
        return payload, lines, EXIT_OK if chain_ok else EXIT_FAIL
    L = args.max_length if args.max_length is not None else 3
    Lp = args.coradius if args.coradius is not None else L + 2
    if Lp < L:
        raise UsageError("--coradius must be >= --radius")
    ball = build_ball(m, Lp, args.mem_cap)
    chain_ok = verify_chain(build_complex(ball, sgn, Lp))
    rep = verify_truncated_acyclicity(ball, sgn, L, Lp)
    payload = rep.to_json()
    payload["chain"] = chain_ok
    lines = [f"chain complex (radius {Lp}): {chain_ok}", f"dim C_k at radius {L}: {rep.degrees}"]
    for d in rep.per_degree:
        lines.append(
            f"degree {d.degree}: {d.certified}/{d.cycles} cycles bound within radius {Lp}"
            f" (max witness length {d.max_witness_length})"
        )
    lines.append(f"certified: {rep.certified}")
    return payload, lines, EXIT_OK if chain_ok else EXIT_FAIL


def cmd_euler(args, m: CoxeterMatrix):
    r = verify_theorem_A(m, args.mem_cap)
    per = {
        m.subset_name(sub): {"sign": sign, "inv_p": rf_json(val)}
        for sub, (sign, val) in sorted(r.per_parabolic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    }
    specs: dict[str, str] = {}
    pspecs: dict[str, str] = {}
    for q0 in args.at or []:
        key = fraction_str(q0)
        try:
            specs[key] = fraction_str(specialize(r.chi, q0, m))
        except SpecializationError as exc:
            specs[key] = f"skipped: {exc}"
            pspecs[key] = "skipped"
            continue
        except PoleError:
            specs[key] = f"pole at {key}"
        try:
            pspecs[key] = fraction_str(specialize(r.poincare, q0, m))
        except PoleError:
            pspecs[key] = f"pole at {key}"
    payload = {
        "chi": rf_json(r.chi),
        "poincare": rf_json(r.poincare),
        "product_ok": r.product_ok,
        "per_parabolic": per,
        "specializations": specs,
        "poincare_specializations": pspecs,
    }
    if r.trace_route_ok is not None:
        payload["trace_route_ok"] = r.trace_route_ok
    lines = [f"chi(q) = {r.chi}", f"p(q)   = {r.poincare}", f"chi * p = 1: {r.product_ok}"]
    if r.trace_route_ok is not None:
        lines.append(f"canonical trace of e_S agrees: {r.trace_route_ok}")
    for key in specs:
        lines.append(f"at q = {key}: chi = {specs[key]}, p = {pspecs.get(key)}")
    ok = r.product_ok and r.trace_route_ok is not False
    return payload, lines, EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, m: CoxeterMatrix):
    cfg = VerifyConfig(
        max_length=args.max_length if args.max_length is not None else 6,
        samples=args.samples,
        seed=args.seed,
    )
    results = run_verify(m, cfg)
    payload = {
        "suites": [{"name": r.name, "passed": r.passed, "failed": r.failed, "notes": r.notes} for r in results],
        "ok": all(r.ok for r in results),
    }
    width = max(len(r.name) for r in results)
    lines = [f"{'suite'.ljust(width)}  passed  failed"]
    for r in results:
        lines.append(f"{r.name.ljust(width)}  {r.passed:6d}  {r.failed:6d}")
        lines += [f"    ! {n}" for n in r.notes]
    lines.append("ALL PASS" if payload["ok"] else "FAILURES")
    return payload, lines, EXIT_OK if payload["ok"] else EXIT_FAIL


COMMANDS = {
    "info": cmd_info,
    "poincare": cmd_poincare,
    "hecke": cmd_hecke,
    "deodhar": cmd_deodhar,
    "euler": cmd_euler,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="Coxeter system as a JSON file path or inline JSON")
    common.add_argument("--type", help="catalog name, e.g. A3, I2(7), Atilde2, A1xA1")
    common.add_argument("--max-length", "--radius", dest="max_length", type=int, help="length bound L")
    common.add_argument("--coradius", type=int, help="coradius Lp for acyclicity certificates")
    common.add_argument("--at", action="append", type=parse_rational, help="specialization point a/b (repeatable)")
    common.add_argument("--order", help="comma-separated generator names fixing the sign map")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200)
    common.add_argument("--mem-cap", type=int, default=DEFAULT_MEM_CAP, help="maximum ball size")

    parser = argparse.ArgumentParser(prog="coxhecke", description="Coxeter groups, Hecke algebras and their Euler characteristic.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], prog=f"coxhecke {name}")
        p.set_defaults(command=name)
        if name == "hecke":
            p.add_argument("exprs", nargs="*", metavar="ARG", help="[SYSTEM] EXPR_A EXPR_B")
            p.set_defaults(system=None)
        else:
            p.add_argument("system", nargs="?", help="catalog name, inline JSON or JSON file")
    parser.subcommands = sub.choices
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] in COMMANDS:
        # subcommand parsers allow options between positionals
        args = parser.subcommands[argv[0]].parse_intermixed_args(argv[1:])
    else:
        args = parser.parse_args(argv)
    if args.command == "hecke" and len(args.exprs) == 3:
        args.system, args.exprs = args.exprs[0], args.exprs[1:]
    for v in (args.max_length, args.coradius):
        if v is not None and v < 0:
            return _fail(EXIT_USAGE, "lengths must be nonnegative")
    try:
        m = load_system(args)
        payload, lines, code = COMMANDS[args.command](args, m)
    except (UsageError, CoxeterParseError, ExprError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    except RadiusError as exc:
        msg = str(exc)
        if exc.required is not None and "required" not in msg:
            msg += f" (required radius {exc.required})"
        return _fail(EXIT_GUARD, msg)
    except (BallTooLarge, BallError) as exc:
        return _fail(EXIT_GUARD, str(exc))
    except NotExpandableError as exc:
        return _fail(EXIT_FAIL, str(exc))
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return code


def _fail(code: int, message: str) -> int:
    print(f"coxhecke: error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
