"""Command line: ``pzero group|spectrum|curve|bounds|verify``.

Exit codes: 0 success, 1 a mathematical check failed (or some involution
does not fix exactly one point), 2 a budget or usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import __version__
from . import curves as C
from .battery import run_suite
from .chain import BudgetError
from .lingrp import (
    FamilyError,
    FamilyId,
    build_family,
    build_su3_matrix,
    expected_order,
    stabilizer_constants,
)
from .perm import SEED, ConditionViolation, PermError, PermGroup, Permutation, classify_theorem1
from .ramify import RamificationError
from .spectrum import SpectrumError, bound_checks, crosscheck_gqfpf, enumerate_spectrum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    max_degree: int = 300_000
    max_group_order: int = 10**6  # for groups analysed without a supplied Sylow 2-subgroup
    max_field_exp: int = 20


def _emit(obj, out_path: str | None = None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(rows: list[dict], columns: list[str], out_path: str | None = None) -> None:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


# -- group ------------------------------------------------------------------------------------


def _su3_as_permutations(n: int) -> tuple[PermGroup, dict]:
    m = build_su3_matrix(n)
    ops = m.ops
    degree = m.degree
    gens = [Permutation([ops.image(g, p) for p in range(degree)], check=False) for g in m.generators]
    meta = {"order": m.order(), "center_order": m.center_order(), "labels": "v0*q^2 + v1*q + v2 - 1"}
    return PermGroup(degree, gens), meta


def cmd_group_build(args, cfg: CommandConfig) -> int:
    name = args.family.upper()
    fam = FamilyId(name, args.n)
    if name == "SU3":
        if args.n ** 6 - 1 > cfg.max_degree:
            raise BudgetError(f"degree {args.n ** 6 - 1} exceeds --max-degree {cfg.max_degree}")
        group, extra = _su3_as_permutations(args.n)
        meta = {"family": name, "n": args.n, "expected_order": expected_order(fam), **extra}
    else:
        a = build_family(name, args.n)
        group = a.group
        meta = {
            "family": name,
            "n": args.n,
            "expected_order": expected_order(fam),
            "stabilizer_constants": list(stabilizer_constants(fam)),
            "labels": a.label_json(),
            "distinguished_point": a.distinguished_point,
            "generator_names": a.generator_names,
            "sylow2": [list(g.images) for g in a.sylow2.generators],
        }
    data = group.to_json()
    data["metadata"] = meta
    _emit(data, args.out)
    return EXIT_OK


def cmd_group_analyze(args, cfg: CommandConfig) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    g = PermGroup.from_json(data)
    if g.degree > cfg.max_degree:
        raise BudgetError(f"degree {g.degree} exceeds --max-degree {cfg.max_degree}")
    meta = data.get("metadata", {})
    s2 = None
    if meta.get("sylow2"):
        s2 = PermGroup(g.degree, [Permutation(x) for x in meta["sylow2"]])
    elif g.order() > cfg.max_group_order:
        raise BudgetError(
            f"group order {g.order()} exceeds {cfg.max_group_order}; supply a Sylow 2-subgroup in metadata.sylow2"
        )
    try:
        report = classify_theorem1(g, s2, samples=args.samples, seed=SEED)
    except ConditionViolation as exc:
        sys.stderr.write(f"condition violated: {exc}\n")
        _emit({"error": "condition_violation", "message": str(exc),
               "involution": list(exc.involution.images) if exc.involution else None})
        return EXIT_FAIL
    out = report.to_json()
    out["seed"] = SEED
    _emit(out, args.out)
    return EXIT_OK


# -- spectrum ----------------------------------------------------------------------------------

SPECTRUM_COLUMNS = ["family", "n", "case", "t", "genus", "s_order", "sq_order", "witness", "flags"]


def cmd_spectrum(args, cfg: CommandConfig) -> int:
    sp = enumerate_spectrum(FamilyId(args.family.upper(), args.n))
    ok = all(crosscheck_gqfpf(e) for e in sp.entries)
    if args.format == "csv":
        _emit_csv([e.to_row() for e in sp.entries], SPECTRUM_COLUMNS, args.out)
    else:
        _emit({
            "family": sp.family.name,
            "n": sp.family.n,
            "entries": [e.to_json() for e in sp.entries],
            "filtered": [e.to_json() for e in sp.filtered],
            "crosscheck": ok,
        }, args.out)
    return EXIT_OK if ok else EXIT_FAIL


# -- curve -------------------------------------------------------------------------------------


def _curve_from_args(args) -> C.CurveSpec:
    fam = args.family.upper()
    params = {}
    for key in ("n", "k", "m", "t"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = v
    if args.n_exp is not None:
        params["n_exp"] = args.n_exp
    if fam in ("SU3Q", "PSU3Q"):
        params["kind"] = args.kind or ("7.2" if fam == "SU3Q" else "7.2bis")
    return C.curve(fam, **params)


def cmd_curve(args, cfg: CommandConfig) -> int:
    c = _curve_from_args(args)
    if args.action == "info":
        out = c.to_json()
        out["genus"] = C.genus(c)
        out["automorphisms"] = C.expected_aut_order(c).to_json()
        try:
            out["two_rank"] = C.two_rank(c)
        except C.CurveError:
            out["two_rank"] = None
        _emit(out, args.out)
        return EXIT_OK
    if args.action == "points":
        e = args.field_exp if args.field_exp is not None else c.natural_field.r
        if e > cfg.max_field_exp:
            raise BudgetError(f"field exponent {e} exceeds --max-field-exp {cfg.max_field_exp}")
        pc = C.rational_points(c, e)
        if args.format == "csv":
            _emit_csv([pc.to_json()], list(pc.to_json()), args.out)
        else:
            _emit(pc.to_json(), args.out)
        return EXIT_OK
    report = C.verify_automorphisms(c)
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


# -- bounds ---------------------------------------------------------------------------------------


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "y"):
        return True
    if low in ("0", "false", "no", "n"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def cmd_bounds(args, cfg: CommandConfig) -> int:
    r = bound_checks(args.order, args.g, abelian=args.abelian, solvable=args.solvable,
                     fixes_point=args.fixes_point, h_order=args.h_order, s_order=args.s_order)
    _emit(r.to_json(), args.out)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------------------------


def cmd_verify(args, cfg: CommandConfig) -> int:
    results = run_suite(args.suite, quick=args.quick)
    for r in results:
        sys.stderr.write(r.line() + "\n")
    passed = all(r.passed for r in results)
    _emit({
        "suite": args.suite,
        "quick": args.quick,
        "seed": SEED,
        "passed": passed,
        "checks": [dict(r.to_json(), seconds=None) for r in results],
    }, args.out)
    return EXIT_OK if passed else EXIT_FAIL


# -- parser ----------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pzero", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"pzero {__version__}")
    p.add_argument("--max-degree", type=int, default=CommandConfig.max_degree)
    p.add_argument("--max-group-order", type=int, default=CommandConfig.max_group_order)
    p.add_argument("--max-field-exp", type=int, default=CommandConfig.max_field_exp)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="build or analyse permutation groups")
    gsub = g.add_subparsers(dest="action", required=True)
    gb = gsub.add_parser("build")
    gb.add_argument("--family", required=True, choices=["psl2", "sz", "pgu3", "psu3", "su3"],
                    type=str.lower)
    gb.add_argument("--n", type=int, required=True)
    gb.add_argument("--out")
    gb.set_defaults(func=cmd_group_build)
    ga = gsub.add_parser("analyze")
    ga.add_argument("file")
    ga.add_argument("--samples", type=int, default=1000)
    ga.add_argument("--out")
    ga.set_defaults(func=cmd_group_analyze)

    s = sub.add_parser("spectrum", help="genus spectrum of a family")
    s.add_argument("--family", required=True, choices=["psl2", "psu3", "su3", "sz"], type=str.lower)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("curve", help="curve families")
    c.add_argument("action", choices=["info", "points", "verify-aut"])
    c.add_argument("--family", required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--n-exp", type=int, dest="n_exp")
    c.add_argument("--kind", choices=["7.2", "7.2bis", "7.3"])
    c.add_argument("--field-exp", type=int, dest="field_exp")
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_curve)

    b = sub.add_parser("bounds", help="evaluate the group-order bounds")
    b.add_argument("--g", type=int, required=True)
    b.add_argument("--order", type=int, required=True)
    b.add_argument("--solvable", type=_bool, default=False)
    b.add_argument("--abelian", type=_bool, default=False)
    b.add_argument("--fixes-point", type=_bool, default=False, dest="fixes_point")
    b.add_argument("--h-order", type=int, dest="h_order")
    b.add_argument("--s-order", type=int, dest="s_order")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run the verification battery")
    v.add_argument("--suite", choices=["all", "groups", "curves", "spectrum"], default="all")
    v.add_argument("--quick", action="store_true")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = CommandConfig(args.max_degree, args.max_group_order, args.max_field_exp)
    try:
        return args.func(args, cfg)
    except BudgetError as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_USAGE
    except (FamilyError, C.CurveError, SpectrumError, UsageError, OSError, PermError,
            json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except RamificationError as exc:
        sys.stderr.write(f"inconsistent data: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
