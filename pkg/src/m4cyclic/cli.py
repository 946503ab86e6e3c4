"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time

from . import genexpr
from .codebuild import ConstructionProfile, assemble_generators, cardinality_xi, gray_span
from .dualbuild import dual_report, image_dual
from .f16poly import factor_xn_minus_1
from .metrics import d_mds, min_distance_certified, mds_gap
from .reproduce import load_examples, run_example
from . import suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, report: dict, table: list[list], header: list[str]) -> None:
    if args.json:
        print(json.dumps(report, indent=2))
    elif getattr(args, "tsv", False):
        print("\t".join(header))
        for row in table:
            print("\t".join(str(x) for x in row))
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *table)] if table else []
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in table:
            print("  ".join(str(x).ljust(w) for x, w in zip(row, widths)))


def _code_inputs(args):
    """(n, k, generator RPolys, description) from --gen or --profile."""
    if args.profile:
        prof = ConstructionProfile.from_json(args.profile)
        gs = assemble_generators(prof)
        return prof.n, prof.k, gs.gens, {"profile": prof.to_json()}, prof
    if args.n is None or args.k is None or not args.gen:
        raise UsageError("give --profile, or --n, --k and at least one --gen")
    fs = factor_xn_minus_1(args.n)
    gens = [genexpr.parse(g, fs, args.k) for g in args.gen]
    return args.n, args.k, gens, {"n": args.n, "k": args.k, "generators": list(args.gen)}, None


# ---------------------------------------------------------------------------


def cmd_factor(args) -> int:
    fs = factor_xn_minus_1(args.n)
    rows = [[f"f{i + 1}", str(f), f.deg] for i, f in enumerate(fs.factors)]
    report = {"command": args.echo, "n": args.n, "ext_degree": fs.ext_degree,
              "factors": {f"f{i + 1}": str(f) for i, f in enumerate(fs.factors)}}
    _emit(args, report, rows, ["index", "factor", "degree"])
    return EXIT_OK


def cmd_build(args) -> int:
    t0 = time.perf_counter()
    n, k, gens, inputs, prof = _code_inputs(args)
    code = gray_span(gens, n, k)
    dist = min_distance_certified(code, args.hint, args.seed)
    report = {"command": args.echo, "inputs": inputs,
              "params": [code.length, code.dim, dist.d], "d_mds": d_mds(code.length, code.dim),
              "mds_gap": mds_gap(code.length, code.dim, dist.d) if dist.d else None,
              "distance": dist.to_json()}
    if prof is not None:
        report["xi"] = cardinality_xi(prof).xi
    report["seconds"] = round(time.perf_counter() - t0, 3)
    d = dist.d if dist.d is not None else ("open" if dist.certificate == "open" else "inf")
    _emit(args, report, [[f"[{code.length},{code.dim},{d}]", report["d_mds"], dist.certificate]],
          ["code", "d_MDS", "certificate"])
    return EXIT_OK


def cmd_mindist(args) -> int:
    n, k, gens, inputs, _ = _code_inputs(args)
    code = gray_span(gens, n, k)
    dist = min_distance_certified(code, args.hint, args.seed)
    report = {"command": args.echo, "inputs": inputs, "length": code.length, "dim": code.dim,
              "distance": dist.to_json()}
    wit = " ".join(report["distance"]["witness"] or [])
    _emit(args, report, [[dist.d if dist.d is not None else "inf", dist.certificate, wit]],
          ["d", "certificate", "witness"])
    return EXIT_OK if dist.exact else EXIT_FAIL


def cmd_dual(args) -> int:
    flavor = "hermitian" if args.hermitian else "euclidean"
    if args.profile:
        prof = ConstructionProfile.from_json(args.profile)
        rep = dual_report(prof, flavor, args.conj_mode)
        rep["command"] = args.echo
        ok = not rep["violations"] and rep["sum_ok"] and rep["eta_ok"]
        rep["ok"] = ok
        rows = [[i + 1, g] for i, g in enumerate(rep["dual_generators"])]
        if args.json:
            print(json.dumps(rep, indent=2))
        else:
            _emit(args, rep, rows, ["#", "dual generator"])
            print(f"dims: code {rep['dims']['code']}, dual {rep['dims']['dual']}, length {rep['dims']['length']}")
            print(f"xi {rep['xi']}  eta {rep['eta']}  xi+eta=4kn: {rep['xi'] + rep['eta'] == rep['dims']['length']}")
            print(f"orthogonal: {not rep['violations']}  ({len(rep['violations'])} violation records)")
            for v in rep["violations"][:3]:
                print(f"  {v}")
        return EXIT_OK if ok else EXIT_FAIL
    n, k, gens, inputs, _ = _code_inputs(args)
    code = gray_span(gens, n, k)
    dual = image_dual(code)
    rep = {"command": args.echo, "inputs": inputs, "caveat": "image-level GF(16) nullspace, not the ring dual",
           "image_level": True, "dims": {"code": code.dim, "dual": dual.dim, "length": code.length}}
    _emit(args, rep, [[code.length, code.dim, dual.dim, "image-level"]], ["length", "dim", "dual_dim", "kind"])
    return EXIT_OK


def cmd_reproduce(args) -> int:
    ids = list(load_examples()) if args.example == "all" else [args.example]
    rows = []
    for eid in ids:
        rows += run_example(eid, args.seed)
    table = []
    for r in rows:
        diff = ", ".join(f"{k} {v['got']} vs {v['expected']}" for k, v in r["diff"].items())
        exp = r["expected"]
        got = r["params"]
        table.append([r["example"], r["row"], f"[{exp[0]},{exp[1]},{exp[2]}]",
                      f"[{got[0]},{got[1]},{got[2]}]", r["distance"]["certificate"],
                      r["verdict"] + (f" ({diff})" if diff else "")])
    report = {"command": args.echo, "rows": rows,
              "matched": sum(r["verdict"] == "MATCH" for r in rows), "total": len(rows)}
    _emit(args, report, table, ["example", "row", "expected", "got", "certificate", "verdict"])
    if not args.json and not args.tsv:
        refs = [r for r in rows if "reference" in r]
        if refs:
            print("reference codes over M_4(F_2): " + ", ".join(
                f"[{','.join(map(str, r['reference']))}]" for r in refs))
    return EXIT_OK if report["matched"] == report["total"] else EXIT_FAIL


def cmd_verify(args) -> int:
    results = suites.run(args.suite)
    report = {"command": args.echo, "suite": args.suite, "results": results,
              "ok": all(r["ok"] for r in results)}
    if args.json:
        print(json.dumps(report, indent=2, default=str))
    else:
        for r in results:
            print(f"{'PASS' if r['ok'] else 'FAIL'}  {r['suite']:<12} {r['seconds']:.2f}s")
    return EXIT_OK if report["ok"] else EXIT_FAIL


# ---------------------------------------------------------------------------


def _odd(text: str) -> int:
    n = int(text)
    if n < 1 or n % 2 == 0:
        raise argparse.ArgumentTypeError(f"n must be a positive odd integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="m4cyclic", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, code_inputs: bool = True):
        sp.add_argument("--json", action="store_true", help="JSON report")
        sp.add_argument("--tsv", action="store_true", help="tab-separated table")
        sp.add_argument("--seed", type=int, default=16)
        if code_inputs:
            sp.add_argument("--n", type=_odd)
            sp.add_argument("--k", type=int)
            sp.add_argument("--gen", action="append", default=[], help="generator expression (repeatable)")
            sp.add_argument("--profile", help="construction profile JSON")

    sp = sub.add_parser("factor", help="factor x^n - 1 over GF(16)")
    sp.add_argument("--n", type=_odd, required=True)
    common(sp, False)
    sp.set_defaults(fn=cmd_factor)

    sp = sub.add_parser("build", help="build a code and certify its parameters")
    common(sp)
    sp.add_argument("--hint", type=int, help="target distance for the witness search")
    sp.set_defaults(fn=cmd_build)

    sp = sub.add_parser("mindist", help="certified minimum distance")
    common(sp)
    sp.add_argument("--hint", type=int)
    sp.set_defaults(fn=cmd_mindist)

    sp = sub.add_parser("dual", help="Euclidean or Hermitian dual")
    common(sp)
    sp.add_argument("--hermitian", action="store_true")
    sp.add_argument("--conj-mode", choices=("coeff", "power"), default="coeff")
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("reproduce", help="rebuild the bundled example tables")
    sp.add_argument("--example", choices=("1", "2", "3", "4", "all"), default="all")
    common(sp, False)
    sp.set_defaults(fn=cmd_reproduce)

    sp = sub.add_parser("verify", help="run the seeded property suites")
    sp.add_argument("--suite", choices=("core", "iso", "duality", "cardinality", "submodule", "all"),
                    default="all")
    common(sp, False)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.echo = "m4cyclic " + shlex.join(argv)
    try:
        return args.fn(args)
    except (UsageError, genexpr.ExprError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
