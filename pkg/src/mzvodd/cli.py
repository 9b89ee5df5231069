"""Command-line interface: ``mzvodd <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .cache import Cache, get_matrix
from .exact_linalg import left_kernel, right_kernel
from .ihara import b_coeff, c_coeff, e_coeff
from .indices import enumerate_indices, index_count
from .matrices import IntMatrix
from .period_poly import build_W, check_prop35, check_surjectivity_conjecture, check_period_map
from .relations import cmd_relations, relations_to_text
from .series import bk_rows, series_O, series_S
from .suites import SUITES, cmd_report, cmd_verify, format_rows, verify_to_text

FORMATS = ("text", "json", "csv", "markdown")


def _int_list(s: str) -> tuple:
    try:
        return tuple(int(x) for x in s.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _emit(text: str, out: Optional[str] = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cache(args) -> Optional[Cache]:
    return Cache.from_env(args.cache_dir)


def cmd_indices(args) -> int:
    N, r = args.weight, args.depth
    if args.count_only:
        n = index_count(N, r)
        _emit(json.dumps({"weight": N, "depth": r, "count": n}) + "\n" if args.format == "json" else f"{n}\n")
        return 0
    members = list(enumerate_indices(N, r))
    if args.format == "json":
        _emit(json.dumps({"weight": N, "depth": r, "indices": [list(m) for m in members]}) + "\n")
    elif args.format == "csv":
        _emit("".join(",".join(map(str, m)) + "\n" for m in members))
    else:
        _emit("".join("(" + ",".join(map(str, m)) + ")\n" for m in members))
    return 0


def cmd_coeff(args) -> int:
    if args.kind == "b":
        if len(args.m) != 1 or len(args.n) != 2:
            raise SystemExit("b needs --m with one entry and --n with two entries")
        value = b_coeff(args.m[0], args.n[0], args.n[1])
    elif args.kind == "e":
        value = e_coeff(args.m, args.n)
    else:
        value = c_coeff(args.m, args.n)
    _emit(json.dumps({"kind": args.kind, "m": list(args.m), "n": list(args.n), "value": str(value)}) + "\n"
          if args.format == "json" else f"{value}\n")
    return 0


def _matrix_json(M: IntMatrix) -> str:
    return json.dumps({"kind": M.kind, "N": M.N, "r": M.r, "q": M.q,
                       "labels": [list(m) for m in M.labels], "rows": [list(r) for r in M.rows]}) + "\n"


def _load_matrix(args) -> IntMatrix:
    if getattr(args, "matrix", None):
        return IntMatrix.from_text(Path(args.matrix).read_text(encoding="utf-8"))
    if args.kind is None or args.weight is None or args.depth is None:
        raise SystemExit("give --matrix FILE or --kind, --weight and --depth")
    return get_matrix(args.kind, args.weight, args.depth, args.q, _cache(args))


def cmd_matrix(args) -> int:
    M = _load_matrix(args)
    _emit(_matrix_json(M) if args.format == "json" else M.to_text(), args.out)
    return 0


def cmd_kernel(args) -> int:
    M = _load_matrix(args)
    cache = _cache(args)
    if cache is not None and not args.matrix:
        K = cache.kernel(args.side, args.kind, args.weight, args.depth, args.q)
    else:
        K = (left_kernel if args.side == "left" else right_kernel)(M)
    if args.format == "json":
        text = json.dumps({"side": K.side, "source": K.source, "dim": K.dim,
                           "vectors": [[str(x) for x in v.entries] for v in K]}) + "\n"
    else:
        text = K.to_text()
    _emit(text, args.out)
    return 0


def cmd_relations_cli(args) -> int:
    rels = cmd_relations(args.weight, args.depth)
    if args.format == "json":
        _emit(json.dumps([r.to_dict() for r in rels], indent=2) + "\n")
    else:
        _emit(relations_to_text(rels))
    return 0


def cmd_period_poly(args) -> int:
    N, r = args.weight, args.depth
    W = build_W(N, r)
    doc = {"weight": N, "depth": r, "dim": W.dim, "basis": [str(p) for p in W.basis]}
    status = 0
    if args.check:
        if args.check == "prop35":
            rep = check_prop35(N)
        elif args.check == "thm37":
            rep = check_period_map(N, r)
        else:
            rep = check_surjectivity_conjecture(N, r)
        doc["report"] = rep.to_dict()
        status = 0 if rep.passed else 1
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n")
    else:
        lines = [f"W_{{{N},{r}}}: dim {W.dim}"] + [f"  {p}" for p in doc["basis"]]
        if "report" in doc:
            rep = doc["report"]
            lines.append(f"{rep['name']}: {'PASS' if rep['passed'] else 'FAIL'} {rep['values']}")
            lines += [f"  [{'pass' if c['ok'] else 'FAIL'}] {c['name']}" for c in rep["checks"]]
            lines += [f"  [{'observed' if o['holds'] else 'differs'}] {o['name']}" for o in rep["observations"]]
        _emit("\n".join(lines) + "\n")
    return status


def cmd_series(args) -> int:
    T = args.order
    if args.which == "O":
        rows = [{"n": n, "coeff": c} for n, c in enumerate(series_O(T).coeffs)]
        cols = ("n", "coeff")
    elif args.which == "S":
        rows = [{"n": n, "coeff": c} for n, c in enumerate(series_S(T).coeffs)]
        cols = ("n", "coeff")
    else:
        depth = 4 if args.depth is None else args.depth
        table = bk_rows(T, depth)
        depths = [depth] if args.depth is not None else range(depth + 1)
        rows = [{"n": n, "depth": r, "coeff": table[r][n]} for r in depths for n in range(T + 1)]
        cols = ("n", "depth", "coeff")
    _emit(format_rows(rows, args.format, cols))
    return 0


def cmd_verify_cli(args) -> int:
    status, doc = cmd_verify(args.suite, max_weight=args.max_weight, weight=args.weight, jobs=args.jobs)
    _emit(json.dumps(doc, indent=2) + "\n" if args.format == "json" else verify_to_text(doc))
    return status


def cmd_report_cli(args) -> int:
    rows = cmd_report(args.max_weight or 24, jobs=args.jobs)
    _emit(format_rows(rows, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS, help="cache directory (default: $MZVODD_CACHE)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes")
    common.add_argument("--max-weight", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="mzvodd", description="Totally odd MZV coefficient matrices and checks.")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-weight", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("indices", parents=[common], help="list S_{N,r}")
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_indices)

    s = sub.add_parser("coeff", parents=[common], help="one b, e or c coefficient")
    s.add_argument("--kind", choices=("b", "e", "c"), required=True)
    s.add_argument("--m", type=_int_list, required=True)
    s.add_argument("--n", type=_int_list, required=True)
    s.set_defaults(func=cmd_coeff)

    for name, func in (("matrix", cmd_matrix), ("kernel", cmd_kernel)):
        s = sub.add_parser(name, parents=[common], help=f"{name} in MZVODD v1 format")
        s.add_argument("--kind", choices=("E", "Eq", "C", "F"), default=None if name == "kernel" else "E")
        s.add_argument("--weight", type=int)
        s.add_argument("--depth", type=int)
        s.add_argument("--q", type=int, default=None)
        s.add_argument("--out", default=None)
        if name == "kernel":
            s.add_argument("--side", choices=("left", "right"), required=True)
            s.add_argument("--matrix", default=None, help="read an MZVODD-MATRIX v1 file")
        s.set_defaults(func=func)

    s = sub.add_parser("relations", parents=[common], help="linear relations from ker tC")
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_relations_cli)

    s = sub.add_parser("period-poly", parents=[common], help="basis of W_{N,r} and checks")
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--check", choices=("prop35", "thm37", "surjectivity"), default=None)
    s.set_defaults(func=cmd_period_poly)

    s = sub.add_parser("series", parents=[common], help="coefficients of O, S or the BK table")
    s.add_argument("--which", choices=("O", "S", "BK"), required=True)
    s.add_argument("--order", type=int, default=40)
    s.add_argument("--depth", type=int, default=None)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--weight", type=int, default=None)
    s.set_defaults(func=cmd_verify_cli)

    s = sub.add_parser("report", parents=[common], help="grid of sizes, ranks and BK coefficients")
    s.set_defaults(func=cmd_report_cli)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"mzvodd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
