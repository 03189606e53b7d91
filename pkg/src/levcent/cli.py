"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error, 4 resource limit.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from typing import Sequence

from . import closed_forms as cf
from . import experiments as ex
from . import generators as gen
from .centrality import leverage_all
from .errors import LevcentError
from .exactq import to_decimal_string, to_text
from .graph import read_edge_list, write_edge_list
from .verify import available_checks, verify_all, verify_suite


def _table(rows: list[list[str]], header: list[str]) -> str:
    cols = [header] + rows
    widths = [max(len(str(r[i])) for r in cols) for i in range(len(header))]
    lines = ["  ".join(str(c).rjust(w) for c, w in zip(r, widths)) for r in cols]
    return "\n".join(lines) + "\n"


def _fmt(args) -> str:
    if args.format:
        return args.format
    return "text" if sys.stdout.isatty() and not args.out else "json"


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_compute(args) -> int:
    if args.input == "-":
        g = read_edge_list(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as fh:
            g = read_edge_list(fh)
    report = leverage_all(g)
    fmt = _fmt(args)
    if fmt == "json":
        _emit(args, _dump(report.to_dict(args.decimals)))
    elif fmt == "csv":
        _emit(args, report.to_csv(args.decimals))
    else:
        header = ["id", "label", "degree", "leverage"] + (["decimal"] if args.decimals else [])
        rows = []
        for v, x in enumerate(report.values):
            row = [str(v), report.labels[v], str(report.degrees[v]), to_text(x)]
            if args.decimals:
                row.append(to_decimal_string(x, args.decimals))
            rows.append(row)
        text = _table(rows, header)
        text += (f"sum {to_text(report.total)}  min {to_text(report.minimum)}  "
                 f"max {to_text(report.maximum)}  distinct {report.distinct_count}  "
                 f"positive {report.positive_count}  negative {report.negative_count}  "
                 f"zero {report.zero_count}\n")
        _emit(args, text)
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise argparse.ArgumentTypeError(
            f"family {args.family!r} needs " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_gen(args) -> int:
    fam = args.family
    notes: list[str] = []
    if fam in ("path", "cycle", "complete", "star", "positive-a", "positive-b", "dumbbell-claw"):
        _need(args, "n")
    if fam == "path":
        g = gen.path(args.n)
    elif fam == "cycle":
        g = gen.cycle(args.n)
    elif fam == "complete":
        g = gen.complete(args.n)
    elif fam == "star":
        g = gen.star(args.n)
    elif fam == "multipartite":
        _need(args, "parts")
        g = gen.complete_multipartite(args.parts)
    elif fam == "lattice":
        _need(args, "m", "n")
        g = gen.lattice(args.m, args.n)
    elif fam == "path-power-lattice":
        _need(args, "m", "n", "k")
        g = gen.path_power_lattice(args.m, args.n, args.k)
    elif fam == "k3-pendant":
        g = gen.k3_pendant()
    elif fam == "positive-a":
        g = gen.positive_construction_a(args.n)
    elif fam == "positive-b":
        g = gen.positive_construction_b(args.n)
    else:
        g, u, v = gen.dumbbell_claw(args.n)
        notes.append(f"# u = {u}, v = {v}")
    buf = io.StringIO()
    buf.write(f"# {fam}: {g.vertex_count} vertices, {g.edge_count} edges\n")
    for line in notes:
        buf.write(line + "\n")
    if args.labels:
        for v in range(g.vertex_count):
            buf.write(f"# label {v} {g.label(v)}\n")
    write_edge_list(g, buf)
    _emit(args, buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    if args.name == "all":
        results = verify_all()
    else:
        results = [verify_suite(args.name)]
    if _fmt(args) == "json":
        _emit(args, _dump([{"name": r.name, "passed": r.passed, "cases": r.cases,
                            "detail": r.detail, "counterexample": r.counterexample}
                           for r in results]))
    else:
        lines = []
        for r in results:
            lines.append(r.line())
            if r.counterexample:
                lines.append("      " + json.dumps(r.counterexample))
        _emit(args, "\n".join(lines) + "\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_search_zero(args) -> int:
    res = ex.zero_search(args.k, args.bound, args.distinct, workers=args.threads)
    if _fmt(args) == "json":
        _emit(args, _dump(res.to_dict()))
    else:
        head = (f"# center degree {res.center_degree}, neighbor degrees <= {res.bound}, "
                f"distinct={res.require_distinct}: {len(res.solutions)} solutions\n")
        _emit(args, head + "".join(",".join(map(str, s)) + "\n" for s in res.solutions))
    return 0


def _count_rows(results: list[ex.DistinctCountResult], exploratory: bool) -> str:
    rows = []
    for r in results:
        if r.exceeds_bound:
            verdict = "EXCEEDS-BOUND"
        else:
            verdict = "MATCH" if r.matches_bound else "MISMATCH"
        rows.append([str(r.m), "-" if r.n is None else str(r.n), str(r.k), r.method,
                     str(r.distinct_count), str(r.bound), verdict])
    text = _table(rows, ["m", "n", "k", "method", "distinct", "bound", "verdict"])
    if exploratory:
        text = "# exploratory: counts are evidence only, not a proof\n" + text
    return text


def cmd_count_distinct(args) -> int:
    if args.method == "classes":
        res = ex.count_distinct_classes(args.m)
    else:
        res = ex.count_distinct_bruteforce(gen.path(args.n), args.m)
    if _fmt(args) == "json":
        _emit(args, _dump(res.to_dict()))
    else:
        _emit(args, _count_rows([res], False))
    return 0


def cmd_conjecture(args) -> int:
    results = ex.conjecture_scan(args.k, args.n, args.m_max)
    if _fmt(args) == "json":
        _emit(args, _dump({"exploratory": True, "k": args.k, "n": args.n,
                           "m_max": args.m_max,
                           "results": [r.to_dict() for r in results]}))
    else:
        _emit(args, _count_rows(results, True))
    return 0


def cmd_convergence(args) -> int:
    rows = ex.convergence_rows(args.m_max)
    if _fmt(args) == "json":
        _emit(args, _dump(rows))
    else:
        _emit(args, _table([[str(r["m"]), r["min"], r["max"]] for r in rows], ["m", "min", "max"]))
    return 0


def _parts(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad part list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="levcent", description="Exact leverage centrality toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"))
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compute", parents=[common], help="leverage of every vertex of an edge list")
    s.add_argument("input", help="edge-list file, or - for stdin")
    s.add_argument("--decimals", type=int, default=None)
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("gen", parents=[common], help="emit a graph family as an edge list")
    s.add_argument("family", choices=gen.FAMILIES)
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--parts", type=_parts)
    s.add_argument("--labels", action="store_true", help="include vertex labels as comments")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", parents=[common], help="run a named check, or all")
    s.add_argument("name", help="check name or 'all'; available: " + ", ".join(available_checks()))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search-zero", parents=[common], help="zero-leverage degree profiles")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--distinct", action=argparse.BooleanOptionalAction, default=True)
    s.set_defaults(func=cmd_search_zero)

    s = sub.add_parser("count-distinct", parents=[common], help="distinct values on the P_n lattice")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--method", choices=("classes", "brute-force"), default="classes")
    s.add_argument("--n", type=int, default=5)
    s.set_defaults(func=cmd_count_distinct)

    s = sub.add_parser("conjecture", parents=[common], help="path-power lattice scan (exploratory)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m-max", type=int, required=True)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("convergence", parents=[common], help="min/max lattice leverage by m")
    s.add_argument("--m-max", type=int, required=True)
    s.set_defaults(func=cmd_convergence)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.name != "all" and args.name not in available_checks():
        print(f"levcent: unknown check {args.name!r}; available: all, "
              + ", ".join(available_checks()), file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"levcent: {exc}", file=sys.stderr)
        return 2
    except LevcentError as exc:
        print(f"levcent: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"levcent: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
