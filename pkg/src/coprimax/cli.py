"""Command-line front end.

JSON is the source of truth for every command; the text format is rendered
from the same dictionary.  Timing and node counters live in a `diagnostics`
field, which is the only part excluded from the byte-identical determinism
guarantee; everything else is independent of --threads.

Exit codes: 0 computed/verified, 1 claim falsified, 2 budget exceeded,
64 usage error, 70 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import make_basis
from .conj2 import verify_conjecture2
from .errors import InternalConsistencyError, TableValidationError
from .scanner import h_density, scan_H
from .search import (BUDGET_EXCEEDED, UNIQUENESS, VALUE_ONLY, check_range,
                     exact_f)
from .tables import CaseTable, builtin_table, load_table
from .theorems import (builtin_scheme, remark_counterexample, verify_counting,
                       verify_theorem1, verify_theorem2,
                       verify_uniqueness_chain_k4)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", default=None)
    common.add_argument("--threads", type=int, default=1,
                        help="worker hint; results are identical for any value")

    parser = _Parser(prog="coprimax",
                     description="exact search and proof certificates for "
                                 "k+1-pairwise-coprime-free subsets of [1,n]")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("f", parents=[common],
                       help="compute f(n,k), optionally all maximum sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--budget-ms", type=float, default=300_000)
    p.add_argument("--budget-nodes", type=int, default=10 ** 9)

    p = sub.add_parser("range", parents=[common],
                       help="run f over a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--mode", choices=("value", "uniqueness"), required=True)
    p.add_argument("--budget-ms", type=float, default=300_000)
    p.add_argument("--budget-nodes", type=int, default=10 ** 9)

    v = sub.add_parser("verify", help="verify a claim and emit a certificate")
    vsub = v.add_subparsers(dest="claim", required=True)

    p = vsub.add_parser("conjecture2", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--table", metavar="FILE", default=None)

    p = vsub.add_parser("counting", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)

    p = vsub.add_parser("uniqueness-k4", parents=[common])
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)

    p = vsub.add_parser("theorem", parents=[common])
    p.add_argument("--which", choices=("1", "2"), required=True)

    p = sub.add_parser("remark", parents=[common],
                       help="the equal-size counterexample below the square "
                            "threshold")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("scan-h", parents=[common],
                       help="scan prime indices for the gap condition (H)")
    p.add_argument("--t-max", type=int, required=True)

    return parser


# -- command handlers: each returns (exit_code, payload dict) ----------------

def _cmd_f(args):
    out = exact_f(args.n, args.k, enumerate_sets=args.enumerate, cap=args.cap,
                  budget_nodes=args.budget_nodes, budget_ms=args.budget_ms)
    payload = {"command": "f", **out.to_json_dict()}
    return (EXIT_BUDGET if out.status == BUDGET_EXCEEDED else EXIT_OK), payload


def _cmd_range(args):
    mode = VALUE_ONLY if args.mode == "value" else UNIQUENESS
    report = check_range(args.k, args.n_from, args.n_to, mode,
                         budget_nodes=args.budget_nodes,
                         budget_ms=args.budget_ms)
    payload = {"command": "range", **report.to_json_dict()}
    return (EXIT_OK if report.all_complete else EXIT_BUDGET), payload


def _cmd_conjecture2(args):
    basis = make_basis(args.k)
    if args.table:
        table = load_table(args.table)
    elif args.k in (3, 4):
        table = builtin_table(args.k)
    else:
        # for k <= 2 every window residue is handled without table entries
        table = CaseTable(k=args.k, entries=())
    cert = verify_conjecture2(basis, table)
    return (EXIT_OK if cert.passed else EXIT_FALSIFIED), cert.to_json_dict()


def _cmd_counting(args):
    scheme = builtin_scheme(args.k)
    basis = make_basis(args.k)
    reports = [verify_counting(scheme, n, basis)
               for n in range(args.n_from, args.n_to + 1)]
    ok = all(r.passed for r in reports)
    payload = {
        "claim": "counting",
        "k": args.k,
        "from": args.n_from,
        "to": args.n_to,
        "status": "pass" if ok else "fail",
        "reports": [r.to_json_dict() for r in reports],
    }
    return (EXIT_OK if ok else EXIT_FALSIFIED), payload


def _cmd_uniqueness_k4(args):
    reports = [verify_uniqueness_chain_k4(n)
               for n in range(args.n_from, args.n_to + 1)]
    ok = all(r.passed for r in reports)
    payload = {
        "claim": "uniqueness-chain-k4",
        "from": args.n_from,
        "to": args.n_to,
        "status": "pass" if ok else "fail",
        "reports": [r.to_json_dict() for r in reports],
    }
    return (EXIT_OK if ok else EXIT_FALSIFIED), payload


def _cmd_theorem(args):
    cert = verify_theorem1() if args.which == "1" else verify_theorem2()
    return (EXIT_OK if cert.passed else EXIT_FALSIFIED), cert.to_json_dict()


def _cmd_remark(args):
    result = remark_counterexample(make_basis(args.k))
    return EXIT_OK, result.to_json_dict()


def _cmd_scan_h(args):
    hits = scan_H(args.t_max)
    count, t_max, ratio = h_density(args.t_max)
    payload = {
        "command": "scan-h",
        "t_max": t_max,
        "hits": [r.to_json_dict() for r in hits],
        "hit_count": count,
        "hit_ratio": ratio,
    }
    return EXIT_OK, payload


# -- rendering ---------------------------------------------------------------

def _render_text(payload: dict) -> str:
    lines: list[str] = []

    def emit(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for key, value in obj.items():
                if key in ("records", "reports", "outcomes", "hits",
                           "maximum_sets", "components", "evidence"):
                    if value is None:
                        lines.append(f"{pad}{key}: not computed")
                        continue
                    seq = value
                    lines.append(f"{pad}{key} ({len(seq)}):")
                    for item in seq:
                        if isinstance(item, dict):
                            summary = _summarize(key, item)
                            lines.append(f"{pad}  - {summary}")
                        else:
                            lines.append(f"{pad}  - {item}")
                elif isinstance(value, dict):
                    lines.append(f"{pad}{key}:")
                    emit(value, indent + 1)
                else:
                    lines.append(f"{pad}{key}: {value}")
        else:
            lines.append(f"{pad}{obj}")

    emit(payload)
    return "\n".join(lines) + "\n"


def _summarize(kind: str, item: dict) -> str:
    status = item.get("status", "")
    if kind == "records":
        return f"a={item['a']:>4}  {item['rule']:<11} {status}"
    if kind == "reports":
        n = item.get("n", "")
        extra = f" slack={item['slack']}" if "slack" in item else ""
        return f"n={n:>4} {status}{extra}"
    if kind == "outcomes":
        return (f"n={item['n']:>4} f={item['f']} matches_E={item['matches_E']} "
                f"unique={item['E_is_unique_maximum']} {item['status']}")
    if kind == "hits":
        return (f"t={item['t']} primes=({item['p_t']},{item['p_t_plus_7']},"
                f"{item['p_t_plus_8']},{item['p_t_plus_9']})")
    return ", ".join(f"{k}={v}" for k, v in item.items()
                     if k not in ("evidence", "blocks", "checks"))


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return _render_text(payload)


_HANDLERS = {
    ("f", None): _cmd_f,
    ("range", None): _cmd_range,
    ("verify", "conjecture2"): _cmd_conjecture2,
    ("verify", "counting"): _cmd_counting,
    ("verify", "uniqueness-k4"): _cmd_uniqueness_k4,
    ("verify", "theorem"): _cmd_theorem,
    ("remark", None): _cmd_remark,
    ("scan-h", None): _cmd_scan_h,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE

    handler = _HANDLERS[(args.command, getattr(args, "claim", None))]
    try:
        code, payload = handler(args)
    except (ValueError, TableValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    text = render(payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
