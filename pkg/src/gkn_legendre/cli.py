"""Command-line front end.

Verbs: bracket, matrix, verify, sweep, qfun, stirling, laguerre-coeff.
Exit codes: 0 ok, 1 assertion failure, 2 usage or domain error, 3 I/O error.
All machine-readable output is valid JSON or CSV; rationals print as "p/q".
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .brackets import bracket, bracket_decomposed
from .classical import ClassicalFunction, legendre_q
from .exactnum import laguerre_ld_coefficient, legendre_stirling, rational_str
from .matrices import (
    IndexSelection,
    b_block,
    build_matrix,
    c_block,
    canonical_selection,
)
from .oracle import bracket_via_oracle
from .sweep import LEDGER_ENV_VAR, RunConfig, run_sweep
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _parse_bool(s: str) -> bool:
    if s.lower() in ("true", "1", "yes", "on"):
        return True
    if s.lower() in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {s!r}")


def _parse_indices(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in s.split(",") if tok != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _selection_from_args(args) -> IndexSelection:
    if args.canonical:
        return canonical_selection(args.n)
    if args.p is None or args.q is None:
        raise CliError("either --canonical or both --p and --q are required")
    return IndexSelection(args.p, args.q, args.n)


def cmd_bracket(args) -> int:
    f = ClassicalFunction(args.kind1.upper(), args.idx1)
    g = ClassicalFunction(args.kind2.upper(), args.idx2)
    value = bracket(f, g, args.n)
    if args.verbose:
        gap, inner = bracket_decomposed(f, g, args.n)
        print(f"[{f},{g}]_{args.n} = {rational_str(value)}")
        print(f"eigen_gap = {rational_str(gap)}")
        print(f"inner     = {rational_str(inner)}")
        if args.check_oracle:
            oracle_value = bracket_via_oracle(f, g, args.n)
            agrees = oracle_value == value
            print(f"oracle    = {rational_str(oracle_value)} ({'agrees' if agrees else 'MISMATCH'})")
            if not agrees:
                return EXIT_ASSERTION
    else:
        if args.check_oracle and bracket_via_oracle(f, g, args.n) != value:
            print("oracle mismatch", file=sys.stderr)
            return EXIT_ASSERTION
        print(rational_str(value))
    return EXIT_OK


def cmd_matrix(args) -> int:
    sel = _selection_from_args(args)
    if args.block == "M":
        m = build_matrix(sel)
        if args.format == "json":
            print(json.dumps(m.to_json()))
        elif args.format == "csv":
            sys.stdout.write(m.to_csv())
        else:
            print(m.pretty())
        return EXIT_OK
    rows = b_block(sel) if args.block == "B" else c_block(sel)
    cells = [[rational_str(e) for e in row] for row in rows]
    if args.format == "json":
        row_labels = [f"P{i}" for i in sel.p_indices] if args.block == "B" else [
            f"Q{i}" for i in sel.q_indices
        ]
        print(json.dumps({
            "power": sel.power,
            "block": args.block,
            "row_labels": row_labels,
            "col_labels": [f"Q{i}" for i in sel.q_indices],
            "entries": cells,
        }))
    elif args.format == "csv":
        for row in cells:
            print(",".join(row))
    else:
        widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
        for row in cells:
            print("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return EXIT_OK


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "canonical":
        kwargs["max_n"] = args.max_n
    elif args.suite == "parity":
        kwargs["n"] = args.n
        kwargs["pool"] = args.pool
    elif args.suite == "n2-exhaustive":
        kwargs["max_p_index"] = args.pool if args.pool is not None else 50
    elif args.suite == "oracle":
        kwargs["max_index"] = args.max_index
        kwargs["max_n"] = args.max_n if args.max_n is not None else 4
    if args.suite == "canonical" and kwargs["max_n"] is None:
        kwargs["max_n"] = 32
    if args.suite == "parity":
        kwargs["n"] = kwargs["n"] if kwargs["n"] is not None else 3
        kwargs["pool"] = kwargs["pool"] if kwargs["pool"] is not None else 7
    kwargs = {k: v for k, v in kwargs.items() if v is not None}

    results = run_suite(args.suite, **kwargs)
    failures = [r for r in results if not r.ok]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name}  ({r.elapsed:.3f}s)  {r.detail}")
    if failures:
        dump = [
            {"name": r.name, "ok": r.ok, "detail": r.detail, "elapsed": r.elapsed}
            for r in results
        ]
        try:
            with open(args.failure_dump, "w", encoding="utf-8") as fh:
                json.dump(dump, fh, indent=2)
            print(f"failure report written to {args.failure_dump}", file=sys.stderr)
        except OSError as exc:
            print(f"could not write failure report: {exc}", file=sys.stderr)
        return EXIT_ASSERTION
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = RunConfig(
        power=args.n,
        pool_bound=args.pool,
        parity_filter=not args.no_parity_filter,
        workers=args.workers,
        output_format=args.format,
    )
    if args.ledger is not None:
        config.ledger_path = args.ledger
    try:
        records = run_sweep(config)
    except OSError as exc:
        print(f"ledger I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    deficient = [r for r in records if not r.full_rank]
    if args.format == "json":
        for rec in records:
            print(json.dumps(rec.to_json(), sort_keys=True))
    elif args.format == "csv":
        print("key,n,rank,full_rank,det_B")
        for rec in records:
            print(f"{rec.key()},{rec.selection.power},{rec.rank},{rec.full_rank},{rec.det_b}")
    else:
        print(f"{len(records)} new records appended to {config.ledger_path}")
        for rec in deficient:
            print(f"CONJECTURE-COUNTEREXAMPLE: {rec.key()} rank {rec.rank} det_B {rec.det_b}")
    if deficient and args.format != "pretty":
        for rec in deficient:
            print(f"CONJECTURE-COUNTEREXAMPLE: {rec.key()}", file=sys.stderr)
    return EXIT_OK


def cmd_qfun(args) -> int:
    q = legendre_q(args.k)
    if args.format == "json":
        print(json.dumps(q.to_json()))
    else:
        print(f"Q_{args.k}(x) = {q}")
    return EXIT_OK


def cmd_stirling(args) -> int:
    rows = [[legendre_stirling(n, k) for k in range(n + 1)] for n in range(args.n + 1)]
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for n, row in enumerate(rows):
            print(f"n={n}: " + " ".join(map(str, row)))
    return EXIT_OK


def cmd_laguerre_coeff(args) -> int:
    value = laguerre_ld_coefficient(args.j, args.n, args.k)
    print(rational_str(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkn-legendre",
        description="Exact GKN boundary-condition engine for powers of the Legendre operator",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="evaluate a boundary bracket [f,g]_n")
    p.add_argument("kind1", choices=["P", "Q", "p", "q"])
    p.add_argument("idx1", type=int)
    p.add_argument("kind2", choices=["P", "Q", "p", "q"])
    p.add_argument("idx2", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verbose", "-v", action="store_true")
    p.add_argument("--check-oracle", type=_parse_bool, default=False,
                   help="cross-check against the symbolic endpoint-limit oracle")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("matrix", help="print a boundary-form matrix")
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--p", type=_parse_indices)
    p.add_argument("--q", type=_parse_indices)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--block", choices=["M", "B", "C"], default="M")
    p.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--pool", type=int, default=None)
    p.add_argument("--max-index", type=int, default=8)
    p.add_argument("--failure-dump", default="gkn_verify_failures.json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="sweep parity-balanced selections into the ledger")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pool", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-parity-filter", action="store_true")
    p.add_argument("--ledger", default=None, help=f"ledger path (or env {LEDGER_ENV_VAR})")
    p.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("qfun", help="print the exact representation of Q_k")
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=["pretty", "json"], default="pretty")
    p.set_defaults(func=cmd_qfun)

    p = sub.add_parser("stirling", help="print the Legendre-Stirling triangle")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["pretty", "json"], default="pretty")
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("laguerre-coeff", help="Laguerre left-definite coefficient b_j(n,k)")
    p.add_argument("j", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k")
    p.set_defaults(func=cmd_laguerre_coeff)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; keep --version/-h at 0
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
