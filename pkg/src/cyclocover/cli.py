"""Command-line interface.

Subcommands::

    cyclocover decide --q 2 --n 6
    cyclocover table  --q 2 --n-max 64 --format csv
    cyclocover verify --q 2 --n 6
    cyclocover oracle --q 2 --n 5 --max-codim 2

Exit codes: 0 ok, 1 a verification check failed, 2 invalid input,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .budget import DEFAULT_BUDGET, Budget
from .criterion import DecisionRecord, h_zero
from .errors import InvalidInput, ResourceExceeded
from .group_algebra import verification_report
from .oracle import exact_h_bruteforce, exists_covering_hyperplane

SCHEMA = "cyclocover/1"
TABLE_COLUMNS = ["n", "p_power_k", "m", "h_zero", "failing_coset_rep"]

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _bool(v: Optional[bool]) -> str:
    return "" if v is None else ("true" if v else "false")


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _csv_row(rec: DecisionRecord) -> list:
    rep = rec.failing_coset_rep
    return [rec.n, rec.split.k, rec.split.m, _bool(rec.verdict), "" if rep is None else rep]


def _budget(args) -> Budget:
    return DEFAULT_BUDGET if args.budget is None else Budget.uniform(args.budget)


# -- decide ------------------------------------------------------------------------


def cmd_decide(args) -> tuple[str, int]:
    rec = h_zero(args.q, args.n, budget=_budget(args))
    if args.format == "json":
        return _json({"schema": SCHEMA, "command": "decide", **rec.to_dict()}), EXIT_OK
    if args.format == "csv":
        return _csv(TABLE_COLUMNS, [_csv_row(rec)]), EXIT_OK
    s = rec.split
    lines = [
        f"q={rec.q} n={rec.n} = {s.p}^{s.k} * {s.m}",
        f"h_zero: {_bool(rec.verdict)}",
    ]
    for cv in rec.coset_verdicts:
        c = cv.coset
        status = "pass" if cv.passes else "FAIL"
        lines.append(
            f"  coset {c.representative:>4} size {c.size:>3} m_t {cv.subgroup_order:>4}  {status}  ({cv.route})"
        )
    return "\n".join(lines) + "\n", EXIT_OK


# -- table -------------------------------------------------------------------------


def _table_row(job: tuple[int, int, Budget]) -> dict:
    q, n, budget = job
    try:
        rec = h_zero(q, n, budget=budget)
        return {"record": rec.to_dict(), "csv": _csv_row(rec)}
    except ResourceExceeded as exc:
        return {"n": n, "error": str(exc)}


def cmd_table(args) -> tuple[str, int]:
    if args.n_max < 0:
        raise InvalidInput("--n-max must be non-negative")
    if args.jobs < 1:
        raise InvalidInput("--jobs must be positive")
    h_zero(args.q, 1)  # validates q before any work is dispatched
    budget = _budget(args)
    jobs = [(args.q, n, budget) for n in range(1, args.n_max + 1)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(_table_row, jobs))
    else:
        rows = [_table_row(j) for j in jobs]
    any_error = any("error" in r for r in rows)

    if args.format == "json":
        out = [
            r["record"] if "record" in r else {"n": r["n"], "error": r["error"]}
            for r in rows
        ]
        return _json({"schema": SCHEMA, "command": "table", "q": args.q, "n_max": args.n_max, "rows": out}), EXIT_OK
    if args.format == "csv":
        header = TABLE_COLUMNS + (["error"] if any_error else [])
        body = []
        for r in rows:
            if "record" in r:
                body.append(r["csv"] + ([""] if any_error else []))
            else:
                body.append([r["n"], "", "", "", "", r["error"]])
        return _csv(header, body), EXIT_OK
    lines = [f"{'n':>5} {'k':>3} {'m':>5}  h_zero  failing"]
    for r in rows:
        if "record" in r:
            n, k, m, h, rep = r["csv"]
            lines.append(f"{n:>5} {k:>3} {m:>5}  {h:<6}  {rep}")
        else:
            lines.append(f"{r['n']:>5}  error: {r['error']}")
    return "\n".join(lines) + "\n", EXIT_OK


# -- verify ------------------------------------------------------------------------


def cmd_verify(args) -> tuple[str, int]:
    checks = verification_report(args.q, args.n, seed=args.seed, budget=_budget(args))
    ok = all(c.passed for c in checks)
    code = EXIT_OK if ok else EXIT_FAILED
    if args.format == "json":
        return _json({
            "schema": SCHEMA,
            "command": "verify",
            "q": args.q,
            "n": args.n,
            "seed": args.seed,
            "all_passed": ok,
            "checks": [c.to_dict() for c in checks],
        }), code
    if args.format == "csv":
        return _csv(["name", "passed", "detail"], [[c.name, _bool(c.passed), c.detail] for c in checks]), code
    lines = [f"{'ok  ' if c.passed else 'FAIL'} {c.name}  {c.detail}" for c in checks]
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", code


# -- oracle ------------------------------------------------------------------------


def cmd_oracle(args) -> tuple[str, int]:
    budget = _budget(args)
    if args.n < 1:
        raise InvalidInput("n must be positive")
    witness = exists_covering_hyperplane(args.q, args.n, budget=budget)
    exact = None
    if args.max_codim is not None:
        exact = exact_h_bruteforce(args.q, args.n, args.max_codim, budget=budget)
    verdict = h_zero(args.q, args.n, budget=budget).verdict
    agrees = (witness is None) == verdict
    if exact is not None and args.max_codim >= 1:
        agrees = agrees and (exact == 0) == verdict
    payload = {
        "q": args.q,
        "n": args.n,
        "covering_hyperplane": list(witness) if witness is not None else None,
        "h_zero": witness is None,
        "max_codim": args.max_codim,
        "exact_h": exact,
        "criterion_h_zero": verdict,
        "agrees_with_criterion": agrees,
    }
    if args.format == "json":
        return _json({"schema": SCHEMA, "command": "oracle", **payload}), EXIT_OK
    w = "" if witness is None else " ".join(map(str, witness))
    if args.format == "csv":
        return _csv(
            ["q", "n", "covering_hyperplane", "exact_h", "agrees_with_criterion"],
            [[args.q, args.n, w, "" if exact is None else exact, _bool(agrees)]],
        ), EXIT_OK
    lines = [
        f"q={args.q} n={args.n}",
        f"covering hyperplane: {'(' + w + ')' if witness is not None else 'none'}",
    ]
    if exact is not None:
        lines.append(f"exact h (codim <= {args.max_codim}): {exact}")
    lines.append(f"agrees with criterion: {_bool(agrees)}")
    return "\n".join(lines) + "\n", EXIT_OK


# -- entry point -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocover",
        description="Decide whether F_q^n has a proper cyclically covering subspace.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="field size (prime power)")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--budget", type=int, default=None,
                        help="bound on enumerated field orders and vector spaces")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for tables")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("decide", parents=[common], help="decide h_q(n) = 0 for one n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("table", parents=[common], help="decide n = 1 .. n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the structural checks")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force covering search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-codim", type=int, default=None,
                   help="also compute the exact h up to this codimension")
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[str, str, int]:
    """Execute a command line; returns ``(stdout, stderr, exit_code)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", "", int(exc.code or 0)
    if args.budget is not None and args.budget <= 0:
        return "", "error: --budget must be positive\n", EXIT_INVALID
    try:
        out, code = args.func(args)
    except ResourceExceeded as exc:
        return "", f"resource exceeded: {exc}\n", EXIT_RESOURCE
    except InvalidInput as exc:
        return "", f"invalid input: {exc}\n", EXIT_INVALID
    return out, "", code


def main(argv: Optional[Sequence[str]] = None) -> int:
    out, err, code = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
