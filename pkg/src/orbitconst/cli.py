"""Command-line surface: list real forms, compute constants, verify, tabulate.

Commands
    real-forms   list a case's real forms with h-vectors and signed tableaux
    constant     compute constants by brute force and/or the closed form
    verify       run the full acceptance suite, JSON summary, exit code
    table        emit the per-family constants table (text/csv/json/latex)

Exit status: 0 on success / agreement, 1 on mathematical disagreement or
failed verification, 2 on usage or capacity errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .constants import (DEFAULT_TERM_CAP, ConstantReport, LambdaDegenerateError,
                        NonIntegerQuotientError, TermCapExceeded,
                        alternating_sum, closed_form_expr, constant_closed_form,
                        default_lambda, lambda_candidates, levi_data,
                        levi_k_poly)
from .orbits import dominant_h, orbit_partition, real_forms, weighted_dynkin
from .rootsys import GroupCase, build_root_system
from .verify import run_all
from .weylpoly import eval_dim_poly

FORMATS = ("text", "json", "csv", "latex")


def _case_from_args(args) -> GroupCase:
    group = args.group
    if group is None:
        raise ValueError("--group is required")
    if group in ("su", "so-odd", "so-even"):
        if args.p is None or args.q is None:
            raise ValueError(f"--group {group} requires --p and --q")
        return GroupCase(group, p=args.p, q=args.q)
    if args.n is None:
        raise ValueError(f"--group {group} requires --n")
    return GroupCase(group, n=args.n)


def _fmt_h(case: GroupCase, h) -> str:
    vals = [str(x) for x in h]
    if case.family in ("su", "so-odd", "so-even"):
        p = case.p
        return "(" + ",".join(vals[:p]) + " | " + ",".join(vals[p:]) + ")"
    return "(" + ",".join(vals) + ")"


def _partition_str(parts) -> str:
    out = []
    for d in sorted(set(parts), reverse=True):
        m = list(parts).count(d)
        out.append(f"{d}^{m}" if m > 1 else str(d))
    return "[" + ",".join(out) + "]"


def _json_weight(w) -> list[str]:
    return [str(Fraction(x)) for x in w]


def _case_json(case: GroupCase) -> dict:
    return {"family": case.family, "params": case.params()}


def _emit_rows(fmt: str, header: list[str], rows: list[list[str]],
               caption: str = "") -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return
    if fmt == "latex":
        cols = "l" * len(header)
        print(r"\begin{tabular}{%s}" % cols)
        print(r"\hline")
        print(" & ".join(header) + r" \\")
        print(r"\hline")
        for row in rows:
            print(" & ".join(str(x) for x in row) + r" \\")
        print(r"\hline")
        print(r"\end{tabular}")
        return
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows
              else len(str(h)) for i, h in enumerate(header)]
    if caption:
        print(caption)
    print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(str(x).ljust(w) for x, w in zip(row, widths)))


def cmd_real_forms(args) -> int:
    case = _case_from_args(args)
    forms = real_forms(case)
    if args.format == "json":
        doc = {"case": _case_json(case),
               "orbit": _partition_str(orbit_partition(case)),
               "weightedDynkin": list(weighted_dynkin(case, dominant_h(case))),
               "forms": [{"index": f.index, "label": f.label,
                          "h": _json_weight(f.h),
                          "existsWhen": f.exists_condition,
                          "tableau": f.tableau.ascii_rows()} for f in forms]}
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    if args.format in ("csv", "latex"):
        header = ["group", "index", "label", "h", "existsWhen"]
        rows = [[str(case), f.index, f.label, _fmt_h(case, f.h),
                 f.exists_condition] for f in forms]
        _emit_rows(args.format, header, rows)
        return 0
    dynkin = weighted_dynkin(case, dominant_h(case))
    print(f"{case}   complex orbit {_partition_str(orbit_partition(case))}   "
          f"weighted Dynkin {tuple(dynkin)}")
    for f in forms:
        print(f"  form {f.index}  [{f.label}]  h = {_fmt_h(case, f.h)}   "
              f"exists: {f.exists_condition}")
        for row in f.tableau.ascii_rows():
            print(f"      {row}")
    return 0


def _constant_report(case, form, method, term_cap, workers, seed) -> ConstantReport:
    c_closed = constant_closed_form(case, form)
    if method == "closed":
        return ConstantReport(form, None, c_closed, (), 0, 0)
    rs = build_root_system(case)
    levi = levi_data(rs, form.h)
    plk_poly = levi_k_poly(rs, levi)
    lam = default_lambda(case, form)
    if eval_dim_poly(plk_poly, lam) == 0:
        # retry with resampled shifts before giving up
        lam = lambda_candidates(case, form, count=1, seed=seed,
                                require_default=False)[-1]
    lhs, nonzero, count = alternating_sum(rs, levi, lam, "orig", term_cap,
                                          workers)
    c = lhs / eval_dim_poly(plk_poly, lam)
    if c.denominator != 1:
        raise NonIntegerQuotientError(f"{case} form {form.index}")
    return ConstantReport(form, int(c), c_closed, (lam,), count, nonzero)


def cmd_constant(args) -> int:
    case = _case_from_args(args)
    forms = real_forms(case)
    if args.form != "all":
        idx = int(args.form)
        if not 1 <= idx <= len(forms):
            raise ValueError(f"{case} has {len(forms)} forms, no form {idx}")
        forms = (forms[idx - 1],)
    reports = [_constant_report(case, f, args.method, args.term_cap,
                                args.workers, args.seed) for f in forms]
    disagree = [r for r in reports if not r.agree]
    if args.format == "json":
        doc = {"case": _case_json(case), "forms": []}
        for r in reports:
            entry = {"index": r.form.index, "label": r.form.label,
                     "h": _json_weight(r.form.h),
                     "N": _big_n(case, r.form),
                     "cClosed": r.c_closed}
            if r.c_brute is not None:
                entry["cBrute"] = r.c_brute
                entry["agree"] = r.agree
                entry["lambdaUsed"] = [_json_weight(l) for l in r.lambdas_used]
                entry["termCount"] = r.term_count
                entry["survivingTermCount"] = r.surviving_term_count
            doc["forms"].append(entry)
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 1 if disagree else 0
    header = ["group", "index", "label", "h", "cClosed"]
    if args.method != "closed":
        header += ["cBrute", "agree"]
    rows = []
    for r in reports:
        row = [str(case), r.form.index, r.form.label, _fmt_h(case, r.form.h),
               r.c_closed]
        if args.method != "closed":
            row += [r.c_brute, "yes" if r.agree else "NO"]
        rows.append(row)
    _emit_rows(args.format, header, rows)
    return 1 if disagree else 0


def _big_n(case, form) -> int:
    rs = build_root_system(case)
    return levi_data(rs, form.h).big_n


def _table_cases(args) -> list[GroupCase]:
    if args.group is not None:
        return [_case_from_args(args)]
    return [GroupCase.su(1, 1), GroupCase.so_odd(1, 1), GroupCase.sp(1),
            GroupCase.so_even(1, 1), GroupCase.so_star(1)]


def cmd_table(args) -> int:
    cases = _table_cases(args)
    if args.format == "json":
        doc = {"cases": []}
        for case in cases:
            entry = {"case": _case_json(case),
                     "orbit": _partition_str(orbit_partition(case)),
                     "forms": [{"index": f.index, "label": f.label,
                                "h": _json_weight(f.h),
                                "N": _big_n(case, f),
                                "formula": closed_form_expr(case, f),
                                "cClosed": constant_closed_form(case, f)}
                               for f in real_forms(case)]}
            doc["cases"].append(entry)
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    header = ["group", "orbit", "index", "label", "h", "formula", "constant"]
    rows = []
    latex = args.format == "latex"
    for case in cases:
        for f in real_forms(case):
            rows.append([str(case), _partition_str(orbit_partition(case)),
                         f.index, f.label,
                         (f"${_fmt_h(case, f.h)}$" if latex
                          else _fmt_h(case, f.h)),
                         (f"${closed_form_expr(case, f, latex=True)}$" if latex
                          else closed_form_expr(case, f)),
                         constant_closed_form(case, f)])
    _emit_rows(args.format, header, rows)
    return 0


def cmd_verify(args) -> int:
    report = run_all(max_rank=args.max_rank, term_cap=args.term_cap,
                     workers=args.workers, seed=args.seed,
                     inject_fault=args.inject_fault)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for c in report["criteria"]:
            status = "PASS" if c["passed"] else "FAIL"
            print(f"criterion {c['id']:>2}  {status}  {c['name']}")
            if not c["passed"]:
                print(f"    details: {c['details']}")
        print("verification " + ("PASSED" if report["passed"] else "FAILED"))
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitconst",
        description="Integer constants attached to real forms of classical "
                    "nilpotent orbits, by exact brute force and closed form.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_case_flags(p):
        p.add_argument("--group", choices=("su", "sp", "so-odd", "so-even",
                                           "so-star"))
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--n", type=int)

    def add_common(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)

    p_forms = sub.add_parser("real-forms", help="list real forms of a case")
    add_case_flags(p_forms)
    p_forms.add_argument("--format", choices=FORMATS, default="text")
    p_forms.set_defaults(func=cmd_real_forms)

    p_const = sub.add_parser("constant", help="compute constants for a case")
    add_case_flags(p_const)
    add_common(p_const)
    p_const.add_argument("--form", default="all",
                         help="1-based form index, or 'all'")
    p_const.add_argument("--method", choices=("brute", "closed", "both"),
                         default="both")
    p_const.set_defaults(func=cmd_constant)

    p_table = sub.add_parser("table", help="emit the constants table")
    add_case_flags(p_table)
    add_common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the acceptance suite")
    add_common(p_verify)
    p_verify.add_argument("--max-rank", type=int, default=None)
    p_verify.add_argument("--inject-fault", action="store_true",
                          help=argparse.SUPPRESS)  # harness self-test only
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TermCapExceeded, LambdaDegenerateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonIntegerQuotientError as exc:
        print(f"error: non-integer quotient: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
