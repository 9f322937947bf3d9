"""Acceptance checks: every verification the package promises, runnable as one suite.

Each criterion function returns a dict with at least ``name``, ``passed`` and
``details``.  ``run_all`` executes them in order and assembles a
machine-readable report; the CLI ``verify`` command serializes it.  Results of
the expensive alternating sums are memoized per (case, form, lambda, variant)
so overlapping criteria do not recompute them.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from . import constants, oracles
from .constants import (DEFAULT_TERM_CAP, TermCapExceeded, alternating_sum,
                        auto_sign_relation, constant_closed_form,
                        default_lambda, lambda_candidates, levi_data,
                        levi_k_poly, rho_n_orthogonal, sign_flip_sigma)
from .orbits import real_forms
from .rootsys import (GroupCase, build_root_system, type_b_positive_roots,
                      type_d_positive_roots)
from .weylpoly import eval_dim_poly, make_dim_poly

_sum_cache: dict = {}


def _case_key(case: GroupCase):
    return (case.family, case.p, case.q, case.n)


def cached_sum(case: GroupCase, form, lam, variant, term_cap=DEFAULT_TERM_CAP,
               workers: int = 1, use_cache: bool = True):
    """Memoized (LHS, nonzero, total) of the alternating sum."""
    key = (_case_key(case), form.index, tuple(lam), variant)
    if use_cache and key in _sum_cache:
        return _sum_cache[key]
    rs = build_root_system(case)
    levi = levi_data(rs, form.h)
    result = alternating_sum(rs, levi, lam, variant, term_cap, workers)
    if use_cache:
        _sum_cache[key] = result
    return result


def cached_constant(case: GroupCase, form, lam, variant="orig",
                    term_cap=DEFAULT_TERM_CAP, workers=1, use_cache=True) -> int:
    rs = build_root_system(case)
    levi = levi_data(rs, form.h)
    plk = eval_dim_poly(levi_k_poly(rs, levi), lam)
    if plk == 0:
        raise constants.LambdaDegenerateError(str(lam))
    lhs, _, _ = cached_sum(case, form, lam, variant, term_cap, workers, use_cache)
    c = lhs / plk
    if c.denominator != 1:
        raise constants.NonIntegerQuotientError(f"{case} form {form.index}: {c}")
    return int(c)


def acceptance_cases(max_rank: int | None = None) -> list[GroupCase]:
    """The parameter sweep of the table-reproduction criterion."""
    cases: list[GroupCase] = []
    for p in range(1, 6):
        for q in range(p, 7 - p):
            cases.append(GroupCase.su(p, q))
    cases += [GroupCase.sp(n) for n in range(1, 7)]
    for p in range(1, 4):
        for q in range(max(p - 1, 0), 5):
            cases.append(GroupCase.so_odd(p, q))
    for p in range(1, 4):
        for q in range(p, 5):
            cases.append(GroupCase.so_even(p, q))
    cases += [GroupCase.so_star(n) for n in range(1, 7)]
    if max_rank is not None:
        cases = [c for c in cases if c.rank <= max_rank]
    return cases


def _fmt_h(h) -> str:
    return "(" + ",".join(str(x) for x in h) + ")"


def table_reproduction_rows(max_rank=None, term_cap=DEFAULT_TERM_CAP,
                            workers=1, use_cache=True,
                            inject_fault=False) -> list[dict]:
    """Brute-force vs closed-form for every form of every in-range case."""
    rows = []
    first = True
    for case in acceptance_cases(max_rank):
        for form in real_forms(case):
            row = {"case": str(case), "family": case.family,
                   "params": case.params(), "index": form.index,
                   "label": form.label, "h": _fmt_h(form.h)}
            c_closed = constant_closed_form(case, form)
            row["cClosed"] = c_closed
            try:
                c_brute = cached_constant(case, form, default_lambda(case, form),
                                          "orig", term_cap, workers, use_cache)
            except TermCapExceeded as exc:
                row["skipped"] = f"term cap: needs {exc.required} subsets"
                rows.append(row)
                continue
            if inject_fault and first:
                c_brute = -c_brute if c_brute else 1
                first = False
            row["cBrute"] = c_brute
            row["agree"] = c_brute == c_closed
            rows.append(row)
    return rows


def criterion_1(max_rank=None, term_cap=DEFAULT_TERM_CAP, workers=1,
                use_cache=True, inject_fault=False) -> dict:
    rows = table_reproduction_rows(max_rank, term_cap, workers, use_cache,
                                   inject_fault)
    checked = [r for r in rows if "agree" in r]
    bad = [r for r in checked if not r["agree"]]
    skipped = [r for r in rows if "skipped" in r]
    return {"id": 1, "name": "table reproduction (brute force == closed form)",
            "passed": not bad, "details": {
                "forms": len(rows), "checked": len(checked),
                "skipped": [r["case"] + " form " + str(r["index"])
                            for r in skipped],
                "disagreements": [
                    {k: r[k] for k in ("case", "index", "cBrute", "cClosed")}
                    for r in bad]},
            "rows": rows}


def criterion_2() -> dict:
    """Closed evaluations of the two auxiliary Weyl polynomials."""
    bad = []
    for p in range(1, 9):
        poly = make_dim_poly(type_d_positive_roots(p), p)
        lam = tuple(Fraction(2 * (p - i) - 1, 2) for i in range(p))
        if eval_dim_poly(poly, lam) != 2 ** (p - 1):
            bad.append(("P1", p))
    for q in range(1, 9):
        poly = make_dim_poly(type_b_positive_roots(q), q)
        mu = tuple(Fraction(q - i) for i in range(q))
        if eval_dim_poly(poly, mu) != 2 ** q:
            bad.append(("P2", q))
    return {"id": 2, "name": "auxiliary Weyl polynomial values 2^(p-1) and 2^q",
            "passed": not bad, "details": {"failures": bad}}


def criterion_3(max_rank=None, term_cap=DEFAULT_TERM_CAP, workers=1,
                seed=0) -> dict:
    """Three distinct evaluation points give one and the same integer."""
    bad = []
    for case in acceptance_cases(max_rank):
        for form in real_forms(case):
            try:
                lams = lambda_candidates(case, form, count=3, seed=seed)
                values = {cached_constant(case, form, lam, "orig", term_cap,
                                          workers) for lam in lams}
            except TermCapExceeded:
                continue
            if len(values) != 1:
                bad.append((str(case), form.index, sorted(values)))
    return {"id": 3, "name": "lambda-independence of the brute-force constant",
            "passed": not bad, "details": {"failures": bad}}


def criterion_4(max_rank=None, term_cap=DEFAULT_TERM_CAP, workers=1) -> dict:
    """Original and rewritten sums agree; orthogonality holds throughout."""
    bad = []
    for case in acceptance_cases(max_rank):
        rs = build_root_system(case)
        for form in real_forms(case):
            levi = levi_data(rs, form.h)
            if not rho_n_orthogonal(levi):
                bad.append((str(case), form.index, "orthogonality"))
                continue
            lam = default_lambda(case, form)
            try:
                orig = cached_constant(case, form, lam, "orig", term_cap, workers)
                v2 = cached_constant(case, form, lam, "v2", term_cap, workers)
            except TermCapExceeded:
                continue
            if orig != v2:
                bad.append((str(case), form.index, (orig, v2)))
    return {"id": 4, "name": "formula equivalence and rho_n orthogonality",
            "passed": not bad, "details": {"failures": bad}}


def criterion_5(term_cap=DEFAULT_TERM_CAP, workers=1, seed=0,
                max_rank=None) -> dict:
    """The raw alternating sum vanishes identically for the third so-odd form."""
    bad = []
    for p in range(1, 4):
        for q in range(p, 5):
            case = GroupCase.so_odd(p, q)
            if max_rank is not None and case.rank > max_rank:
                continue
            form = next(f for f in real_forms(case) if f.kind == 3)
            for lam in lambda_candidates(case, form, count=3, seed=seed):
                lhs, _, _ = cached_sum(case, form, lam, "orig", term_cap, workers)
                if lhs != 0:
                    bad.append((str(case), [str(x) for x in lam], str(lhs)))
    return {"id": 5, "name": "vanishing sum for the third so-odd form",
            "passed": not bad, "details": {"failures": bad}}


def criterion_6(max_rank=None) -> dict:
    """Automorphism sign relations between paired forms."""
    bad = []

    def check(case, i1, i2, coord, expected):
        forms = real_forms(case)
        f1 = forms[i1 - 1]
        f2 = forms[i2 - 1]
        sigma = sign_flip_sigma(case.rank, coord)
        sign = auto_sign_relation(case, sigma, f1, f2)
        c1 = constant_closed_form(case, f1)
        c2 = constant_closed_form(case, f2)
        if sign != expected or sign * c1 != c2:
            bad.append((str(case), f1.index, f2.index, sign, expected, c1, c2))

    for p in range(1, 4):
        for q in range(max(p - 1, 0), 5):
            case = GroupCase.so_odd(p, q)
            if max_rank is not None and case.rank > max_rank:
                continue
            check(case, 1, 2, p - 1, -1)
    for p in range(2, 4):
        for q in range(p, 5):
            case = GroupCase.so_even(p, q)
            if max_rank is not None and case.rank > max_rank:
                continue
            check(case, 1, 2, p - 1, +1)
            if q == p:
                forms = real_forms(case)
                i3 = next(f.index for f in forms if f.kind == 3)
                i4 = next(f.index for f in forms if f.kind == 4)
                check(case, i3, i4, case.rank - 1, +1)
    return {"id": 6, "name": "automorphism sign relations between paired forms",
            "passed": not bad, "details": {"failures": bad}}


def criterion_7(max_rank=None, term_cap=DEFAULT_TERM_CAP) -> dict:
    """Survivor enumeration matches the combinatorial term characterizations."""
    bad = []
    for n in range(1, 7):
        for case in (GroupCase.sp(n), GroupCase.so_star(n)):
            if max_rank is not None and case.rank > max_rank:
                continue
            for form in real_forms(case):
                k = form.kind
                if not oracles.check_oracle_against_brute_force(case, form):
                    bad.append((str(case), form.index, "set mismatch"))
                    continue
                survivors = oracles.surviving_terms(case, form)
                r = k // 2
                s = ((n - k) // 2 if case.family == "sp" or n % 2 == 0
                     else (n - 1 - k) // 2)
                expect = (0 if case.family == "sp" and n % 2 == 0 and k % 2 == 1
                          else math.comb(r + s, r))
                if len(survivors) != expect:
                    bad.append((str(case), form.index, "count"))
                if any(abs(t.value) != 1 for t in survivors):
                    bad.append((str(case), form.index, "value not +-1"))
                if case.family == "sp":
                    pq = k * (n - k)
                    if any(len(t.a_set) * 2 != pq for t in survivors):
                        bad.append((str(case), form.index, "#A != pq/2"))
    for p in range(1, 6):
        for q in range(p, 7 - p):
            case = GroupCase.su(p, q)
            if max_rank is not None and case.rank > max_rank:
                continue
            for form in real_forms(case):
                if not oracles.check_oracle_against_brute_force(case, form):
                    bad.append((str(case), form.index, "su oracle"))
    for builder, prange in ((GroupCase.so_odd, range(1, 4)),
                            (GroupCase.so_even, range(1, 4))):
        for p in prange:
            qlo = max(p - 1, 0) if builder is GroupCase.so_odd else p
            for q in range(qlo, 5):
                case = builder(p, q)
                if max_rank is not None and case.rank > max_rank:
                    continue
                form = real_forms(case)[0]
                if not oracles.check_oracle_against_brute_force(case, form):
                    bad.append((str(case), 1, "unique survivor"))
    return {"id": 7, "name": "oracle agreement for surviving terms",
            "passed": not bad, "details": {"failures": bad}}


def criterion_8(max_rank=None) -> dict:
    """Real-form counts per family.

    so-even actually has 2 forms when p = 1 (and 3 or 4 only for p >= 2);
    the source states the counts that way in its case analysis.
    """
    bad = []
    for case in acceptance_cases(max_rank):
        count = len(real_forms(case))
        p, q, n = case.p, case.q, case.n
        if case.family == "su":
            expect = p + 1
        elif case.family == "sp":
            expect = n + 1
        elif case.family == "so-odd":
            expect = 3 if q > p - 1 else 2
        elif case.family == "so-even":
            expect = 2 if p == 1 else (4 if q == p else 3)
        else:
            expect = n // 2 + 1 if n % 2 == 0 else (n + 1) // 2
        if count != expect:
            bad.append((str(case), count, expect))
    return {"id": 8, "name": "real-form counts per family",
            "passed": not bad, "details": {"failures": bad}}


def criterion_9(max_rank=None, term_cap=DEFAULT_TERM_CAP) -> dict:
    """Byte-identical reports for 1, 4 and 8 workers."""
    blobs = []
    for workers in (1, 4, 8):
        rows = table_reproduction_rows(max_rank, term_cap, workers,
                                       use_cache=False)
        blobs.append(json.dumps({"rows": rows}, sort_keys=True,
                                separators=(",", ":")).encode())
    passed = blobs[0] == blobs[1] == blobs[2]
    return {"id": 9, "name": "deterministic reports across worker counts",
            "passed": passed,
            "details": {"bytes": len(blobs[0]), "identical": passed}}


def run_all(max_rank=None, term_cap=DEFAULT_TERM_CAP, workers=1, seed=0,
            inject_fault=False, skip_determinism=False) -> dict:
    """Run every criterion; returns the full report dict."""
    criteria = [
        criterion_1(max_rank, term_cap, workers, inject_fault=inject_fault),
        criterion_2(),
        criterion_3(max_rank, term_cap, workers, seed),
        criterion_4(max_rank, term_cap, workers),
        criterion_5(term_cap, workers, seed, max_rank),
        criterion_6(max_rank),
        criterion_7(max_rank, term_cap),
        criterion_8(max_rank),
    ]
    if not skip_determinism:
        criteria.append(criterion_9(max_rank, term_cap))
    report = {
        "config": {"maxRank": max_rank, "termCap": term_cap, "seed": seed,
                   "workers": workers},
        "criteria": [{k: v for k, v in c.items() if k != "rows"}
                     for c in criteria],
        "passed": all(c["passed"] for c in criteria),
    }
    return report
