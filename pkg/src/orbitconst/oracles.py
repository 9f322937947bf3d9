"""Combinatorial characterizations of the nonzero terms, as a second check.

The brute-force enumeration reports which subset pairs (A, C) contribute a
nonzero Weyl-polynomial value.  For each family there is an independent
combinatorial description of exactly those pairs: shuffle-indexed sets for
sp and so-star, a unique pair for the first and third so-odd/so-even forms,
and a shared C with a shuffle-indexed A for su.  Everything here is evaluated
at the fixed point lambda_0 in the rho_n-free (v2) convention the
characterizations use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .constants import (DEFAULT_TERM_CAP, TermCapExceeded, _prepare_enumeration,
                        _scale_for, default_lambda, levi_data, levi_k_poly)
from .orbits import RealForm, get_form
from .rootsys import GroupCase, Root, Weight, build_root_system
from .weylpoly import eval_dim_poly, make_dim_poly


@dataclass(frozen=True)
class SurvivingTerm:
    """One nonzero summand: the subsets, the shifted weight, and P_K there."""

    a_set: tuple[Root, ...]
    c_set: tuple[Root, ...]
    weight: Weight
    value: Fraction


def _e2(rank: int, i: int, ci: int, j: int, cj: int) -> Root:
    v = [0] * rank
    v[i] = ci
    v[j] = cj
    return tuple(v)


def surviving_terms(case: GroupCase, form: RealForm | int,
                    lam: Sequence | None = None, variant: str = "v2",
                    term_cap: int = DEFAULT_TERM_CAP) -> list[SurvivingTerm]:
    """All (A, C) pairs whose term is nonzero, with weights and values."""
    rs = build_root_system(case)
    form = form if isinstance(form, RealForm) else get_form(case, form)
    lam = (tuple(Fraction(x) for x in lam) if lam is not None
           else default_lambda(case, form))
    levi = levi_data(rs, form.h)
    pool = levi.delta_n_plus_l + levi.delta_p1
    n_a = len(levi.delta_n_plus_l)
    m = len(pool)
    if 1 << m > term_cap:
        raise TermCapExceeded(1 << m, term_cap)
    base, deltas, packed, pk_denominator = _prepare_enumeration(
        rs, levi, lam, variant)
    scale = _scale_for(lam)
    out = []
    for bits in range(1 << m):
        vec = list(base)
        for t in range(m):
            if (bits >> t) & 1:
                for k, d in enumerate(deltas[t]):
                    vec[k] += d
        prod = 1
        for (i, ci, j, cj) in packed:
            f = ci * vec[i] + (cj * vec[j] if j >= 0 else 0)
            if f == 0:
                prod = 0
                break
            prod *= f
        if prod == 0:
            continue
        a_set = tuple(pool[t] for t in range(n_a) if (bits >> t) & 1)
        c_set = tuple(pool[t] for t in range(n_a, m) if (bits >> t) & 1)
        weight = tuple(Fraction(v, scale) for v in vec)
        out.append(SurvivingTerm(a_set, c_set, weight,
                                 Fraction(prod) / pk_denominator))
    return out


def shuffles(r: int, s: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (r,s)-shuffles: increasing sequences partitioning 1..r+s."""
    universe = range(1, r + s + 1)
    for iseq in combinations(universe, r):
        jseq = tuple(v for v in universe if v not in iseq)
        yield iseq, jseq


def shuffle_terms_sp(n: int, k: int) -> list[tuple[frozenset[Root], tuple[int, ...]]]:
    """Predicted (A, Lambda) pairs for sp(2n, R) with form parameter k.

    Empty when n is even and k is odd (the parity-zero case).
    """
    p, q = k, n - k
    if n % 2 == 0 and p % 2 == 1:
        return []
    if p == 0 or q == 0:
        return [(frozenset(), tuple(range(n, 0, -1)))]
    r, s = p // 2, q // 2
    out = []
    for iseq, jseq in shuffles(r, s):
        a_roots = set()
        for u in range(1, r + 1):
            for v in range(1, s + 1):
                a_roots.add(_e2(n, p - u, 1, n - v, 1))
                if iseq[u - 1] < jseq[v - 1]:
                    a_roots.add(_e2(n, p - u, 1, p + v - 1, 1))
                else:
                    a_roots.add(_e2(n, u - 1, 1, n - v, 1))
        if p % 2 == 1:
            a_roots.update(_e2(n, r, 1, p + j - 1, 1) for j in range(s + 1, q + 1))
        elif q % 2 == 1:
            a_roots.update(_e2(n, i - 1, 1, p + s, 1) for i in range(r + 1, p + 1))
        lam = [0] * n
        for u in range(1, r + 1):
            lam[u - 1] = n + 1 - iseq[u - 1]
            lam[p - u] = iseq[u - 1]
        for v in range(1, s + 1):
            lam[p + v - 1] = n + 1 - jseq[v - 1]
            lam[n - v] = jseq[v - 1]
        if p % 2 == 1:
            lam[p - r - 1] = n - r - s
        if q % 2 == 1:
            lam[n - s - 1] = n - r - s
        out.append((frozenset(a_roots), tuple(lam)))
    return out


def shuffle_terms_so_star(n: int, k: int) -> list[
        tuple[frozenset[Root], frozenset[Root], tuple[int, ...]]]:
    """Predicted (A, C, Lambda) for so*(2n) with (even) form parameter k."""
    if k % 2 != 0:
        raise ValueError("so-star form parameter must be even")
    p = k
    if n % 2 == 0:
        q = n - p
        if p == 0 or q == 0:
            return [(frozenset(), frozenset(), tuple(range(n, 0, -1)))]
        r, s = p // 2, q // 2
        out = []
        for iseq, jseq in shuffles(r, s):
            a_roots = set()
            for u in range(1, r + 1):
                for v in range(1, s + 1):
                    a_roots.add(_e2(n, p - u, 1, n - v, 1))
                    if iseq[u - 1] < jseq[v - 1]:
                        a_roots.add(_e2(n, p - u, 1, p + v - 1, 1))
                    else:
                        a_roots.add(_e2(n, u - 1, 1, n - v, 1))
            lam = [0] * n
            for u in range(1, r + 1):
                lam[u - 1] = n + 1 - iseq[u - 1]
                lam[p - u] = iseq[u - 1]
            for v in range(1, s + 1):
                lam[p + v - 1] = n + 1 - jseq[v - 1]
                lam[n - v] = jseq[v - 1]
            out.append((frozenset(a_roots), frozenset(), tuple(lam)))
        return out
    q = n - 1 - p
    r, s = p // 2, q // 2
    c_roots = frozenset(
        [_e2(n, i - 1, 1, p, 1) for i in range(r + 1, p + 1)]
        + [_e2(n, p, -1, p + j, -1) for j in range(1, s + 1)])
    out = []
    for iseq, jseq in shuffles(r, s):
        a_roots = set()
        for u in range(1, r + 1):
            for v in range(1, s + 1):
                a_roots.add(_e2(n, p - u, 1, n - v, 1))
                if iseq[u - 1] < jseq[v - 1]:
                    a_roots.add(_e2(n, p - u, 1, p + v, 1))
                else:
                    a_roots.add(_e2(n, u - 1, 1, n - v, 1))
        lam = [0] * n
        lam[p] = r + s + 1
        for u in range(1, r + 1):
            lam[u - 1] = n + 1 - iseq[u - 1]
            lam[p - u] = iseq[u - 1]
        for v in range(1, s + 1):
            lam[p + v] = n + 1 - jseq[v - 1]
            lam[n - v] = jseq[v - 1]
        out.append((frozenset(a_roots), c_roots, tuple(lam)))
    return out


def su_predicted_c(p: int, q: int, k: int) -> frozenset[Root]:
    """The single C all su survivors share (empty when q = p)."""
    rank = p + q
    return frozenset(_e2(rank, i - 1, 1, j - 1, -1)
                     for i in range(1, k + 1)
                     for j in range(2 * p - k + 1, p + q - k + 1))


def predicted_unique_term(case: GroupCase, form: RealForm | int) -> list[
        tuple[frozenset[Root], frozenset[Root], Weight]]:
    """Survivor list for the so-odd/so-even forms with a full description.

    Covers so-odd forms 1 and 3 and so-even forms 1 and 3.  The third so-odd
    form has no survivors at all.
    """
    form = form if isinstance(form, RealForm) else get_form(case, form)
    p, q = case.p, case.q
    rank = case.rank
    H = Fraction(1, 2)
    lam0 = default_lambda(case, form)
    if case.family == "so-odd" and form.kind == 1:
        if p == 1 or q == p - 1:
            return [(frozenset(), frozenset(), lam0)]
        c_set = frozenset(_e2(rank, i - 1, 1, j - 1, -1)
                          for i in range(2, p + 1)
                          for j in range(2 * p, p + q + 1))
        lam = ([H] + [p - H - t for t in range(p - 1)]
               + [-1 - t for t in range(p - 1)]
               + [q - t for t in range(q - p + 1)])
        return [(frozenset(), c_set, tuple(Fraction(x) for x in lam))]
    if case.family == "so-odd" and form.kind == 3:
        return []
    if case.family == "so-even" and form.kind == 1:
        if p == 1:
            return [(frozenset(), frozenset(), lam0)]
        c_set = frozenset(_e2(rank, i - 1, 1, j - 1, -1)
                          for i in range(2, p + 1)
                          for j in range(2 * p, p + q))
        lam = ([H] + [p - H - t for t in range(p - 1)]
               + [-Fraction(3, 2) - t for t in range(p - 1)]
               + [q - H - t for t in range(q - p)] + [H])
        return [(frozenset(), c_set, tuple(Fraction(x) for x in lam))]
    if case.family == "so-even" and form.kind == 3:
        if p == 1 and q == 1:
            return [(frozenset(), frozenset(), lam0)]
        a_set = frozenset(_e2(rank, p - 1, 1, j - 1, -1)
                          for j in range(2 * p + 1, p + q + 1))
        if q == p:
            a_set = frozenset()
        c_parts = []
        if q > p:
            c_parts += [_e2(rank, i - 1, 1, j - 1, -1)
                        for i in range(1, p)
                        for j in range(2 * p + 1, p + q + 1)]
        c_parts += [_e2(rank, j - 1, 1, p - 1, s)
                    for j in range(p + 2, 2 * p + 1) for s in (1, -1)]
        c_parts += [_e2(rank, p, 1, i - 1, -1) for i in range(1, p)]
        lam = ([p - H - t for t in range(p - 1)] + [H] + [-H]
               + [-Fraction(3, 2) - t for t in range(p - 1)]
               + [q - H - t for t in range(q - p)])
        return [(frozenset(a_set), frozenset(c_parts),
                 tuple(Fraction(x) for x in lam))]
    raise ValueError(f"no term characterization for {case} form {form.index}")


def check_oracle_against_brute_force(case: GroupCase,
                                     form: RealForm | int) -> bool:
    """Whether the enumerated survivors match the combinatorial prediction."""
    form = form if isinstance(form, RealForm) else get_form(case, form)
    survivors = surviving_terms(case, form)
    found = {(frozenset(t.a_set), frozenset(t.c_set), t.weight)
             for t in survivors}
    if case.family == "sp":
        predicted = {(a, frozenset(), tuple(Fraction(x) for x in lam))
                     for a, lam in shuffle_terms_sp(case.n, form.kind)}
        return found == predicted
    if case.family == "so-star":
        predicted = {(a, c, tuple(Fraction(x) for x in lam))
                     for a, c, lam in shuffle_terms_so_star(case.n, form.kind)}
        return found == predicted
    if case.family == "su":
        p, q, k = case.p, case.q, form.kind
        if len(survivors) != math.comb(p, k):
            return False
        shared = su_predicted_c(p, q, k) if q > p else frozenset()
        return all(frozenset(t.c_set) == shared for t in survivors)
    predicted = {(a, c, lam) for a, c, lam in predicted_unique_term(case, form)}
    return found == predicted


def oracle_total_matches(case: GroupCase, form: RealForm | int,
                         c_closed: int) -> bool:
    """Predicted signed total equals c * P_{L&K}(lambda_0)."""
    rs = build_root_system(case)
    form = form if isinstance(form, RealForm) else get_form(case, form)
    levi = levi_data(rs, form.h)
    lam0 = default_lambda(case, form)
    pk = make_dim_poly(rs.compact_positive, case.rank)
    plk = eval_dim_poly(levi_k_poly(rs, levi), lam0)
    if case.family == "sp":
        terms = [(a, frozenset(), lam) for a, lam in
                 shuffle_terms_sp(case.n, form.kind)]
    elif case.family == "so-star":
        terms = [(a, c, lam) for a, c, lam in
                 shuffle_terms_so_star(case.n, form.kind)]
    else:
        terms = predicted_unique_term(case, form)
    total = Fraction(0)
    for a_set, c_set, lam in terms:
        sign = (-1) ** (len(a_set) + len(c_set))
        total += sign * eval_dim_poly(pk, tuple(Fraction(x) for x in lam))
    global_sign = (-1) ** (levi.big_n + len(levi.delta_n_plus_l))
    return global_sign * total == c_closed * plk
