"""Levi data of real forms and the brute-force / closed-form constants.

The constant c attached to a real form with neutral element h is defined by
the alternating sum

    (-1)^N sum_{A, C} (-1)^(#A + #C) P_K(lambda - rho_n(l) + 2 rho(A) - 2 rho(C))
        = c * P_{L&K}(lambda),

where A runs over subsets of the noncompact positive roots vanishing on h,
C over subsets of the noncompact roots taking the value 1 on h, N counts the
positive roots strictly positive on h, and rho_n(l) is HALF the sum of the
A-pool (the convention under which passing to the complement of A is an
identity).  When rho_n(l) is orthogonal to the compact roots of the Levi, the
equivalent second form drops the rho_n shift:

    (-1)^(N + #pool_A) sum_{A, C} (-1)^(#A + #C) P_K(lambda - 2 rho(A) - 2 rho(C))
        = c * P_{L&K}(lambda).

Evaluation is exact: weights are scaled to integer vectors, each subset term
is an integer product, and the single division at the end is checked to be an
exact integer.  Subsets are enumerated by a binary counter walked in Gray-code
order, patching only the product factors the toggled root touches; the range
of counter values can be split across worker processes, and the result is
bit-identical for any worker count because every partial sum is an exact
integer.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .orbits import RealForm, get_form, real_forms
from .rootsys import (GroupCase, Root, RootSystem, Weight, build_root_system,
                      half_sum, pair)
from .weylpoly import DimPoly, eval_dim_poly, make_dim_poly

DEFAULT_TERM_CAP = 1 << 24


class TermCapExceeded(Exception):
    """The combined subset count is above the configured cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} subsets, cap is {cap}")
        self.required = required
        self.cap = cap


class LambdaDegenerateError(Exception):
    """P_{L&K}(lambda) = 0, so the defining equation cannot be divided."""


class OrthogonalityError(Exception):
    """rho_n(l) is not orthogonal to the Levi's compact roots."""


class NonIntegerQuotientError(Exception):
    """The quotient LHS / P_{L&K}(lambda) is not an integer (defect signal)."""


@dataclass(frozen=True)
class LeviData:
    """Root data of the theta-stable Levi attached to h.

    ``delta_n_plus_l``: noncompact positive roots vanishing on h.
    ``delta_p1``: noncompact roots (both signs) taking the value 1 on h.
    ``delta_lk_plus``: compact positive roots vanishing on h.
    ``rho_n_l``: half the sum of ``delta_n_plus_l``.
    ``big_n``: number of positive roots strictly positive on h.
    """

    delta_n_plus_l: tuple[Root, ...]
    delta_p1: tuple[Root, ...]
    delta_lk_plus: tuple[Root, ...]
    rho_n_l: Weight
    big_n: int


@dataclass(frozen=True)
class ConstantReport:
    form: RealForm
    c_brute: int | None
    c_closed: int
    lambdas_used: tuple[Weight, ...]
    term_count: int
    surviving_term_count: int

    @property
    def agree(self) -> bool:
        return self.c_brute is None or self.c_brute == self.c_closed


def _value_on_h(root: Root, h: Sequence[int]) -> int:
    return sum(c * x for c, x in zip(root, h))


def levi_data(rs: RootSystem, h: Sequence[int]) -> LeviData:
    """Classify every root of ``rs`` against h."""
    compact = rs.compact_set()
    delta_n = tuple(a for a in rs.noncompact_positive if _value_on_h(a, h) == 0)
    delta_p1 = tuple(sorted(
        a for a in rs.all_roots()
        if a not in compact and _value_on_h(a, h) == 1))
    delta_lk = tuple(a for a in rs.compact_positive if _value_on_h(a, h) == 0)
    big_n = sum(1 for a in rs.positive if _value_on_h(a, h) > 0)
    return LeviData(delta_n, delta_p1, delta_lk,
                    half_sum(delta_n, rs.case.rank), big_n)


def rho_n_orthogonal(levi: LeviData) -> bool:
    """Whether rho_n(l) pairs to zero with every compact Levi root."""
    return all(pair(levi.rho_n_l, a) == 0 for a in levi.delta_lk_plus)


# ---------------------------------------------------------------------------
# scaled-integer enumeration core


def _pack_roots(roots: Sequence[Root]) -> tuple[tuple[int, int, int, int], ...]:
    """Compress roots (at most two nonzero entries) to (i, ci, j, cj)."""
    packed = []
    for r in roots:
        nz = [(i, c) for i, c in enumerate(r) if c]
        if len(nz) == 1:
            (i, ci), = nz
            packed.append((i, ci, -1, 0))
        else:
            (i, ci), (j, cj) = nz
            packed.append((i, ci, j, cj))
    return tuple(packed)


def _sum_range(base: Sequence[int], deltas: Sequence[Sequence[int]],
               packed: Sequence[tuple[int, int, int, int]],
               lo: int, hi: int) -> tuple[int, int]:
    """Signed sum of factor products over subset-counter values in [lo, hi).

    The subset at counter value i is gray(i) = i ^ (i >> 1); stepping the
    counter toggles exactly one pool element, so the running weight vector and
    the affected product factors are patched in place.  Returns the signed
    integer sum and the number of nonzero terms.
    """
    m = len(deltas)
    g = lo ^ (lo >> 1)
    cur = list(base)
    for t in range(m):
        if (g >> t) & 1:
            for k, d in enumerate(deltas[t]):
                cur[k] += d
    factors = []
    prod = 1
    nzero = 0
    for (i, ci, j, cj) in packed:
        v = ci * cur[i] + (cj * cur[j] if j >= 0 else 0)
        factors.append(v)
        if v == 0:
            nzero += 1
        else:
            prod *= v
    affected = []
    for t in range(m):
        dv = deltas[t]
        row = [(k, d) for k, d in
               ((k, ci * dv[i] + (cj * dv[j] if j >= 0 else 0))
                for k, (i, ci, j, cj) in enumerate(packed)) if d]
        affected.append(tuple(row))
    sign = -1 if g.bit_count() & 1 else 1
    total = 0
    nonzero_terms = 0
    if nzero == 0:
        total = prod if sign > 0 else -prod
        nonzero_terms = 1
    for idx in range(lo + 1, hi):
        t = (idx & -idx).bit_length() - 1
        bit = 1 << t
        g ^= bit
        adding = (g & bit) != 0
        sign = -sign
        for k, d in affected[t]:
            old = factors[k]
            new = old + (d if adding else -d)
            if old:
                prod //= old
            else:
                nzero -= 1
            if new:
                prod *= new
            else:
                nzero += 1
            factors[k] = new
        if nzero == 0:
            nonzero_terms += 1
            total += prod if sign > 0 else -prod
    return total, nonzero_terms


def _sum_range_star(args) -> tuple[int, int]:
    return _sum_range(*args)


def _scale_for(lam: Weight) -> int:
    return 2 * math.lcm(*(Fraction(x).denominator for x in lam), 1)


def _prepare_enumeration(rs: RootSystem, levi: LeviData, lam: Weight,
                         variant: str):
    """Scaled base vector, per-root toggle deltas and packed P_K numerator."""
    rank = rs.case.rank
    scale = _scale_for(lam)
    base = [int(scale * Fraction(x)) for x in lam]
    if variant == "orig":
        two_rho_n = [0] * rank
        for a in levi.delta_n_plus_l:
            for i, c in enumerate(a):
                two_rho_n[i] += c
        base = [b - (scale // 2) * c for b, c in zip(base, two_rho_n)]
        deltas = [tuple(scale * c for c in a) for a in levi.delta_n_plus_l]
    elif variant == "v2":
        deltas = [tuple(-scale * c for c in a) for a in levi.delta_n_plus_l]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    deltas += [tuple(-scale * c for c in a) for a in levi.delta_p1]
    packed = _pack_roots(rs.compact_positive)
    pk_denominator = Fraction(scale) ** len(packed) * math.prod(
        rs.pk_denominators, start=Fraction(1))
    return tuple(base), tuple(deltas), packed, pk_denominator


def alternating_sum(rs: RootSystem, levi: LeviData, lam: Weight,
                    variant: str = "orig", term_cap: int = DEFAULT_TERM_CAP,
                    workers: int = 1) -> tuple[Fraction, int, int]:
    """Left-hand side of the defining equation at ``lam``.

    Returns (LHS value, number of nonzero terms, total term count).
    """
    if variant == "v2" and not rho_n_orthogonal(levi):
        raise OrthogonalityError(
            "rho_n(l) is not orthogonal to the compact Levi roots")
    m = len(levi.delta_n_plus_l) + len(levi.delta_p1)
    count = 1 << m
    if count > term_cap:
        raise TermCapExceeded(count, term_cap)
    base, deltas, packed, pk_denominator = _prepare_enumeration(
        rs, levi, lam, variant)
    if workers > 1 and count >= 1 << 12:
        bounds = [count * w // workers for w in range(workers + 1)]
        chunks = [(base, deltas, packed, lo, hi)
                  for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
        with ProcessPoolExecutor(max_workers=min(workers, len(chunks))) as pool:
            parts = list(pool.map(_sum_range_star, chunks))
        total = sum(t for t, _ in parts)
        nonzero = sum(nz for _, nz in parts)
    else:
        total, nonzero = _sum_range(base, deltas, packed, 0, count)
    exponent = levi.big_n
    if variant == "v2":
        exponent += len(levi.delta_n_plus_l)
    signed = total if exponent % 2 == 0 else -total
    return Fraction(signed) / pk_denominator, nonzero, count


def levi_k_poly(rs: RootSystem, levi: LeviData) -> DimPoly:
    """Weyl dimension polynomial of the compact part of the Levi."""
    return make_dim_poly(levi.delta_lk_plus, rs.case.rank)


def _as_weight(lam: Sequence) -> Weight:
    return tuple(Fraction(x) for x in lam)


def _constant(case: GroupCase, form: RealForm | int, lam: Sequence | None,
              variant: str, term_cap: int, workers: int) -> int:
    rs = build_root_system(case)
    form = form if isinstance(form, RealForm) else get_form(case, form)
    lam = _as_weight(lam) if lam is not None else default_lambda(case, form)
    levi = levi_data(rs, form.h)
    plk = eval_dim_poly(levi_k_poly(rs, levi), lam)
    if plk == 0:
        raise LambdaDegenerateError(f"P_LK vanishes at lambda={lam}")
    lhs, _, _ = alternating_sum(rs, levi, lam, variant, term_cap, workers)
    c = lhs / plk
    if c.denominator != 1:
        raise NonIntegerQuotientError(
            f"LHS / P_LK = {c} is not an integer for {case} form {form.index}")
    return int(c)


def constant_brute_force_orig(case: GroupCase, form: RealForm | int,
                              lam: Sequence | None = None,
                              term_cap: int = DEFAULT_TERM_CAP,
                              workers: int = 1) -> int:
    """c from the defining alternating sum, original form."""
    return _constant(case, form, lam, "orig", term_cap, workers)


def constant_brute_force_v2(case: GroupCase, form: RealForm | int,
                            lam: Sequence | None = None,
                            term_cap: int = DEFAULT_TERM_CAP,
                            workers: int = 1) -> int:
    """c from the rewritten sum (requires rho_n(l) orthogonality)."""
    return _constant(case, form, lam, "v2", term_cap, workers)


def brute_force_sum(case: GroupCase, form: RealForm | int,
                    lam: Sequence | None = None, variant: str = "orig",
                    term_cap: int = DEFAULT_TERM_CAP,
                    workers: int = 1) -> Fraction:
    """Raw LHS of the defining equation (not divided by P_{L&K})."""
    rs = build_root_system(case)
    form = form if isinstance(form, RealForm) else get_form(case, form)
    lam = _as_weight(lam) if lam is not None else default_lambda(case, form)
    levi = levi_data(rs, form.h)
    lhs, _, _ = alternating_sum(rs, levi, lam, variant, term_cap, workers)
    return lhs


# ---------------------------------------------------------------------------
# evaluation points


def _flip(vec: Sequence[Fraction], idx: int) -> Weight:
    out = list(vec)
    out[idx] = -out[idx]
    return tuple(out)


def default_lambda(case: GroupCase, form: RealForm | int) -> Weight:
    """The fixed evaluation point lambda_0 of the family and form.

    The II-variant forms (so-odd form 2, so-even forms 2 and 4) take the
    coordinate-flipped lambda_0 of their partner form, matching the
    automorphism that relates the two Levis.
    """
    form = form if isinstance(form, RealForm) else get_form(case, form)
    p, q, n = case.p, case.q, case.n
    H = Fraction(1, 2)
    if case.family == "su":
        k = form.kind
        left = [q - i for i in range(k)] + [p - i for i in range(p - k)]
        right = ([p - k - i for i in range(p - k)]
                 + [q - k - i for i in range(q - p)]
                 + [k - i for i in range(k)])
        return _as_weight(left + right)
    if case.family == "sp":
        k = form.kind
        return _as_weight([n - i for i in range(k)] + [n - i for i in range(n - k)])
    if case.family == "so-star":
        k = form.kind
        if n % 2 == 0:
            return _as_weight([n - i for i in range(k)]
                              + [n - i for i in range(n - k)])
        qq = n - 1 - k
        if k == 0 and qq == 0:
            return _as_weight([1])
        if k == 0:
            return _as_weight([1] + [n - 1 - i for i in range(qq)])
        if qq == 0:
            return _as_weight([n - i for i in range(k)] + [k + 1])
        return _as_weight([n - i for i in range(k)] + [k + 1]
                          + [n - 1 - i for i in range(qq)])
    if case.family == "so-odd":
        if form.kind == 2:
            return _flip(default_lambda(case, get_form(case, 1)), p - 1)
        if form.kind == 1:
            if p == 1 and q == 0:
                return (H,)
            if p == 1:
                return _as_weight([H] + [q - i for i in range(q)])
            if q == p - 1:
                return _as_weight([H] + [p - H - i for i in range(p - 1)]
                                  + [-1 - i for i in range(p - 1)])
            return _as_weight([H] + [q + H - i for i in range(p - 1)]
                              + [-1 - i for i in range(p - 1)]
                              + [q - p + 1 - i for i in range(q - p + 1)])
        # third real form, q >= p >= 1
        return _as_weight([q - 1 - H - i for i in range(p - 1)] + [q - p + H]
                          + [p - 1] + [-i for i in range(p - 1)]
                          + [q - p - i for i in range(q - p)])
    # so-even
    if form.kind == 2:
        return _flip(default_lambda(case, get_form(case, 1)), p - 1)
    if form.kind == 4:
        forms = real_forms(case)
        third = next(f for f in forms if f.kind == 3)
        return _flip(default_lambda(case, third), case.rank - 1)
    if form.kind == 1:
        if p == 1:
            return _as_weight([H] + [q - H - i for i in range(q)])
        return _as_weight([H] + [q - H - i for i in range(p - 1)]
                          + [-1 - H - i for i in range(p - 1)]
                          + [q - p + H - i for i in range(q - p + 1)])
    return _as_weight([q - 1 - H - i for i in range(p - 1)] + [q - p + H]
                      + [p - 1 - H] + [H - i for i in range(p - 1)]
                      + [q - p - H - i for i in range(q - p)])


def lambda_candidates(case: GroupCase, form: RealForm | int, count: int = 3,
                      seed: int = 0, require_default: bool = True) -> list[Weight]:
    """lambda_0 plus pseudo-random regular shifts with P_{L&K} nonzero.

    Shifts are nonnegative integer combinations of the partial-sum weights
    (1,..,1,0,..,0); candidates with P_{L&K}(lambda) = 0 are rejected.  With
    ``require_default`` off, a degenerate lambda_0 is dropped instead of being
    an error (the resampling path of the CLI).
    """
    rs = build_root_system(case)
    form = form if isinstance(form, RealForm) else get_form(case, form)
    levi = levi_data(rs, form.h)
    plk = levi_k_poly(rs, levi)
    lam0 = default_lambda(case, form)
    chosen = []
    if eval_dim_poly(plk, lam0) != 0:
        chosen.append(lam0)
    elif require_default:
        raise LambdaDegenerateError(f"lambda_0 is degenerate for {case}")
    rng = random.Random(seed)
    rank = case.rank
    attempts = 0
    while len(chosen) < count:
        attempts += 1
        if attempts > 500:
            raise LambdaDegenerateError(
                f"could not find {count} non-degenerate lambdas for {case}")
        shift = [0] * rank
        for i in range(rank):
            m = rng.randint(0, 3)
            for j in range(i + 1):
                shift[j] += m
        lam = tuple(x + s for x, s in zip(lam0, shift))
        if lam in chosen:
            continue
        if eval_dim_poly(plk, lam) != 0:
            chosen.append(lam)
    return chosen


# ---------------------------------------------------------------------------
# closed forms


def constant_closed_form(case: GroupCase, form: RealForm | int) -> int:
    """Exact closed-form value of the constant for this real form."""
    form = form if isinstance(form, RealForm) else get_form(case, form)
    p, q, n = case.p, case.q, case.n
    k = form.kind
    if case.family == "su":
        return (-1) ** (k * (p + q - k)) * math.comb(p, k)
    if case.family == "sp":
        if n % 2 == 0 and k % 2 == 1:
            return 0
        r, s = k // 2, (n - k) // 2
        return (-1) ** ((k + 1) // 2) * math.comb(r + s, r)
    if case.family == "so-star":
        r = k // 2
        s = (n - k) // 2 if n % 2 == 0 else (n - 1 - k) // 2
        return (-1) ** (k // 2) * math.comb(r + s, r)
    if case.family == "so-odd":
        if k == 1:
            return (-1) ** ((p + 1) // 2) * 2 ** (2 * p - 2)
        if k == 2:
            return -((-1) ** ((p + 1) // 2)) * 2 ** (2 * p - 2)
        return 0
    # so-even
    if k in (1, 2):
        return (-1) ** (p // 2) * 2 ** (2 * p - 2)
    power = 2 * p - 1 if (k == 3 and q > p) else 2 * p - 2
    return (-1) ** ((p + 1) // 2) * 2 ** power


def closed_form_expr(case: GroupCase, form: RealForm | int,
                     latex: bool = False) -> str:
    """Human-readable instantiated closed form, for table output."""
    form = form if isinstance(form, RealForm) else get_form(case, form)
    p, q, n = case.p, case.q, case.n
    k = form.kind

    def binom(a, b):
        return rf"\binom{{{a}}}{{{b}}}" if latex else f"C({a},{b})"

    def sgn(e):
        return rf"(-1)^{{{e}}}" if latex else f"(-1)^{e}"

    def pw(e):
        return rf"2^{{{e}}}" if latex else f"2^{e}"

    times = r" \cdot " if latex else "*"
    if case.family == "su":
        return f"{sgn(k * (p + q - k))}{times}{binom(p, k)}"
    if case.family == "sp":
        if n % 2 == 0 and k % 2 == 1:
            return "0"
        r, s = k // 2, (n - k) // 2
        return f"{sgn((k + 1) // 2)}{times}{binom(r + s, r)}"
    if case.family == "so-star":
        r = k // 2
        s = (n - k) // 2 if n % 2 == 0 else (n - 1 - k) // 2
        return f"{sgn(k // 2)}{times}{binom(r + s, r)}"
    if case.family == "so-odd":
        if k == 1:
            return f"{sgn((p + 1) // 2)}{times}{pw(2 * p - 2)}"
        if k == 2:
            return f"{sgn((p + 1) // 2 + 1)}{times}{pw(2 * p - 2)}"
        return "0"
    if k in (1, 2):
        return f"{sgn(p // 2)}{times}{pw(2 * p - 2)}"
    power = 2 * p - 1 if (k == 3 and q > p) else 2 * p - 2
    return f"{sgn((p + 1) // 2)}{times}{pw(power)}"


# ---------------------------------------------------------------------------
# automorphism sign relation


@dataclass(frozen=True)
class SignedPermutation:
    """Signed coordinate permutation: e_j maps to signs[j] * e_perm[j].

    The same formula gives the action on epsilon-coordinate roots and
    weights (signed permutations are orthogonal).
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def apply(self, vec: Sequence) -> tuple:
        out = [0] * len(self.perm)
        for j, x in enumerate(vec):
            out[self.perm[j]] = self.signs[j] * x
        return tuple(out)


def sign_flip_sigma(rank: int, coord: int) -> SignedPermutation:
    """The automorphism flipping the sign of one coordinate (0-based)."""
    signs = [1] * rank
    signs[coord] = -1
    return SignedPermutation(tuple(range(rank)), tuple(signs))


def auto_sign_relation(case: GroupCase, sigma: SignedPermutation,
                       form1: RealForm | int, form2: RealForm | int) -> int:
    """Sign s with c(form2) = s * c(form1) for an automorphism sigma.

    sigma must permute the roots, respect the compact/noncompact split,
    preserve the compact positive system, and carry h1 to h2.
    """
    rs = build_root_system(case)
    form1 = form1 if isinstance(form1, RealForm) else get_form(case, form1)
    form2 = form2 if isinstance(form2, RealForm) else get_form(case, form2)
    roots = set(rs.all_roots())
    compact = rs.compact_set()
    images = {r: sigma.apply(r) for r in roots}
    if any(img not in roots for img in images.values()):
        raise ValueError("sigma does not preserve the root system")
    if any((r in compact) != (img in compact) for r, img in images.items()):
        raise ValueError("sigma does not commute with the Cartan involution")
    if set(map(sigma.apply, rs.compact_positive)) != set(rs.compact_positive):
        raise ValueError("sigma does not preserve the compact positive system")
    if sigma.apply(form1.h) != form2.h:
        raise ValueError("sigma does not map h1 to h2")
    levi1 = levi_data(rs, form1.h)
    levi2 = levi_data(rs, form2.h)
    positive = set(rs.positive)
    flipped = sum(1 for a in levi1.delta_n_plus_l
                  if sigma.apply(a) not in positive)
    return (-1) ** (flipped + levi1.big_n + levi2.big_n)
