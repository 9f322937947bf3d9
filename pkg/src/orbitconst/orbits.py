"""Partition-labelled nilpotent orbits, their real forms, and signed tableaux.

Complex nilpotent orbits of the classical algebras are labelled by partitions
(Jordan block sizes) subject to a per-type multiplicity rule.  Each real form
is encoded by the neutral element ``h`` of its sl2-triple, written in the same
epsilon-coordinates as the root systems.  The per-family lists of real forms
and their canonical ordering are the ones used by the closed-form constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootsys import GroupCase


@dataclass(frozen=True)
class SignedTableau:
    """Rows of (length, starting sign); signs alternate along each row."""

    rows: tuple[tuple[int, str], ...]

    def __post_init__(self) -> None:
        lengths = [n for n, _ in self.rows]
        if any(n < 1 for n in lengths):
            raise ValueError("row lengths must be positive")
        if lengths != sorted(lengths, reverse=True):
            raise ValueError("row lengths must be non-increasing")
        if any(s not in "+-" for _, s in self.rows):
            raise ValueError("signs must be '+' or '-'")

    def ascii_rows(self) -> list[str]:
        out = []
        for length, start in self.rows:
            other = "-" if start == "+" else "+"
            out.append("".join(start if i % 2 == 0 else other
                               for i in range(length)))
        return out


@dataclass(frozen=True)
class RealForm:
    """A real form of the case's complex orbit.

    ``index`` is the 1-based position in the canonical list; ``kind`` is the
    per-family identity the closed forms are keyed on (the integer k for su
    and sp, the even integer p for so-star, the form number 1..4 for so-odd
    and so-even).  ``h`` is the neutral sl2-triple element.
    """

    index: int
    label: str
    kind: int
    h: tuple[int, ...]
    exists_condition: str
    tableau: SignedTableau


def validate_partition(lie_type: str, parts: Sequence[int], total: int) -> bool:
    """Check the per-type partition rule.

    A: any partition of n.  B and D: even parts occur with even multiplicity.
    C: odd parts occur with even multiplicity.
    """
    parts = list(parts)
    if any(d < 1 for d in parts) or list(parts) != sorted(parts, reverse=True):
        return False
    if sum(parts) != total:
        return False
    if lie_type == "A":
        return True
    bad_parity = 0 if lie_type in ("B", "D") else 1
    for d in set(parts):
        if d % 2 == bad_parity and parts.count(d) % 2 != 0:
            return False
    return True


def is_very_even(lie_type: str, parts: Sequence[int]) -> bool:
    """Type-D partitions with all parts even label two orbits, not one."""
    return lie_type == "D" and all(d % 2 == 0 for d in parts)


def orbit_partition(case: GroupCase) -> tuple[int, ...]:
    """Partition of the complex orbit whose real forms carry the constants."""
    p, q, n = case.p, case.q, case.n
    if case.family == "su":
        return tuple([2] * p + [1] * (q - p))
    if case.family == "sp":
        return tuple([2] * n)
    if case.family == "so-odd":
        return tuple([3] + [2] * (2 * p - 2) + [1] * (2 * (q - p + 1)))
    if case.family == "so-even":
        return tuple([3] + [2] * (2 * p - 2) + [1] * (2 * (q - p) + 1))
    if n % 2 == 0:
        return tuple([2] * n)
    return tuple([2] * (n - 1) + [1, 1])


def h_from_partition(lie_type: str, parts: Sequence[int]) -> tuple[int, ...]:
    """Dominant h of the complex orbit labelled by ``parts``.

    Each part d contributes the eigenvalue block d-1, d-3, ..., -(d-1); the
    values are sorted non-increasingly and the first ``rank`` entries kept
    (for type B this drops the forced middle zero).
    """
    total = sum(parts)
    if lie_type == "A":
        rank = total
    elif lie_type == "B":
        if total % 2 == 0:
            raise ValueError("type B partition must have odd size")
        rank = (total - 1) // 2
    else:
        if total % 2 != 0:
            raise ValueError(f"type {lie_type} partition must have even size")
        rank = total // 2
    if not validate_partition(lie_type, parts, total):
        raise ValueError(f"invalid type {lie_type} partition {list(parts)}")
    values: list[int] = []
    for d in parts:
        values.extend(range(d - 1, -d, -2))
    values.sort(reverse=True)
    return tuple(values[:rank])


def _simple_roots(case: GroupCase) -> list[tuple[int, ...]]:
    m = case.rank
    t = case.lie_type

    def e(i, c=1):
        v = [0] * m
        v[i] = c
        return v

    def diff(i):
        v = e(i)
        v[i + 1] = -1
        return v

    simples = [diff(i) for i in range(m - 1)]
    if t == "B" and m >= 1:
        simples.append(e(m - 1))
    elif t == "C" and m >= 1:
        simples.append(e(m - 1, 2))
    elif t == "D":
        if m >= 2:
            v = e(m - 2)
            v[m - 1] = 1
            simples.append(v)
    return simples


def weighted_dynkin(case: GroupCase, h: Sequence[int]) -> tuple[int, ...]:
    """Labels alpha_i(h) on the simple roots of the fixed positive system."""
    if len(h) != case.rank:
        raise ValueError("h has wrong length")
    labels = tuple(sum(c * x for c, x in zip(a, h)) for a in _simple_roots(case))
    if any(v < 0 for v in labels):
        raise ValueError(f"h={tuple(h)} is not dominant for {case}")
    return labels


def h_from_signed_tableau(lie_type: str, tableau: SignedTableau,
                          p: int, q: int) -> tuple[int, ...]:
    """h of the real form a B/D signed tableau encodes (dominant per block).

    Boxes of a length-d row carry eigenvalues d-1, d-3, ..., -(d-1); '+' boxes
    contribute to the first block of coordinates and '-' boxes to the second.
    """
    if lie_type not in ("B", "D"):
        raise ValueError("signed-tableau recipe applies to types B and D")
    plus: list[int] = []
    minus: list[int] = []
    for length, start in tableau.rows:
        for k in range(length):
            sign = start if k % 2 == 0 else ("-" if start == "+" else "+")
            value = length - 1 - 2 * k
            (plus if sign == "+" else minus).append(value)
    want_minus = 2 * q + 1 if lie_type == "B" else 2 * q
    if len(plus) != 2 * p or len(minus) != want_minus:
        raise ValueError(
            f"tableau signature ({len(plus)},{len(minus)}) does not match "
            f"(2p,{'2q+1' if lie_type == 'B' else '2q'}) for p={p}, q={q}")
    plus.sort(reverse=True)
    minus.sort(reverse=True)
    return tuple(plus[:p] + minus[:q])


def _pair_rows(n_plus: int, n_minus: int, length: int = 2):
    return [(length, "+")] * n_plus + [(length, "-")] * n_minus


def _tableau_su(p: int, q: int, k: int) -> SignedTableau:
    return SignedTableau(tuple(_pair_rows(k, p - k) + [(1, "-")] * (q - p)))


def _tableau_sp(n: int, k: int) -> SignedTableau:
    return SignedTableau(tuple(_pair_rows(k, n - k)))


def _tableau_so_star(n: int, p: int) -> SignedTableau:
    if n % 2 == 0:
        return SignedTableau(tuple(_pair_rows(p, n - p)))
    return SignedTableau(tuple(_pair_rows(p, n - 1 - p) + [(1, "+"), (1, "-")]))


def _tableau_bd(family: str, p: int, q: int, form: int) -> SignedTableau:
    # forms 1 and 2 share a tableau, as do forms 3 and 4; the II-variants
    # differ from their partner by the outer coordinate flip only.
    ones = 2 * (q - p + 1) if family == "so-odd" else 2 * (q - p) + 1
    if form in (1, 2):
        rows = [(3, "+")] + _pair_rows(p - 1, p - 1) + [(1, "-")] * ones
    else:
        rows = [(3, "-")] + _pair_rows(p - 1, p - 1) + [(1, "+")]
        rows += [(1, "-")] * (ones - 1)
    return SignedTableau(tuple(rows))


def real_forms(case: GroupCase) -> tuple[RealForm, ...]:
    """Real forms of the case's orbit, in canonical order."""
    p, q, n = case.p, case.q, case.n
    forms: list[RealForm] = []

    def add(label, kind, h, cond, tab):
        forms.append(RealForm(len(forms) + 1, label, kind, tuple(h), cond, tab))

    if case.family == "su":
        for k in range(p + 1):
            h = [1] * k + [-1] * (p - k) + [1] * (p - k) + [0] * (q - p) + [-1] * k
            add(f"k={k}", k, h, "always", _tableau_su(p, q, k))
    elif case.family == "sp":
        for k in range(n + 1):
            add(f"k={k}", k, [1] * k + [-1] * (n - k), "always", _tableau_sp(n, k))
    elif case.family == "so-star":
        for k in range(0, n + 1, 2):
            if n % 2 == 0:
                h = [1] * k + [-1] * (n - k)
            else:
                h = [1] * k + [0] + [-1] * (n - 1 - k)
            add(f"p={k}", k, h, "always", _tableau_so_star(n, k))
    elif case.family == "so-odd":
        h1 = [2] + [1] * (p - 1) + [1] * (p - 1) + [0] * (q - p + 1)
        add("I", 1, h1, "always", _tableau_bd("so-odd", p, q, 1))
        h2 = list(h1)
        h2[p - 1] = -h2[p - 1]  # sign flip of coordinate p (outer for the D_p factor)
        add("II", 2, h2, "always", _tableau_bd("so-odd", p, q, 2))
        if q >= p:
            h3 = [1] * (p - 1) + [0] + [2] + [1] * (p - 1) + [0] * (q - p)
            add("III", 3, h3, "q >= p", _tableau_bd("so-odd", p, q, 3))
    else:  # so-even
        h1 = [2] + [1] * (p - 1) + [1] * (p - 1) + [0] * (q - p + 1)
        add("I", 1, h1, "always", _tableau_bd("so-even", p, q, 1))
        if p >= 2:
            h2 = list(h1)
            h2[p - 1] = -h2[p - 1]
            add("II", 2, h2, "p >= 2", _tableau_bd("so-even", p, q, 2))
        h3 = [1] * (p - 1) + [0] + [2] + [1] * (p - 1) + [0] * (q - p)
        add("III", 3, h3, "always", _tableau_bd("so-even", p, q, 3))
        if q == p and p >= 2:
            h4 = list(h3)
            h4[-1] = -h4[-1]
            add("IV", 4, h4, "q == p >= 2", _tableau_bd("so-even", p, q, 4))
    return tuple(forms)


def get_form(case: GroupCase, index: int) -> RealForm:
    """Real form by 1-based canonical index."""
    forms = real_forms(case)
    if not 1 <= index <= len(forms):
        raise ValueError(
            f"{case} has {len(forms)} real forms; form {index} does not exist")
    return forms[index - 1]


def dominant_h(case: GroupCase) -> tuple[int, ...]:
    """Dominant h of the complex orbit (equals h_from_partition of it)."""
    return h_from_partition(case.lie_type, orbit_partition(case))
