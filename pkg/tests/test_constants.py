from fractions import Fraction

import pytest

from orbitconst import (GroupCase, LambdaDegenerateError, OrthogonalityError,
                        TermCapExceeded, auto_sign_relation, brute_force_sum,
                        build_root_system, constant_brute_force_orig,
                        constant_brute_force_v2, constant_closed_form,
                        default_lambda, eval_dim_poly, get_form,
                        lambda_candidates, levi_data, levi_k_poly, make_dim_poly,
                        real_forms, rho_n_orthogonal, sign_flip_sigma)


def _levi(case, index):
    rs = build_root_system(case)
    return levi_data(rs, get_form(case, index).h)


def test_levi_data_sp2_k1():
    levi = _levi(GroupCase.sp(2), 2)       # h = (1, -1)
    assert levi.delta_n_plus_l == ((1, 1),)
    assert levi.delta_p1 == ()
    assert levi.big_n == 2
    assert levi.rho_n_l == (Fraction(1, 2), Fraction(1, 2))


def test_levi_data_su22_k1():
    levi = _levi(GroupCase.su(2, 2), 2)    # h = (1, -1, 1, -1)
    assert set(levi.delta_n_plus_l) == {(1, 0, -1, 0), (0, 1, 0, -1)}
    assert levi.delta_p1 == ()


def test_levi_data_so_odd_p1_form1():
    levi = _levi(GroupCase.so_odd(1, 3), 1)  # h = (2 | 0,0,0)
    assert levi.delta_n_plus_l == ()
    assert levi.delta_p1 == ()


def test_delta_p1_includes_negative_roots():
    # third so-odd form: e_{p+1} - e_i lies in Delta(p_1) with negative sign
    case = GroupCase.so_odd(2, 2)
    levi = _levi(case, 3)                  # h = (1, 0, 2, 1)
    assert (-1, 0, 1, 0) in levi.delta_p1


def test_big_n_closed_counts():
    # sp: N = C(p,2) + p q + p
    for n in range(1, 6):
        for k in range(n + 1):
            levi = _levi(GroupCase.sp(n), k + 1)
            assert levi.big_n == k * (k - 1) // 2 + k * (n - k) + k
    # so-star even: N = C(p,2) + p q
    for k in (0, 2, 4):
        levi = _levi(GroupCase.so_star(4), k // 2 + 1)
        assert levi.big_n == k * (k - 1) // 2 + k * (4 - k)


def test_big_n_parities():
    # fixed parities of N per family and form kind
    for p in range(1, 5):
        for q in range(max(p - 1, 0), 6):
            case = GroupCase.so_odd(p, q)
            for form in real_forms(case):
                n_val = _levi(case, form.index).big_n
                if form.kind == 1:
                    assert n_val % 2 == p % 2
                elif form.kind == 2:
                    assert n_val % 2 == 0
    for p in range(1, 5):
        for q in range(p, 6):
            case = GroupCase.so_even(p, q)
            for form in real_forms(case):
                n_val = _levi(case, form.index).big_n
                if form.kind == 1:
                    assert n_val % 2 == (p - 1) % 2
                elif form.kind == 2:
                    assert n_val % 2 == 0
                elif form.kind == 3:
                    assert n_val % 2 == p % 2
    for n in range(1, 8, 2):
        case = GroupCase.so_star(n)
        for form in real_forms(case):
            assert _levi(case, form.index).big_n % 2 == (form.kind // 2) % 2


def test_rho_n_orthogonality_status():
    # holds on every form the closed-form computations evaluate directly,
    # and genuinely fails for the II-variant once p >= 3
    for case in (GroupCase.so_odd(2, 3), GroupCase.so_even(2, 2),
                 GroupCase.sp(4), GroupCase.su(2, 3), GroupCase.so_star(5)):
        for form in real_forms(case):
            assert rho_n_orthogonal(levi_data(build_root_system(case), form.h))
    bad = levi_data(build_root_system(GroupCase.so_odd(3, 2)),
                    get_form(GroupCase.so_odd(3, 2), 2).h)
    assert not rho_n_orthogonal(bad)


def test_brute_force_su11():
    case = GroupCase.su(1, 1)
    assert constant_brute_force_orig(case, 1) == 1
    assert constant_brute_force_orig(case, 2) == -1


def test_brute_force_sp2():
    case = GroupCase.sp(2)
    assert constant_brute_force_orig(case, 3, lam=(2, 1)) == -1
    # parity-zero form: the lhs itself vanishes at lambda_0 = (2, 2)
    assert brute_force_sum(case, 2, lam=(2, 2), variant="v2") == 0
    assert constant_brute_force_v2(case, 2) == 0


def test_brute_force_so_odd_11_form1():
    assert constant_brute_force_v2(GroupCase.so_odd(1, 1), 1) == -1


def test_single_term_case_degenerates_to_pk_ratio():
    # whenever both pools are empty the sum has one term
    case = GroupCase.so_odd(1, 2)
    rs = build_root_system(case)
    form = get_form(case, 1)
    levi = levi_data(rs, form.h)
    assert levi.delta_n_plus_l == () and levi.delta_p1 == ()
    lam = default_lambda(case, form)
    pk = make_dim_poly(rs.compact_positive, case.rank)
    plk = eval_dim_poly(levi_k_poly(rs, levi), lam)
    expect = (-1) ** levi.big_n * eval_dim_poly(pk, lam) / plk
    assert constant_brute_force_orig(case, form) == expect


def test_default_lambda_examples():
    assert default_lambda(GroupCase.sp(3), 2) == (3, 3, 2)
    assert default_lambda(GroupCase.so_odd(1, 3), 1) == (Fraction(1, 2), 3, 2, 1)
    assert default_lambda(GroupCase.so_even(1, 3), 1) == (
        Fraction(1, 2), Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    assert default_lambda(GroupCase.so_odd(1, 0), 1) == (Fraction(1, 2),)
    assert default_lambda(GroupCase.so_star(3), 1) == (1, 2, 1)
    assert default_lambda(GroupCase.so_star(5), 2) == (5, 4, 3, 4, 3)


def test_default_lambda_never_degenerate():
    for case in (GroupCase.su(2, 4), GroupCase.sp(5), GroupCase.so_odd(3, 3),
                 GroupCase.so_even(3, 4), GroupCase.so_star(6),
                 GroupCase.so_star(5)):
        rs = build_root_system(case)
        for form in real_forms(case):
            levi = levi_data(rs, form.h)
            lam = default_lambda(case, form)
            assert len(lam) == case.rank
            assert eval_dim_poly(levi_k_poly(rs, levi), lam) != 0


def test_lambda_candidates_distinct_and_regular():
    case = GroupCase.so_even(2, 3)
    rs = build_root_system(case)
    for form in real_forms(case):
        lams = lambda_candidates(case, form, count=3, seed=5)
        assert len(set(lams)) == 3
        levi = levi_data(rs, form.h)
        plk = levi_k_poly(rs, levi)
        assert all(eval_dim_poly(plk, lam) != 0 for lam in lams)


def test_lambda_independence_small():
    for case, idx in ((GroupCase.sp(4), 3), (GroupCase.so_odd(2, 2), 1),
                      (GroupCase.su(2, 3), 2), (GroupCase.so_even(2, 2), 3)):
        values = {constant_brute_force_orig(case, idx, lam=lam)
                  for lam in lambda_candidates(case, idx, count=3, seed=9)}
        assert len(values) == 1


def test_closed_form_values():
    assert constant_closed_form(GroupCase.su(2, 3), 2) == 2
    assert constant_closed_form(GroupCase.so_star(3), 2) == -1
    assert constant_closed_form(GroupCase.so_star(4), 2) == -2
    assert constant_closed_form(GroupCase.so_odd(2, 2), 3) == 0
    # sp(10): k = 0..5 -> 1, -1, -2, 2, 1, -1
    assert [constant_closed_form(GroupCase.sp(5), i) for i in range(1, 7)] == \
        [1, -1, -2, 2, 1, -1]
    with pytest.raises(ValueError):
        constant_closed_form(GroupCase.sp(2), 4)


def test_closed_form_matches_brute_on_spread():
    for case in (GroupCase.su(2, 3), GroupCase.sp(4), GroupCase.so_odd(2, 3),
                 GroupCase.so_even(2, 3), GroupCase.so_even(2, 2),
                 GroupCase.so_star(5)):
        for form in real_forms(case):
            assert constant_brute_force_orig(case, form) == \
                constant_closed_form(case, form), (str(case), form.label)


def test_closed_form_matches_brute_at_p4():
    # rank-8 cases beyond the acceptance sweep; p = 4 exercises the closed
    # forms at the next parity point
    case = GroupCase.so_even(4, 4)
    for idx in (1, 3):
        assert constant_brute_force_orig(case, idx) == \
            constant_closed_form(case, idx) == 64
    case = GroupCase.so_odd(4, 3)
    c1 = constant_brute_force_orig(case, 1)
    c2 = constant_brute_force_orig(case, 2)
    assert c1 == constant_closed_form(case, 1) == 64
    assert c2 == constant_closed_form(case, 2) == -64
    assert auto_sign_relation(case, sign_flip_sigma(7, 3), 1, 2) == -1
    case = GroupCase.sp(8)
    assert constant_brute_force_orig(case, 5) == \
        constant_closed_form(case, 5) == 6


def test_formula_equivalence_where_orthogonal():
    for case in (GroupCase.so_odd(2, 2), GroupCase.so_even(2, 2),
                 GroupCase.sp(3), GroupCase.su(2, 2)):
        for form in real_forms(case):
            assert constant_brute_force_orig(case, form) == \
                constant_brute_force_v2(case, form)


def test_v2_requires_orthogonality():
    case = GroupCase.so_odd(3, 2)
    with pytest.raises(OrthogonalityError):
        constant_brute_force_v2(case, 2)
    # the original formula still works and the automorphism relation holds
    c1 = constant_brute_force_orig(case, 1)
    c2 = constant_brute_force_orig(case, 2)
    assert c2 == -c1 == constant_closed_form(case, 2)


def test_term_cap():
    case = GroupCase.so_odd(2, 2)
    with pytest.raises(TermCapExceeded) as info:
        constant_brute_force_orig(case, 1, term_cap=4)
    assert info.value.required > 4


def test_lambda_degenerate_error():
    case = GroupCase.sp(2)
    with pytest.raises(LambdaDegenerateError):
        constant_brute_force_orig(case, 1, lam=(1, 1))   # P_LK vanishes


def test_worker_split_is_exact():
    case = GroupCase.so_odd(2, 3)
    form = get_form(case, 1)
    lam = default_lambda(case, form)
    one = constant_brute_force_orig(case, form, lam=lam, workers=1)
    four = constant_brute_force_orig(case, form, lam=lam, workers=4)
    assert one == four == constant_closed_form(case, form)


def test_auto_sign_relation_examples():
    case = GroupCase.so_odd(2, 2)
    assert auto_sign_relation(case, sign_flip_sigma(4, 1), 1, 2) == -1
    case = GroupCase.so_even(2, 3)
    assert auto_sign_relation(case, sign_flip_sigma(5, 1), 1, 2) == 1
    case = GroupCase.so_even(2, 2)
    forms = real_forms(case)
    assert auto_sign_relation(case, sign_flip_sigma(4, 3), forms[2], forms[3]) == 1


def test_auto_sign_relation_checks_hypotheses():
    case = GroupCase.so_odd(2, 2)
    with pytest.raises(ValueError):
        # flipping a block-2 coordinate does not map h1 to h2
        auto_sign_relation(case, sign_flip_sigma(4, 2), 1, 2)
    case = GroupCase.sp(2)
    with pytest.raises(ValueError):
        # sign flips do not even preserve the su-type compact system of sp
        auto_sign_relation(case, sign_flip_sigma(2, 0), 1, 2)
