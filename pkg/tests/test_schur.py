"""Schur calculus: Pieri, Littlewood-Richardson, classes, codimension."""

import pytest
from hypothesis import given, settings, strategies as st

from ampliface.rank2 import canonicalize, enumerate_face_poset_elements, \
    enumerate_rank2_positroids
from ampliface.schur import (
    SchurExpansion,
    class_of_lift,
    class_of_lift_transposed_route,
    class_of_stratum,
    codim_from_class,
    lr_product,
    minimizer_partition,
    pieri_e,
    pieri_h,
    r_reduction,
    residual_member,
    residual_member_by_class,
    transpose_partition,
)

from oracles import expansion_polynomial, poly_mul, schur_polynomial


def exp_of(d):
    return SchurExpansion(d)


def test_pieri_h_base():
    assert pieri_h(SchurExpansion.one(), 2) == exp_of({(2,): 1})


def test_pieri_e_on_single_box():
    got = pieri_e(SchurExpansion.single((1,)), 1)
    assert got == exp_of({(2,): 1, (1, 1): 1})


def test_e2_squared():
    got = pieri_e(pieri_e(SchurExpansion.one(), 2), 2)
    assert got == exp_of({(2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1})


def test_lr_base():
    assert lr_product((1,), (1,)) == exp_of({(2,): 1, (1, 1): 1})


def test_lr_agrees_with_pieri_on_rows_and_columns():
    shapes = [(), (1,), (2,), (2, 1), (3, 1), (2, 2), (3, 2, 1)]
    for lam in shapes:
        base = SchurExpansion.single(lam) if lam else SchurExpansion.one()
        for r in (1, 2, 3):
            assert lr_product(lam, (r,)) == pieri_h(base, r)
            assert lr_product(lam, (1,) * r) == pieri_e(base, r)


def test_lr_matches_monomial_oracle_small():
    parts = [(), (1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1), (1, 1, 1)]
    nvars = 6
    for lam in parts:
        for mu in parts:
            if sum(lam) + sum(mu) > 6:
                continue
            got = lr_product(lam, mu)
            lhs = poly_mul(schur_polynomial(lam, nvars),
                           schur_polynomial(mu, nvars))
            rhs = expansion_polynomial(got, nvars)
            assert lhs == rhs, (lam, mu)


def test_lr_rectangle_products_multiplicity_free():
    got = lr_product((2, 2), (2, 2))
    assert set(got.coeffs.values()) == {1}
    nvars = 6
    lhs = poly_mul(schur_polynomial((2, 2), nvars),
                   schur_polynomial((2, 2), nvars))
    assert lhs == expansion_polynomial(got, nvars)


def test_s21_squared_against_oracle():
    got = lr_product((2, 1), (2, 1))
    nvars = 6
    lhs = poly_mul(schur_polynomial((2, 1), nvars),
                   schur_polynomial((2, 1), nvars))
    assert lhs == expansion_polynomial(got, nvars)
    assert got.coeffs[(3, 2, 1)] == 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=3).map(
           lambda xs: tuple(sorted(xs, reverse=True))),
       st.lists(st.integers(1, 4), max_size=3).map(
           lambda xs: tuple(sorted(xs, reverse=True))))
def test_lr_commutes(lam, mu):
    assert lr_product(lam, mu) == lr_product(mu, lam)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 6), max_size=5).map(
    lambda xs: tuple(sorted(xs, reverse=True))))
def test_transpose_is_involution(p):
    assert transpose_partition(transpose_partition(p)) == p


def test_transpose_exchanges_pieri():
    for lam in [(), (2, 1), (3, 1, 1)]:
        base = SchurExpansion.single(lam) if lam else SchurExpansion.one()
        for r in (1, 2, 3):
            assert pieri_h(base, r).transpose() == pieri_e(
                SchurExpansion.single(transpose_partition(lam))
                if lam else SchurExpansion.one(), r)


def test_class_of_lift_examples():
    top = canonicalize(5, [], [])
    assert class_of_lift(top, 2, 5) == SchurExpansion.one()

    one_loop = canonicalize(5, [1], [])
    assert class_of_lift(one_loop, 2, 5) == SchurExpansion.single((3,))

    pair = canonicalize(5, [], [(1, 2)])
    assert class_of_lift(pair, 2, 5) == SchurExpansion.single((2,))


def test_class_of_lift_transpose_identity():
    for n, k in [(5, 2), (6, 2), (6, 3)]:
        for N in enumerate_face_poset_elements(n, k):
            assert class_of_lift(N, k, n) == class_of_lift_transposed_route(
                N, k, n)


def test_codim_examples():
    assert codim_from_class(SchurExpansion.one(), 6, 2, 2) == 0
    N = canonicalize(6, [1], [])
    cls = class_of_lift(N, 2, 6, truncate=True)
    assert cls == SchurExpansion.single((4,))
    assert codim_from_class(cls, 6, 2, 2) == 2 == N.stats(2).c


def test_codim_matches_c_small():
    for n, k in [(5, 2), (6, 2), (6, 3)]:
        for N in enumerate_face_poset_elements(n, k):
            cls = class_of_lift(N, k, n, truncate=True)
            assert codim_from_class(cls, n, k, 2) == N.stats(k).c
            lam = minimizer_partition(N, k, n)
            assert cls.coeffs.get(lam, 0) > 0
            assert r_reduction(lam, n - k - 2) == N.stats(k).c


def test_codim_requires_box_support():
    with pytest.raises(ValueError):
        codim_from_class(SchurExpansion.single((5,)), 6, 2, 2)
    with pytest.raises(ValueError):
        codim_from_class(SchurExpansion(), 6, 2, 2)


def test_class_of_stratum_examples():
    assert class_of_stratum(canonicalize(5, [], []), 5) == SchurExpansion.one()
    assert class_of_stratum(canonicalize(5, [1], []), 5) == \
        SchurExpansion.single((1, 1))
    assert class_of_stratum(canonicalize(5, [], [(1, 3)]), 5) == \
        SchurExpansion.single((2,))


def test_class_of_stratum_degree_is_codimension():
    # every support partition has size 2|L| + sum d_i = c(N), and c is
    # the same whichever k computes it
    for n in (5, 6):
        for N in enumerate_rank2_positroids(n):
            cls = class_of_stratum(N, n)
            c = 2 * len(N.loops_set()) + sum(N.d_list())
            assert cls.degree() == c
            assert N.stats(2).c == c == N.stats(3).c


def test_residual_examples():
    # too many loops: condition (a) fails
    k = 2
    N = canonicalize(6, [1, 2, 3], [])
    assert N.stats(k).c == 6 > 2 * k
    assert not residual_member(N, 6, k)

    N2 = canonicalize(6, [], [(1, 3), (4, 6)])
    assert residual_member(N2, 6, 2)
    assert residual_member_by_class(N2, 6, 2)
    assert class_of_stratum(N2, 6).truncate_box(2, 2) == \
        SchurExpansion.single((2, 2))


def test_residual_rejects_face_poset_members():
    with pytest.raises(ValueError):
        residual_member(canonicalize(6, [], []), 6, 2)


def test_residual_classifier_matches_class_oracle_small():
    for n, k in [(5, 2), (6, 2), (6, 3)]:
        for N in enumerate_rank2_positroids(n):
            if N.stats(k).e >= 0:
                continue
            assert residual_member(N, n, k) == residual_member_by_class(
                N, n, k), (N, n, k)


def test_render():
    e = lr_product((1,), (1,))
    assert e.render() == "1 * s[2] + 1 * s[1,1]"
    assert SchurExpansion().render() == "0"
    assert SchurExpansion.one().render() == "1 * s[]"
