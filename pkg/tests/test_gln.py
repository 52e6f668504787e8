from fractions import Fraction
from math import factorial

import pytest

import charzero.gln as G
from charzero.gln import (
    GLDescriptor,
    class_count_poly,
    general_position_count,
    gln_zero_ratio_formula,
    gln_zero_ratio_ratfunc,
    regular_ss_class_count,
    torus_inventory,
)
from charzero.matgroup import conjugacy_classes, gl_group
from charzero.polynomials import IntPoly, fit_integer_poly, limit_at_infinity
from charzero.weyl import partitions


def test_class_count_polys_against_enumeration():
    assert class_count_poly(1) == IntPoly((-1, 1))
    assert class_count_poly(2) == IntPoly((-1, 0, 1))
    assert class_count_poly(3) == IntPoly((0, -1, 0, 1))
    for n, q in ((2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)):
        brute = conjugacy_classes(gl_group(n, q)).num_classes
        assert class_count_poly(n).evaluate(q) == brute, (n, q)


def test_descriptor():
    d = GLDescriptor.make(3, 4)
    assert d.rank == d.semisimple_rank + 1
    assert d.center_order == 3
    assert d.positive_root_count == 3
    with pytest.raises(ValueError, match="prime power"):
        GLDescriptor.make(2, 6)


def test_torus_inventory_n2_q3():
    inv = {r.partition: r for r in torus_inventory(2, 3)}
    split = inv[(1, 1)]
    assert split.torus_order == 4 and split.regular_count == 2
    assert split.regular_class_count == 1
    elliptic = inv[(2,)]
    assert elliptic.torus_order == 8 and elliptic.regular_count == 6
    assert elliptic.regular_class_count == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_split_torus_regular_count_formula(q):
    inv = {r.partition: r for r in torus_inventory(2, q)}
    assert inv[(1, 1)].regular_count == (q - 1) * (q - 2)


def test_regular_ss_class_counts_with_cross_check():
    assert regular_ss_class_count(2, 3, cross_check=True) == 4
    assert regular_ss_class_count(2, 2, cross_check=True) == 1
    assert regular_ss_class_count(3, 2, cross_check=True) == 3


@pytest.mark.parametrize("n,q", [(2, 4), (2, 5), (3, 3), (3, 4)])
def test_rss_cross_check_sweep(n, q):
    regular_ss_class_count(n, q, cross_check=True)


@pytest.mark.slow
def test_rss_cross_check_gl3_f5():
    # 1.49M-element enumeration; the largest instance the default cap covers
    assert regular_ss_class_count(3, 5, cross_check=True) == 84


def test_torus_order_polys_monic():
    for rec in torus_inventory(3, 3):
        assert rec.torus_order_poly.is_monic()
        assert rec.torus_order_poly.degree == 3


def test_f_lambda_fits_monic_degree_n():
    for n in (2, 3):
        for lam in partitions(n):
            samples = [
                (q, G._regular_element_count(lam, q, 10**6)) for q in (2, 3, 4, 5, 7)
            ]
            fit = fit_integer_poly(samples, n)
            assert fit.monic_of_degree, (lam, fit.poly)


def test_class_sizes_partition_sn():
    for n in (2, 3, 4, 5):
        total = sum(
            factorial(n) // rec
            for rec in (G.cycle_centralizer_order(lam) for lam in partitions(n))
        )
        assert total == factorial(n)


def test_general_position_examples():
    assert general_position_count((1, 1), 5) == 6
    assert general_position_count((2,), 3) == 3
    assert general_position_count((1, 1), 2) == 0


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_general_position_equals_regular_class_count(n, q):
    # the equality is asserted inside general_position_count; this sweep is
    # the per-partition duality check
    for lam in partitions(n):
        orbits = general_position_count(lam, q)
        rec = next(r for r in torus_inventory(n, q) if r.partition == lam)
        assert orbits == rec.regular_class_count
        assert rec.dual_regular_count == rec.regular_count


def test_budget_guard():
    with pytest.raises(ValueError, match="cap"):
        torus_inventory(6, 16, cap=10**4)


def test_formula_values():
    assert gln_zero_ratio_formula(2, 2) == Fraction(1, 9)
    assert gln_zero_ratio_formula(2, 3) == Fraction(5, 32)
    assert gln_zero_ratio_formula(3, 3) == Fraction(810, 2592) == Fraction(5, 16)
    with pytest.raises(ValueError):
        gln_zero_ratio_formula(4, 2)


def test_formula_limits():
    assert limit_at_infinity(gln_zero_ratio_ratfunc(2)) == Fraction(1, 2)
    assert limit_at_infinity(gln_zero_ratio_ratfunc(3)) == Fraction(11, 18)
