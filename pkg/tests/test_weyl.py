import itertools
from fractions import Fraction

import numpy as np
import pytest

import charzero.weyl as W
from charzero.polynomials import IntPoly
from charzero.weyl import (
    bbw_bound_check,
    charpoly_int,
    conjugacy_probability,
    partitions,
    sum_inv_c_sq_stream,
    sum_inv_c_stream,
    torus_order_poly,
    weyl_classes,
)


def test_s3():
    t = weyl_classes("A", 2)
    assert t.num_classes == 3
    assert sorted(c.centralizer_order for c in t.classes) == [2, 3, 6]


def test_s2():
    t = weyl_classes("A", 1)
    assert t.num_classes == 2
    assert [c.centralizer_order for c in t.classes] == [2, 2]


def test_b2_against_signed_permutation_enumeration():
    t = weyl_classes("B", 2)
    assert t.num_classes == 5
    assert sorted(c.centralizer_order for c in t.classes) == [4, 4, 4, 8, 8]
    # independent oracle: the 8 signed 2x2 permutation matrices, conjugated
    # exhaustively
    mats = []
    for perm in itertools.permutations(range(2)):
        for signs in itertools.product((1, -1), repeat=2):
            m = np.zeros((2, 2), dtype=int)
            for i, j in enumerate(perm):
                m[i, j] = signs[i]
            mats.append(m)
    keys = [m.tobytes() for m in mats]
    classes = []
    assigned = set()
    for i, m in enumerate(mats):
        if keys[i] in assigned:
            continue
        orbit = set()
        for g in mats:
            conj = g @ m @ np.linalg.inv(g).astype(int)
            orbit.add(conj.tobytes())
        assigned |= orbit
        classes.append(len(orbit))
    assert sorted(classes) == sorted(c.class_size for c in t.classes)


def test_probabilities():
    assert conjugacy_probability(weyl_classes("A", 1)) == Fraction(1, 2)
    assert conjugacy_probability(weyl_classes("A", 2)) == Fraction(7, 18)
    assert conjugacy_probability(weyl_classes("B", 2)) == Fraction(7, 32)


def test_complements_match_the_gl_limits():
    assert 1 - conjugacy_probability(weyl_classes("A", 1)) == Fraction(1, 2)
    assert 1 - conjugacy_probability(weyl_classes("A", 2)) == Fraction(11, 18)


def test_torus_polys_type_a():
    t = weyl_classes("A", 2)
    assert torus_order_poly(t, "1+1+1") == IntPoly((-1, 1)) ** 3
    transposition = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=int)
    assert torus_order_poly(t, "2+1") == charpoly_int(transposition)
    t1 = weyl_classes("A", 1)
    assert torus_order_poly(t1, "2") == IntPoly((-1, 0, 1))


def test_reflection_lattice_variant():
    t = weyl_classes("A", 2, lattice="reflection")
    assert all(c.char_poly.degree == 2 for c in t.classes)
    assert torus_order_poly(t, "3") == IntPoly((1, 1, 1))  # (q^3-1)/(q-1)


def test_unknown_class_label():
    with pytest.raises(KeyError):
        torus_order_poly(weyl_classes("A", 2), "4")


@pytest.mark.parametrize("ct,rank", [("A", r) for r in range(1, 13)]
                         + [("B", r) for r in range(2, 13)]
                         + [("C", r) for r in range(2, 13)]
                         + [("D", r) for r in range(4, 13)])
def test_sum_inv_c_is_one(ct, rank):
    assert weyl_classes(ct, rank).sum_inv_c() == 1


def test_class_count_type_a_is_partition_count():
    for r in range(1, 10):
        assert weyl_classes("A", r).num_classes == sum(1 for _ in partitions(r + 1))


def test_d4_split_classes():
    t = weyl_classes("D", 4)
    assert t.num_classes == 13
    assert t.group_order == 192
    split = [c for c in t.classes if c.label.endswith(("a", "b"))]
    assert len(split) == 4  # the two split pairs [4|-] and [2+2|-]


def test_exceptional_orders():
    assert weyl_classes("G2").group_order == 12
    assert weyl_classes("F4").group_order == 1152
    assert weyl_classes("E6").group_order == 51840
    assert weyl_classes("G2").num_classes == 6
    assert weyl_classes("F4").num_classes == 25
    assert weyl_classes("E6").num_classes == 25


def test_e7_e8_rejected():
    with pytest.raises(ValueError, match="budget"):
        weyl_classes("E7")
    with pytest.raises(ValueError, match="budget"):
        weyl_classes("E8", 8)


def test_rank_constraints():
    with pytest.raises(ValueError):
        weyl_classes("B", 1)
    with pytest.raises(ValueError):
        weyl_classes("D", 3)
    with pytest.raises(ValueError):
        weyl_classes("A", 0)


def test_char_polys_monic_nonnegative_at_one():
    for ct, rank in (("A", 4), ("B", 5), ("D", 5), ("G2", None), ("F4", None)):
        t = weyl_classes(ct, rank)
        for c in t.classes:
            assert c.char_poly.is_monic()
            assert c.char_poly.degree == t.lattice_rank
            assert c.char_poly.evaluate(1) >= 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_torus_orders_evaluate_to_products(q):
    t = weyl_classes("A", 3)
    for c in t.classes:
        lam = tuple(int(x) for x in c.label.split("+"))
        expect = 1
        for p in lam:
            expect *= q**p - 1
        assert c.char_poly.evaluate(q) == expect


@pytest.mark.parametrize("ct,rank", [("A", 6), ("B", 7), ("C", 7), ("D", 7)])
def test_streaming_sums_match_tables(ct, rank):
    t = weyl_classes(ct, rank)
    assert sum_inv_c_sq_stream(ct, rank) == t.sum_inv_c_sq()
    assert sum_inv_c_stream(ct, rank) == 1


def test_coxeter_class_torus_polynomials():
    # the Coxeter class torus polynomial is the product of cyclotomic
    # polynomials at the exponents' orders: Phi_6 for G2, Phi_12 for F4,
    # Phi_12 * Phi_3 for E6
    from charzero.cyclotomic import cyclotomic_polynomial

    def polys(ct):
        return {c.char_poly for c in weyl_classes(ct).classes}

    assert cyclotomic_polynomial(6) in polys("G2")
    assert cyclotomic_polynomial(12) in polys("F4")
    assert cyclotomic_polynomial(12) * cyclotomic_polynomial(3) in polys("E6")


def test_bbw_examples():
    assert bbw_bound_check("A", 9).passes
    chk = bbw_bound_check("A", 13)
    assert chk.probability * 13**2 < 6
    d12 = bbw_bound_check("D", 12)
    assert d12.passes
    assert sum_inv_c_sq_stream("D", 12) <= W._sym_inv_pows(12, 2)


def test_bbw_preconditions():
    with pytest.raises(ValueError, match="rank"):
        bbw_bound_check("A", 8)
    with pytest.raises(ValueError, match="classical"):
        bbw_bound_check("G2", 9)
