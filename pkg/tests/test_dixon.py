from fractions import Fraction

import pytest

from gl2_reference import gl2_reference

from charzero.dixon import (
    CharacterTable,
    dixon_character_table,
    verify_orthogonality,
    zero_census,
)
from charzero.matgroup import conjugacy_classes, direct_product, gl_group


def test_s3_table(gl2_census):
    t, zc = gl2_census[2]
    assert sorted(t.degrees) == [1, 1, 2]
    assert zc.zero_entries == 1 and zc.total_entries == 9
    assert zc.ratio == Fraction(1, 9)
    # the single zero is the 2-dimensional character on the order-2 class
    row = t.values[t.degrees.index(2)]
    (zero_class,) = [k for k, v in enumerate(row) if v.is_zero()]
    assert t.class_rep_orders[zero_class] == 2


def test_gl2_f3_degree_multiset(gl2_census):
    t, _ = gl2_census[3]
    assert sorted(t.degrees) == [1, 1, 2, 2, 2, 3, 3, 4]
    assert sum(d * d for d in t.degrees) == 48


def test_gl2_generic_degree_pattern(gl2_census):
    # degrees of GL_2(F_q): 1 (x q-1), q-1 (x (q^2-q)/2), q (x q-1),
    # q+1 (x (q-1)(q-2)/2)
    for q, (t, _) in gl2_census.items():
        from collections import Counter

        got = Counter(t.degrees)
        expect = Counter()
        expect[1] = q - 1
        expect[q] += q - 1
        if (q * q - q) // 2:
            expect[q - 1] += (q * q - q) // 2
        if (q - 1) * (q - 2) // 2:
            expect[q + 1] += (q - 1) * (q - 2) // 2
        assert got == expect, q


def test_gl3_f2_is_the_simple_group_of_order_168(gl3_census):
    t, zc = gl3_census[2]
    assert t.group_order == 168
    assert sorted(t.degrees) == [1, 3, 3, 6, 7, 8]
    assert zc.zero_entries == 8 and zc.total_entries == 36


def test_tables_are_square(gl2_census, gl3_census):
    for t, _ in list(gl2_census.values()) + list(gl3_census.values()):
        assert len(t.values) == t.num_classes
        assert all(len(row) == t.num_classes for row in t.values)
        assert all(v == 1 for v in t.values[0])  # trivial character first


def test_orthogonality(gl2_census, gl3_census):
    for t, _ in list(gl2_census.values()) + list(gl3_census.values()):
        assert verify_orthogonality(t)


def test_orthogonality_mutation_detected(gl2_census):
    t, _ = gl2_census[2]
    values = [list(row) for row in t.values]
    values[1][1] = values[1][1] + 1
    mutated = CharacterTable(
        conductor=t.conductor,
        degrees=t.degrees,
        values=tuple(tuple(row) for row in values),
        class_sizes=t.class_sizes,
        class_rep_orders=t.class_rep_orders,
        group_order=t.group_order,
    )
    assert not verify_orthogonality(mutated)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_census_agrees_with_classical_parametrization(q, gl2_census):
    """Dual-route check: the Dixon census must match the table built from
    the textbook GL_2 character formulas (independent construction)."""
    ref = gl2_reference(q)
    t, zc = gl2_census[q]
    assert t.num_classes == ref.num_classes
    assert tuple(sorted(t.degrees)) == ref.degrees
    assert zc.zero_entries == ref.zero_count


def test_gl2_f3_zero_count_is_fifteen(gl2_census):
    # both routes agree on 15/64 (the closed-form 5/32 undercounts at odd q;
    # see the acceptance suite for the per-q comparison)
    _, zc = gl2_census[3]
    assert zc.zero_entries == 15
    assert gl2_reference(3).zero_count == 15


def test_gl2_f7_census_against_classical_parametrization():
    # conductor 336 stress case; both routes agree on 819 zeros of 2304
    g = gl_group(2, 7)
    t = dixon_character_table(g, conjugacy_classes(g))
    zc = zero_census(t)
    ref = gl2_reference(7)
    assert t.conductor == 336
    assert zc.zero_entries == ref.zero_count == 819
    assert tuple(sorted(t.degrees)) == ref.degrees


def test_gl3_f2_per_degree_zero_pattern(gl3_census):
    # classical table of the order-168 simple group: zeros per character are
    # 0 (trivial), 1 and 1 (the two degree-3), 2 (deg 6), 2 (deg 7), 2 (deg 8)
    t, zc = gl3_census[2]
    by_degree = sorted(zip(t.degrees, zc.per_character_zero_counts))
    assert by_degree == [(1, 0), (3, 1), (3, 1), (6, 2), (7, 2), (8, 2)]


def test_sl2_f5_is_the_binary_icosahedral_cover():
    from charzero.matgroup import sl_group

    s = sl_group(2, 5)
    t = dixon_character_table(s, conjugacy_classes(s))
    assert sorted(t.degrees) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert verify_orthogonality(t)


def test_product_census_multiplicativity():
    s3 = gl_group(2, 2)
    prod = direct_product(s3, s3)
    t = dixon_character_table(prod, conjugacy_classes(prod))
    zc = zero_census(t)
    base = zero_census(dixon_character_table(s3, conjugacy_classes(s3)))
    nonzero = 1 - zc.ratio
    assert nonzero == (1 - base.ratio) ** 2


def test_values_round_trip_through_json(gl2_census):
    t, _ = gl2_census[3]
    assert CharacterTable.from_json(t.to_json()) == t


def test_per_character_zero_counts(gl2_census):
    t, zc = gl2_census[3]
    assert sum(zc.per_character_zero_counts) == zc.zero_entries
    assert len(zc.per_character_zero_counts) == t.num_classes


def test_object_dtype_orthogonality_fallback(gl2_census, monkeypatch):
    # force the exact object-dtype path of the orthogonality contraction
    import charzero.dixon as dixon

    monkeypatch.setattr(dixon, "_INT64_GUARD", 1)
    t, _ = gl2_census[3]
    assert verify_orthogonality(t)


def test_trivial_and_abelian_groups():
    from charzero.ffield import field_make
    from charzero.matgroup import enumerate_group, mat_identity

    F = field_make(2, 1)
    trivial = enumerate_group([mat_identity(1)], F, 1)
    t = dixon_character_table(trivial, conjugacy_classes(trivial))
    assert t.degrees == (1,) and t.values[0][0] == 1

    # GL_1(F_5) is cyclic of order 4: the table is the exact DFT matrix,
    # with no zero entries (torus tables are zero-free)
    g = gl_group(1, 5)
    table = dixon_character_table(g, conjugacy_classes(g))
    assert sorted(table.degrees) == [1, 1, 1, 1]
    assert zero_census(table).zero_entries == 0
    assert verify_orthogonality(table)
