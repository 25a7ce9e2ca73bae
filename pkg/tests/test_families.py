from fractions import Fraction
from math import gcd

import pytest

from perron.charpoly import char_poly_ct, char_poly_oracle
from perron.digraph import complexity, is_primitive
from perron.errors import ParameterRangeError
from perron.families import (
    Shape,
    build_shape_22,
    build_shape_nc,
    c4_polynomial,
    hironaka_bound,
    lt_polynomial,
    ring_shape,
    ring_shape_with_through,
)
from perron.polynomial import (
    IntPolynomial,
    PalindromeClass,
    classify_palindrome,
    eval_at_one,
    parse_polynomial,
)


def test_lt_examples():
    assert lt_polynomial(7, 6) == parse_polynomial("x^14 - x^8 - x^7 - x^6 + 1")
    assert lt_polynomial(2, 1) == parse_polynomial("x^4 - x^3 - x^2 - x + 1")
    # the degree-2d rule: (12, 11) lives in degree 24
    assert lt_polynomial(12, 11) == parse_polynomial("x^24 - x^13 - x^12 - x^11 + 1")
    assert lt_polynomial(30, 29) == parse_polynomial("x^60 - x^31 - x^30 - x^29 + 1")


def test_lt_range_errors():
    for d, a in ((0, 1), (3, 0), (3, 3), (5, 7), (1, 1)):
        with pytest.raises(ParameterRangeError):
            lt_polynomial(d, a)


def test_lt_always_palindromic_with_minus_one_at_one():
    for d in range(2, 13):
        for a in range(1, d):
            p = lt_polynomial(d, a)
            assert p.degree == 2 * d
            assert classify_palindrome(p) is PalindromeClass.PALINDROMIC
            assert eval_at_one(p) == -1


def test_c4_example_and_parity():
    assert c4_polynomial(30, (15, 15, 15, 15)) == parse_polynomial(
        "x^60 - 4x^45 + 5x^30 - 4x^15 + 1"
    )
    assert eval_at_one(c4_polynomial(4, (2, 2, 2, 2))) == -1


def test_c4_symmetric_in_lengths():
    assert c4_polynomial(6, (2, 3, 3, 4)) == c4_polynomial(6, (4, 3, 2, 3))


def test_c4_range_errors():
    with pytest.raises(ParameterRangeError):
        c4_polynomial(4, (2, 2, 2))
    with pytest.raises(ParameterRangeError):
        c4_polynomial(4, (1, 2, 2, 3))
    with pytest.raises(ParameterRangeError):
        c4_polynomial(5, (2, 2, 2, 2))


def test_c4_palindromic_sweep():
    def partitions(total, parts, minimum):
        if parts == 1:
            if total >= minimum:
                yield (total,)
            return
        for first in range(minimum, total - minimum * (parts - 1) + 1):
            for rest in partitions(total - first, parts - 1, first):
                yield (first,) + rest

    for d in range(4, 13):
        for a_vec in partitions(2 * d, 4, 2):
            p = c4_polynomial(d, a_vec)
            assert classify_palindrome(p) is PalindromeClass.PALINDROMIC
            assert eval_at_one(p) == -1


def test_shape22_eq5_identity_small():
    for m in range(2, 13):
        for a1 in range(1, m):
            a2 = m - a1
            for p in range(1, a1 + 1):
                for q in range(1, a2 + 1):
                    d = build_shape_22(a1, a2, p, q)
                    expected = {}
                    for e, c in ((m, 1), (m - a1, -1), (a1, -1), (m - p - q, -1), (0, 1)):
                        expected[e] = expected.get(e, 0) + c
                    assert char_poly_ct(d) == IntPolynomial.from_terms(m, expected)


def test_shape22_figure1_parameters():
    # any split with p + q = 7 on cycles of lengths 6 and 8 realizes the
    # degree-14 family polynomial
    for p in range(1, 7):
        d = build_shape_22(6, 8, p, 7 - p)
        assert char_poly_ct(d) == lt_polynomial(7, 6)


def test_shape22_palindromic_iff_balanced():
    for a1, a2, p, q in ((3, 5, 2, 2), (3, 5, 1, 2), (4, 4, 2, 2), (4, 4, 1, 2)):
        d = build_shape_22(a1, a2, p, q)
        m = a1 + a2
        is_pal = classify_palindrome(char_poly_ct(d)) is PalindromeClass.PALINDROMIC
        assert is_pal == (m % 2 == 0 and p + q == m // 2)


def test_shape22_degenerate_two_vertex():
    d = build_shape_22(1, 1, 1, 1)
    assert char_poly_ct(d) == char_poly_oracle(d) == parse_polynomial("x^2 - 2x")


def test_shape22_range_errors():
    for args in ((0, 3, 1, 1), (3, 3, 0, 1), (3, 3, 4, 1), (3, 3, 1, 4)):
        with pytest.raises(ParameterRangeError):
            build_shape_22(*args)


def test_shape_nc_single_cycle_with_chord():
    # one cycle of length m, one chord creating a sub-cycle of length a1
    for m in (5, 8):
        for a1 in range(1, m + 1):
            shape = Shape((m,), ((0, a1 - 1, 0, 0),))
            p = char_poly_ct(build_shape_nc(shape))
            expected = {}
            for e, c in ((m, 1), (m - a1, -1), (0, -1)):
                expected[e] = expected.get(e, 0) + c
            assert p == IntPolynomial.from_terms(m, expected)
            assert eval_at_one(p) == -1


def test_shape_nc_matches_shape22():
    for a1, a2, p, q in ((3, 4, 2, 3), (2, 6, 1, 4), (5, 5, 3, 2)):
        ring = ring_shape((a1, a2), (p - 1, q - 1))
        assert char_poly_ct(build_shape_nc(ring)) == char_poly_ct(build_shape_22(a1, a2, p, q))


def test_ring4_matches_c4_polynomial():
    def partitions(total, parts, minimum):
        if parts == 1:
            if total >= minimum:
                yield (total,)
            return
        for first in range(minimum, total - minimum * (parts - 1) + 1):
            for rest in partitions(total - first, parts - 1, first):
                yield (first,) + rest

    for d in range(4, 9):
        for a_vec in partitions(2 * d, 4, 2):
            shape = ring_shape_with_through(a_vec, d)
            assert char_poly_ct(build_shape_nc(shape)) == c4_polynomial(d, a_vec)


def test_ring4_through_placement_does_not_change_polynomial():
    lengths = (3, 3, 2, 4)
    d = 6
    polys = set()
    for e0 in range(3):
        for e1 in range(3):
            for e2 in range(2):
                e3 = (d - 4) - e0 - e1 - e2
                if 0 <= e3 <= 3:
                    shape = ring_shape(lengths, (e0, e1, e2, e3))
                    polys.add(char_poly_ct(build_shape_nc(shape)).coeffs)
    assert len(polys) == 1


def test_shape_built_digraphs_have_b1_minus_loops():
    shapes = [
        build_shape_22(3, 5, 2, 2),
        build_shape_22(1, 4, 1, 2),
        build_shape_nc(ring_shape((2, 3, 4), (1, 0, 2))),
        build_shape_nc(Shape((6,), ((0, 2, 0, 0), (0, 4, 0, 1)))),
    ]
    for d in shapes:
        loops = sum(d.rows[i][i] for i in range(d.m))
        assert char_poly_ct(d).b(1) == -loops
        assert complexity(d) == d.edge_count - d.m


def test_hironaka_bound_cases():
    b6 = hironaka_bound(6)
    assert (b6.d, b6.a) == (7, 4)
    b7 = hironaka_bound(7)
    assert (b7.d, b7.a) == (8, 7)
    b11 = hironaka_bound(11, Fraction(1, 10**7))
    assert (b11.d, b11.a) == (12, 11)
    assert b11.bound.decimal(5) == "1.08377"
    assert 2 * b11.g <= 2 * b11.d


def test_hironaka_bound_rejects_small_genus():
    for g in (-1, 0, 4, 5):
        with pytest.raises(ParameterRangeError):
            hironaka_bound(g)


def test_hironaka_window():
    for g in range(6, 20):
        b = hironaka_bound(g, Fraction(1, 100))
        assert 2 * g <= 2 * b.d <= 6 * g - 6


def test_lt_realizations_primitive_iff_coprime():
    for d in range(2, 8):
        for a in range(1, d):
            dg = build_shape_22(a, 2 * d - a, 1, d - 1)
            assert char_poly_ct(dg) == lt_polynomial(d, a)
            assert is_primitive(dg) == (gcd(a, d) == 1)
