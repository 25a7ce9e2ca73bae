"""Acceptance suite: one test per criterion, each printing a PASS line.

Documented deviations (printed and asserted, never silent):
  - criterion 3: the printed five-digit value 1.10918 for the degree-22
    polynomial x^22 - x^12 - x^11 - x^10 + 1 does not match its actual
    largest root 1.09178 (independently verified to 40 digits); the other
    two printed values check out exactly.  The discrepancy is flagged per
    the stated discrepancy protocol.
  - criterion 4: the (1,2) two-case split covers the non-interacting chord
    placements; interleaved chords create a cycle through both chords and
    give p(1) = -3.  The (2,2) palindromic survivors include the boundary
    family x^{2d} - 3x^d + 1 (a1 = a2 = through = d), which has no primitive
    realization; the LT family proper accounts for every survivor with a
    primitive realization.
  - criterion 6: the computed class count is 6, not 5; recorded in
    documented-deviation mode and cross-checked against an independent
    isomorphism oracle when available.
"""

import random
import time
from fractions import Fraction

from perron.charpoly import char_poly_ct, char_poly_oracle, enumerate_linear_subdigraphs
from perron.digraph import complexity, is_primitive
from perron.errors import Inconclusive
from perron.families import build_shape_22, build_shape_nc, c4_polynomial, lt_polynomial, ring_shape_with_through
from perron.fixtures import figure1, figure4
from perron.polynomial import (
    IntPolynomial,
    PalindromeClass,
    classify_palindrome,
    eval_at_one,
    format_polynomial,
    parse_polynomial,
)
from perron.search import (
    count_realizations,
    enumerate_digraphs,
    reconstruct_figure4,
    verify_case_c_le_2,
)
from perron.spectral import ham_song_check, largest_real_root, monotonicity_witness

from conftest import random_digraph, random_primitive_digraph

TOL5 = Fraction(1, 10**5)
TOL7 = Fraction(1, 10**7)

# independent 40-digit oracle values (mpmath polyroots), truncated to 19 places
ORACLE_DEG22 = Fraction(10917762848757778722, 10**19)
ORACLE_LT_12_11 = Fraction(10837668482751699869, 10**19)
ORACLE_LT_30_29 = Fraction(10326167780285302014, 10**19)
ORACLE_C4_30 = Fraction(10662646683431264500, 10**19)


def announce(criterion, message):
    print(f"ACCEPTANCE CRITERION {criterion}: PASS - {message}")


def test_criterion_1_ct_oracle_equivalence():
    start = time.time()
    rng = random.Random(99101)
    n = 1000
    for _ in range(n):
        d = random_digraph(rng, m_max=9, mult_max=2)
        assert char_poly_ct(d) == char_poly_oracle(d)
    elapsed = time.time() - start
    assert elapsed < 60
    announce(1, f"{n} random digraphs, cycle-cover = Berkowitz exactly ({elapsed:.1f}s)")


def test_criterion_2_figure1_fixture():
    start = time.time()
    d = figure1()
    expected = parse_polynomial("x^14 - x^8 - x^7 - x^6 + 1")
    assert char_poly_ct(d) == expected
    assert char_poly_oracle(d) == expected
    census = {}
    for L in enumerate_linear_subdigraphs(d):
        census.setdefault(L.vertex_count, []).append(L)
    assert sorted(census) == [6, 7, 8, 14]
    assert all(len(v) == 1 for v in census.values())
    assert census[14][0].cycle_count == 2
    assert census[6][0].cycle_count == census[7][0].cycle_count == census[8][0].cycle_count == 1
    elapsed = time.time() - start
    assert elapsed < 1
    announce(2, f"figure1 polynomial and linear-subdigraph census verified ({elapsed:.2f}s)")


def test_criterion_3_root_values():
    start = time.time()
    flagged = []

    r = largest_real_root(parse_polynomial("x^60 - x^31 - x^30 - x^29 + 1"), TOL7)
    assert abs(r.midpoint - Fraction(103262, 10**5)) <= TOL5
    assert abs(r.midpoint - ORACLE_LT_30_29) <= TOL7

    r = largest_real_root(parse_polynomial("x^60 - 4x^45 + 5x^30 - 4x^15 + 1"), TOL7)
    assert abs(r.midpoint - Fraction(106626, 10**5)) <= TOL5
    assert abs(r.midpoint - ORACLE_C4_30) <= TOL7

    # the third printed value, 1.10918, matches neither reading of its
    # polynomial; verify the actual roots against the independent oracle and
    # flag the discrepancy (stated protocol: match five printed digits, flag
    # anything beyond 1e-5)
    r22 = largest_real_root(parse_polynomial("x^22 - x^12 - x^11 - x^10 + 1"), TOL7)
    assert abs(r22.midpoint - ORACLE_DEG22) <= TOL7
    assert r22.decimal(5) == "1.09178"
    r24 = largest_real_root(lt_polynomial(12, 11), TOL7)
    assert abs(r24.midpoint - ORACLE_LT_12_11) <= TOL7
    assert r24.decimal(5) == "1.08377"
    printed = Fraction(110918, 10**5)
    assert abs(r22.midpoint - printed) > TOL5
    assert abs(r24.midpoint - printed) > TOL5
    flagged.append(
        "printed value 1.10918 vs certified 1.09178 (degree-22 polynomial) "
        "/ 1.08377 (the (12,11) family polynomial)"
    )

    elapsed = time.time() - start
    assert elapsed < 5
    announce(
        3,
        f"two of three printed root values verified at 1e-5; flagged discrepancy: "
        f"{flagged[0]} ({elapsed:.1f}s)",
    )


def test_criterion_4_case_analysis():
    start = time.time()
    report = verify_case_c_le_2(14)  # raises CounterexampleError on any violation
    lt_survivors = {
        (s.info["d"], s.info["a"]) for s in report.survivors if s.info["lt_member"]
    }
    expected = {(d, a) for d in range(2, 8) for a in range(1, d)}
    assert lt_survivors == expected
    assert all(
        s.info["lt_member"] or not s.info["primitive_realization"] for s in report.survivors
    )
    deviations = [n for n in report.notes if "interacting chords" in n or "boundary" in n]
    elapsed = time.time() - start
    assert elapsed < 300
    announce(
        4,
        f"(1,1) all p(1)=-1; (1,2) case split -2/-1; (2,2) palindromic survivors "
        f"= LT set, zero counterexamples over {report.total} digraphs ({elapsed:.1f}s); "
        f"documented: {'; '.join(deviations)}",
    )


def test_criterion_5_two_cycle_formula_identity():
    start = time.time()
    checked = 0
    for m in range(2, 21):
        for a1 in range(1, m):
            a2 = m - a1
            for p in range(1, a1 + 1):
                for q in range(1, a2 + 1):
                    d = build_shape_22(a1, a2, p, q)
                    terms = {}
                    for e, c in ((m, 1), (m - a1, -1), (a1, -1), (m - p - q, -1), (0, 1)):
                        terms[e] = terms.get(e, 0) + c
                    assert char_poly_ct(d) == IntPolynomial.from_terms(m, terms)
                    checked += 1
    elapsed = time.time() - start
    assert elapsed < 120
    announce(5, f"two-cycle formula exact on all {checked} placements with m <= 20 ({elapsed:.1f}s)")


def test_criterion_6_realization_count():
    start = time.time()
    count = count_realizations(lt_polynomial(7, 6), 2, 2)
    note = ""
    if count != 5:
        # documented-deviation mode: cross-check with an independent
        # isomorphism oracle before accepting the computed count
        try:
            import networkx as nx
        except ImportError:
            nx = None
        if nx is not None:
            digs = []
            for a1, a2 in ((6, 8),):
                for p in range(1, 7):
                    d = build_shape_22(a1, a2, p, 7 - p)
                    g = nx.MultiDiGraph()
                    g.add_nodes_from(range(d.m))
                    for i, j, k in d.edges():
                        for _ in range(k):
                            g.add_edge(i, j)
                    digs.append(g)
            classes = []
            for g in digs:
                if not any(nx.is_isomorphic(g, h) for h in classes):
                    classes.append(g)
            assert count == len(classes)
        assert count == 6
        note = (
            "; DOCUMENTED DEVIATION: computed class count 6 differs from the "
            "figure caption's 5 (identification convention unstated); the six "
            "(p, q) splits of the through-cycle are pairwise non-isomorphic"
        )
    elapsed = time.time() - start
    announce(6, f"realization count computed exhaustively: {count} ({elapsed:.1f}s){note}")


def test_criterion_7_figure4_reconstruction():
    start = time.time()
    d = reconstruct_figure4()
    p = char_poly_ct(d)
    assert p == parse_polynomial("x^9 - 2x^8 + x^7 - 4x^5 + 4x^4 - x^2 + 2x - 1")
    assert classify_palindrome(p) is PalindromeClass.ANTIPALINDROMIC
    assert eval_at_one(p) == 0
    assert d.edge_count == 15
    assert complexity(d) == 6
    assert d == figure4()  # the persisted fixture
    elapsed = time.time() - start
    assert elapsed < 600
    announce(7, f"reconstruction search found the stored fixture ({elapsed:.1f}s)")


def test_criterion_8a_antipalindromic_implies_zero():
    anti_seen = 0
    for m, c in ((4, 1), (5, 1), (4, 2), (6, 1)):
        for d in enumerate_digraphs(m, c):
            p = char_poly_ct(d)
            if classify_palindrome(p) is PalindromeClass.ANTIPALINDROMIC:
                anti_seen += 1
                assert eval_at_one(p) == 0
    rng = random.Random(55331)
    for _ in range(300):
        p = char_poly_ct(random_digraph(rng, m_max=8))
        if classify_palindrome(p) is PalindromeClass.ANTIPALINDROMIC:
            anti_seen += 1
            assert eval_at_one(p) == 0
    announce("8a", f"antipalindromic => p(1) = 0 on every enumerated digraph ({anti_seen} hits)")


def test_criterion_8b_b1_is_minus_trace():
    rng = random.Random(77911)
    for _ in range(1000):
        d = random_digraph(rng, m_max=9)
        assert char_poly_ct(d).b(1) == -sum(d.rows[i][i] for i in range(d.m))
    announce("8b", "b_1 = -trace on 1000 random digraphs")


def test_criterion_8c_monotonicity():
    start = time.time()
    rng = random.Random(13177)
    for _ in range(200):
        d = random_primitive_digraph(rng, m_max=8)
        edge = (rng.randrange(d.m), rng.randrange(d.m))
        b1, b2 = monotonicity_witness(d, edge)
        assert b1.hi <= b2.lo  # certified: the root never decreases
    elapsed = time.time() - start
    announce("8c", f"200 certified monotonicity witnesses, no decrease ({elapsed:.1f}s)")


def test_criterion_8d_complexity_bound_on_lt_shapes():
    start = time.time()
    checked = 0
    for d_par in range(2, 16):
        for a in range(1, d_par):
            dg = build_shape_22(a, 2 * d_par - a, 1, d_par - 1)
            assert char_poly_ct(dg) == lt_polynomial(d_par, a)
            # rigorous bracket check of c <= lambda^m - 1 for every parameter
            bracket = largest_real_root(lt_polynomial(d_par, a), TOL7)
            assert Fraction(2) <= bracket.lo ** (2 * d_par) - 1
            # and the guarded operation itself on the primitive realizations
            if is_primitive(dg):
                try:
                    assert ham_song_check(dg, TOL7) is True
                except Inconclusive:  # pragma: no cover - tolerance is ample
                    raise AssertionError("unexpectedly inconclusive")
            checked += 1
    elapsed = time.time() - start
    announce("8d", f"complexity bound holds on all {checked} two-cycle family digraphs, d <= 15 ({elapsed:.1f}s)")


def test_criterion_8e_pn_sequence():
    def pn(n):
        return IntPolynomial.from_terms(
            24, {24: 1, 20: n, 19: -n, 13: -1, 12: -1, 11: -1, 5: -n, 4: n, 0: 1}
        )

    tol = Fraction(1, 10**10)
    brackets = [largest_real_root(pn(n), tol) for n in (1, 10, 100, 1000)]
    for b in brackets:
        assert b.lo > 1
    for earlier, later in zip(brackets, brackets[1:]):
        assert later.hi < earlier.lo
    values = ", ".join(b.decimal(5) for b in brackets)
    announce("8e", f"p_n roots strictly decreasing and > 1: {values}")


def test_criterion_9_c4_family():
    start = time.time()

    def partitions(total, parts, minimum):
        if parts == 1:
            if total >= minimum:
                yield (total,)
            return
        for first in range(minimum, total - minimum * (parts - 1) + 1):
            for rest in partitions(total - first, parts - 1, first):
                yield (first,) + rest

    pal_checked = 0
    for d in range(4, 13):
        for a_vec in partitions(2 * d, 4, 2):
            assert classify_palindrome(c4_polynomial(d, a_vec)) is PalindromeClass.PALINDROMIC
            pal_checked += 1
    ring_checked = 0
    for d in range(4, 9):
        for a_vec in partitions(2 * d, 4, 2):
            shape = ring_shape_with_through(a_vec, d)
            assert char_poly_ct(build_shape_nc(shape)) == c4_polynomial(d, a_vec)
            ring_checked += 1
    elapsed = time.time() - start
    announce(
        9,
        f"complexity-4 family palindromic for {pal_checked} parameter choices (d <= 12); "
        f"ring charpoly matches on {ring_checked} cases (d <= 8) ({elapsed:.1f}s)",
    )
