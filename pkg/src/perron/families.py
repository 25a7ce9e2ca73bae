"""Polynomial families, the digraph shapes realizing them, and genus upper bounds.

The two-cycle shape joins disjoint cycles of lengths a1 and a2 with one edge
each way, creating a third through-cycle; the n-cycle ring generalizes it
with one connecting edge from each cycle to the next around the ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import MultiDigraph
from .errors import ParameterRangeError
from .polynomial import IntPolynomial
from .spectral import DEFAULT_TOL, RootResult, largest_real_root


@dataclass(frozen=True)
class Shape:
    """Abstract skeleton: n disjoint cycles plus c connecting-edge attachments.

    An attachment (sc, so, tc, to) adds one edge from offset ``so`` on cycle
    ``sc`` to offset ``to`` on cycle ``tc``; offsets are reduced modulo the
    cycle lengths.
    """

    cycle_lengths: tuple[int, ...]
    attachments: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        if not self.cycle_lengths:
            raise ParameterRangeError("a shape needs at least one cycle")
        if any(l < 1 for l in self.cycle_lengths):
            raise ParameterRangeError("cycle lengths must be >= 1")
        n = len(self.cycle_lengths)
        for sc, _, tc, _ in self.attachments:
            if not (0 <= sc < n and 0 <= tc < n):
                raise ParameterRangeError("attachment cycle index out of range")

    @property
    def n(self) -> int:
        return len(self.cycle_lengths)

    @property
    def c(self) -> int:
        return len(self.attachments)

    @property
    def m(self) -> int:
        return sum(self.cycle_lengths)


@dataclass(frozen=True)
class GenusBound:
    """Upper-bound data for the minimal stretch factor on a genus-g surface."""

    g: int
    d: int
    a: int
    bound: RootResult


def lt_polynomial(d: int, a: int) -> IntPolynomial:
    """x^{2d} - x^{2d-a} - x^d - x^a + 1 for 1 <= a <= d-1; always palindromic."""
    if not (isinstance(d, int) and isinstance(a, int) and 1 <= a <= d - 1):
        raise ParameterRangeError(f"lt_polynomial needs 1 <= a <= d-1, got d={d}, a={a}")
    terms = {2 * d: 1, 0: 1}
    for e in (2 * d - a, d, a):
        terms[e] = terms.get(e, 0) - 1
    return IntPolynomial.from_terms(2 * d, terms)


def c4_polynomial(d: int, a_vec) -> IntPolynomial:
    """The complexity-4 family on four lengths a_i >= 2 with sum 2d.

    x^{2d} - sum_i (x^{2d-a_i} + x^{a_i}) + sum_{k<l} x^{a_k+a_l} - x^d + 1,
    where the pair sum runs over all six unordered pairs (the complementary
    pairs supply the mirror terms).  Always palindromic; symmetric in a_vec.
    """
    a = tuple(int(x) for x in a_vec)
    if len(a) != 4:
        raise ParameterRangeError("c4_polynomial needs exactly four lengths")
    if any(ai < 2 for ai in a):
        raise ParameterRangeError(f"each length must be >= 2, got {a}")
    if sum(a) != 2 * d:
        raise ParameterRangeError(f"lengths must sum to 2d = {2 * d}, got sum {sum(a)}")
    terms: dict[int, int] = {}

    def add(e, c):
        terms[e] = terms.get(e, 0) + c

    add(2 * d, 1)
    add(0, 1)
    add(d, -1)
    for ai in a:
        add(2 * d - ai, -1)
        add(ai, -1)
    for k in range(4):
        for l in range(k + 1, 4):
            add(a[k] + a[l], 1)
    return IntPolynomial.from_terms(2 * d, terms)


def build_shape_22(a1: int, a2: int, p: int, q: int) -> MultiDigraph:
    """Two disjoint cycles of lengths a1, a2 joined both ways.

    The through-cycle runs over p vertices of the first cycle and q of the
    second (so its length is p + q).  The characteristic polynomial is
    x^m - x^{m-a1} - x^{a1} - x^{m-p-q} + 1 with m = a1 + a2.
    """
    if a1 < 1 or a2 < 1:
        raise ParameterRangeError(f"cycle lengths must be >= 1, got ({a1}, {a2})")
    if not (1 <= p <= a1 and 1 <= q <= a2):
        raise ParameterRangeError(
            f"need 1 <= p <= a1 and 1 <= q <= a2, got p={p}, q={q} for ({a1}, {a2})"
        )
    m = a1 + a2
    grid = [[0] * m for _ in range(m)]
    for i in range(a1):
        grid[i][(i + 1) % a1] += 1
    for i in range(a2):
        grid[a1 + i][a1 + (i + 1) % a2] += 1
    # through-cycle: 0 .. p-1 on the first cycle, a1 .. a1+q-1 on the second
    grid[p - 1][a1] += 1
    grid[a1 + q - 1][0] += 1
    return MultiDigraph.from_rows(grid)


def build_shape_nc(shape: Shape) -> MultiDigraph:
    """Concrete digraph for a shape: cycle blocks plus attachment edges."""
    lengths = shape.cycle_lengths
    m = shape.m
    starts = []
    acc = 0
    for l in lengths:
        starts.append(acc)
        acc += l
    grid = [[0] * m for _ in range(m)]
    for k, l in enumerate(lengths):
        base = starts[k]
        for i in range(l):
            grid[base + i][base + (i + 1) % l] += 1
    for sc, so, tc, to in shape.attachments:
        u = starts[sc] + so % lengths[sc]
        v = starts[tc] + to % lengths[tc]
        grid[u][v] += 1
    return MultiDigraph.from_rows(grid)


def ring_shape(lengths, exits) -> Shape:
    """Ring arrangement: one edge from each cycle k (at offset exits[k]) to
    cycle k+1 mod n (at offset 0)."""
    lengths = tuple(int(l) for l in lengths)
    exits = tuple(int(x) for x in exits)
    n = len(lengths)
    if len(exits) != n:
        raise ParameterRangeError("one exit offset per cycle is required")
    attachments = tuple((k, exits[k], (k + 1) % n, 0) for k in range(n))
    return Shape(lengths, attachments)


def ring_shape_with_through(lengths, through: int) -> Shape:
    """Ring whose through-cycle visits exactly ``through`` vertices.

    The through-cycle enters each cycle at offset 0 and leaves at its exit
    offset, so it covers exits[k] + 1 vertices of cycle k; exits are chosen
    greedily.
    """
    lengths = tuple(int(l) for l in lengths)
    n = len(lengths)
    if not (n <= through <= sum(lengths)):
        raise ParameterRangeError(
            f"through-cycle length must lie in [{n}, {sum(lengths)}], got {through}"
        )
    need = through - n
    exits = []
    for l in lengths:
        take = min(l - 1, need)
        exits.append(take)
        need -= take
    assert need == 0
    return ring_shape(lengths, exits)


def hironaka_bound(g: int, tol=DEFAULT_TOL) -> GenusBound:
    """The genus upper bound: (d, a) = (g+1, g-2) when g is divisible by 3,
    else (g+1, g), with the certified root of the matching family polynomial.

    Defined for g >= 6; the two cases do not cover g = 5, which is handled
    by a known sporadic example rather than this family.
    """
    if not isinstance(g, int) or g < 6:
        raise ParameterRangeError(
            f"genus bound is defined for integers g >= 6, got {g!r} "
            "(g = 5 has no (d, a) case in this family)"
        )
    d = g + 1
    a = g - 2 if g % 3 == 0 else g
    return GenusBound(g, d, a, largest_real_root(lt_polynomial(d, a), tol))
