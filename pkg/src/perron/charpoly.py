"""Characteristic polynomials of digraphs.

Two independent routes: signed enumeration of vertex-disjoint cycle unions
(linear subdigraphs), and a division-free Berkowitz elimination on the
multiplicity matrix.  They must agree bit-exactly on the shared domain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Cycle, MultiDigraph, _weighted_cycles
from .errors import ParameterRangeError, ResourceLimitError
from .polynomial import IntPolynomial

CT_MAX_VERTICES = 64
ORACLE_MAX_VERTICES = 200
SUBDIGRAPH_CAP_DEFAULT = 10_000_000


@dataclass(frozen=True)
class LinearSubdigraph:
    """A set of pairwise vertex-disjoint elementary cycles.

    ``weight`` is the product of edge multiplicities over all member cycles;
    it is 1 throughout for (0,1)-matrices.
    """

    cycles: tuple[Cycle, ...]
    weight: int

    @property
    def vertex_count(self) -> int:
        return sum(c.length for c in self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


def _coeffs_from_rows(rows, cap: int) -> list[int]:
    """Descending charpoly coefficients for a raw multiplicity grid.

    b_i sums (-1)^(number of cycles) times the multiplicity product over all
    i-vertex disjoint cycle unions; unions are built in increasing order of
    their cycles' anchor (minimal) vertices so each one is seen exactly once.
    """
    m = len(rows)
    cycles = _weighted_cycles(rows, cap)
    by_anchor: list[list[tuple[int, int, int]]] = [[] for _ in range(m)]
    for mask, anchor, verts, weight in cycles:
        by_anchor[anchor].append((mask, len(verts), weight))

    b = [0] * (m + 1)
    b[0] = 1
    count = 0

    def extend(next_anchor, mask, ncyc, nvert, wprod):
        nonlocal count
        for a in range(next_anchor, m):
            if (mask >> a) & 1:
                continue
            for cmask, clen, w in by_anchor[a]:
                if cmask & mask:
                    continue
                count += 1
                if count > cap:
                    raise ResourceLimitError(
                        f"linear subdigraph enumeration exceeds cap {cap}", estimate=count
                    )
                n2 = ncyc + 1
                v2 = nvert + clen
                w2 = wprod * w
                b[v2] += w2 if n2 % 2 == 0 else -w2
                extend(a + 1, mask | cmask, n2, v2, w2)

    extend(0, 0, 0, 0, 1)
    return b


def char_poly_ct(
    d: MultiDigraph, cap: int = SUBDIGRAPH_CAP_DEFAULT, max_m: int = CT_MAX_VERTICES
) -> IntPolynomial:
    """Characteristic polynomial via the signed linear-subdigraph census."""
    if d.m > max_m:
        raise ParameterRangeError(f"char_poly_ct supports at most {max_m} vertices, got {d.m}")
    return IntPolynomial(tuple(_coeffs_from_rows(d.rows, cap)))


def enumerate_linear_subdigraphs(
    d: MultiDigraph, i: int | None = None, cap: int = SUBDIGRAPH_CAP_DEFAULT
) -> list[LinearSubdigraph]:
    """All linear subdigraphs, one entry per distinct set of cycles.

    With ``i`` given, only those covering exactly i vertices are returned.
    """
    if d.m > CT_MAX_VERTICES:
        raise ParameterRangeError(f"supports at most {CT_MAX_VERTICES} vertices, got {d.m}")
    m = d.m
    by_anchor: list[list[tuple[int, tuple[int, ...], int]]] = [[] for _ in range(m)]
    for mask, anchor, verts, weight in _weighted_cycles(d.rows, cap):
        by_anchor[anchor].append((mask, verts, weight))

    out: list[LinearSubdigraph] = []
    count = 0

    def extend(next_anchor, mask, chosen, nvert, wprod):
        nonlocal count
        for a in range(next_anchor, m):
            if (mask >> a) & 1:
                continue
            for cmask, verts, w in by_anchor[a]:
                if cmask & mask:
                    continue
                count += 1
                if count > cap:
                    raise ResourceLimitError(
                        f"linear subdigraph enumeration exceeds cap {cap}", estimate=count
                    )
                chosen.append(Cycle(verts))
                v2 = nvert + len(verts)
                if i is None or v2 == i:
                    out.append(LinearSubdigraph(tuple(chosen), wprod * w))
                extend(a + 1, mask | cmask, chosen, v2, wprod * w)
                chosen.pop()

    extend(0, 0, [], 0, 1)
    return out


def char_poly_oracle(d: MultiDigraph) -> IntPolynomial:
    """det(xI - T) by the Berkowitz algorithm: division-free, exact integers.

    Independent of the cycle machinery on purpose; used as the cross-check
    oracle for char_poly_ct.
    """
    m = d.m
    if m > ORACLE_MAX_VERTICES:
        raise ParameterRangeError(
            f"char_poly_oracle supports at most {ORACLE_MAX_VERTICES} vertices, got {m}"
        )
    rows = d.rows
    coeffs = [1, -rows[0][0]]
    for r in range(2, m + 1):
        corner = rows[r - 1][r - 1]
        R = rows[r - 1][: r - 1]
        vec = [rows[i][r - 1] for i in range(r - 1)]
        q = [1, -corner]
        for _ in range(2, r + 1):
            q.append(-sum(R[i] * vec[i] for i in range(r - 1)))
            vec = [sum(rows[i][j] * vec[j] for j in range(r - 1)) for i in range(r - 1)]
        new = []
        for i in range(r + 1):
            acc = 0
            for j in range(max(0, i - r), min(i, r - 1) + 1):
                acc += q[i - j] * coeffs[j]
            new.append(acc)
        coeffs = new
    return IntPolynomial(tuple(coeffs))
