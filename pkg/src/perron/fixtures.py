"""The two shipped digraph fixtures, constructed in code.

``figure1`` is the 14-vertex two-cycle shape (cycles of lengths 8 and 6,
through-cycle of length 7); vertices 1 and 14 have out-degree 2, vertices 1
and 9 in-degree 2.  ``figure4`` is the 9-vertex knot-monodromy digraph found
by reconstruct_figure4: the standard 9-cycle, loops at 3 and 7, and the four
extra edges 3->9, 9->6, 7->4, 4->1.
"""

from __future__ import annotations

from .digraph import MultiDigraph
from .io import format_digraph


def figure1() -> MultiDigraph:
    edges = [(i, i + 1) for i in range(7)] + [(7, 0)]          # 8-cycle on 1..8
    edges += [(8 + i, 8 + (i + 1) % 6) for i in range(6)]      # 6-cycle on 9..14
    edges += [(0, 8), (13, 0)]                                 # 1 -> 9 and 14 -> 1
    return MultiDigraph.from_edges(14, edges)


def figure4() -> MultiDigraph:
    edges = [(i, (i + 1) % 9) for i in range(9)]               # 9-cycle on 1..9
    edges += [(2, 2), (6, 6)]                                  # loops at 3 and 7
    edges += [(2, 8), (8, 5), (6, 3), (3, 0)]                  # 3->9, 9->6, 7->4, 4->1
    return MultiDigraph.from_edges(9, edges)


FIXTURE_HEADERS = {
    "figure1": (
        "fixture figure1: (2,2)-shape, cycles of lengths 8 and 6, through-cycle length 7",
        "characteristic polynomial x^14 - x^8 - x^7 - x^6 + 1",
    ),
    "figure4": (
        "fixture figure4: 9-cycle with loops at 3 and 7 plus edges 3->9 9->6 7->4 4->1",
        "characteristic polynomial x^9 - 2x^8 + x^7 - 4x^5 + 4x^4 - x^2 + 2x - 1",
    ),
}


def fixture(name: str) -> MultiDigraph:
    if name == "figure1":
        return figure1()
    if name == "figure4":
        return figure4()
    raise KeyError(name)


def fixture_text(name: str) -> str:
    return format_digraph(fixture(name), header=FIXTURE_HEADERS[name])
