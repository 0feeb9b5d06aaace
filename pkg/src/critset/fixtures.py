"""Built-in graphs: four non-quasi-regularizable examples (G1, G2, G3,
Gfig3) and the small analytic cases K2, P3, K23 and C5.  Vertex ids follow
first appearance along each edge list."""

from __future__ import annotations

from .graph import Graph
from .io import parse_edge_list

EDGE_LISTS: dict[str, str] = {
    "G1": """\
a u
u w
u b
u z
w z
""",
    "G2": """\
x a
a z
z b
a y
b p
b q
p q
""",
    "G3": """\
v A
u A
t A
t B
B D
D w
w G
B C
B E
C D
C E
D E
F G
F H
G H
""",
    "Gfig3": """\
a b4
b4 b5
b5 b6
b6 b7
b7 u
u b9
b9 b10
b10 b11
b4 c
b b4
b5 t5
t5 t6
t6 b7
b9 t9
t9 b10
b11 v
""",
    "K2": "a b\n",
    "P3": "a b\nb c\n",
    "K23": """\
a1 b1
a1 b2
a1 b3
a2 b1
a2 b2
a2 b3
""",
    "C5": """\
c1 c2
c2 c3
c3 c4
c4 c5
c5 c1
""",
}

NAMED_EXAMPLES = ("G1", "G2", "G3", "Gfig3")


def fixture(name: str) -> Graph:
    try:
        return parse_edge_list(EDGE_LISTS[name])
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(EDGE_LISTS)}") from None


def all_fixtures() -> dict[str, Graph]:
    return {name: fixture(name) for name in EDGE_LISTS}
