# stable/quiver.py

"""
The quiver with relations of End(T)^op for the grid tilting objects.

Arrows are the irreducible maps between summands: nonzero, not the
identity, and not a composite of two such maps through a third summand.
An arrow whose determinant shift is xbar_3 is labelled y, every other
arrow x.  Relations are the commutativity squares along xbar_2, xbar_3 and
the vanishing length-two paths x^2, y^2.
"""

import logging
from dataclasses import dataclass

from lgroup.exceptions import UnsupportedTiltingError

from .suspension import auslander_hom_dim
from .tilting import UNSUPPORTED_HOM, TiltingKind

logger = logging.getLogger(__name__)

COMMUTATIVITY = 'commutativity'
ZERO_X = 'x2'
ZERO_Y = 'y2'


@dataclass(frozen=True, order=True)
class Arrow:
    source: tuple
    target: tuple
    label: str


@dataclass(frozen=True, order=True)
class Relation:
    kind: str
    path: tuple

    def describe(self, name):
        start = name(self.path[0])
        if self.kind == COMMUTATIVITY:
            return f"xy-yx at {start}"
        letter = 'x' if self.kind == ZERO_X else 'y'
        return f"{letter}^2=0 at {start}"


@dataclass(frozen=True)
class Quiver:
    weights: object
    kind: str
    vertices: tuple
    arrows: tuple
    relations: tuple

    @staticmethod
    def vertex_name(coords):
        return 'v_' + '_'.join(str(k) for k in coords)

    def arrow_count(self, label):
        return sum(1 for arrow in self.arrows if arrow.label == label)

    def relation_count(self, kind):
        return sum(1 for relation in self.relations if relation.kind == kind)

    def relation_texts(self):
        return [relation.describe(self.vertex_name) for relation in self.relations]


def build_quiver(tilting):
    if tilting.kind == TiltingKind.CUB:
        raise UnsupportedTiltingError(UNSUPPORTED_HOM)
    weights = tilting.weights
    coords = tilting.coords
    shifts = tilting.shifts
    at = {shift: n for n, shift in enumerate(shifts)}
    size = len(shifts)

    nonzero = {
        (m, n)
        for m in range(size)
        for n in range(size)
        if m != n and auslander_hom_dim(shifts[n] - shifts[m])
    }
    arrows = []
    for m, n in nonzero:
        if any((m, k) in nonzero and (k, n) in nonzero for k in range(size)):
            continue
        label = 'y' if shifts[n] - shifts[m] == weights.xbar(3) else 'x'
        arrows.append(Arrow(coords[m], coords[n], label))
    arrows.sort()

    relations = []
    xbar2, xbar3 = weights.xbar(2), weights.xbar(3)
    for m, u in enumerate(shifts):
        corners = [u + xbar2, u + xbar3, u + xbar2 + xbar3]
        if all(corner in at for corner in corners):
            relations.append(Relation(COMMUTATIVITY, (coords[m],)))

    outgoing = {}
    for arrow in arrows:
        outgoing.setdefault(arrow.source, []).append(arrow)
    shift_at = dict(zip(coords, shifts))
    for first in arrows:
        for second in outgoing.get(first.target, []):
            if second.label != first.label:
                continue
            if auslander_hom_dim(shift_at[second.target] - shift_at[first.source]) == 0:
                kind = ZERO_X if first.label == 'x' else ZERO_Y
                relations.append(Relation(kind, (first.source, first.target, second.target)))
    relations.sort()

    logger.debug("%s quiver for %s: %d vertices, %d arrows, %d relations", tilting.kind, weights, size, len(arrows), len(relations))
    return Quiver(weights, tilting.kind.value, tuple(sorted(coords)), tuple(arrows), tuple(relations))


def to_dot(quiver):
    """Graphviz source; vertices, arrows and relations in sorted order."""
    name = quiver.vertex_name
    lines = [f'digraph "{quiver.kind}({quiver.weights})" {{', '  rankdir=LR;', '  node [shape=circle];']
    append = lines.append
    for vertex in quiver.vertices:
        append(f'  "{name(vertex)}";')
    for arrow in quiver.arrows:
        append(f'  "{name(arrow.source)}" -> "{name(arrow.target)}" [label="{arrow.label}"];')
    append('}')
    append('// relations')
    for text in quiver.relation_texts():
        append(f'// {text}')
    return '\n'.join(lines) + '\n'


def expected_shape(weights, kind):
    """Vertex, x-arrow, y-arrow and commutativity counts of the grid (t1) and sheared grid (t2)."""
    p, q = weights.p2, weights.p3
    vertices = (q - 1) * (p - 1)
    y_arrows = (q - 1) * (p - 2)
    if kind == TiltingKind.T1:
        return vertices, (q - 2) * (p - 1), y_arrows, (q - 2) * (p - 2)
    # for p = 2 the xbar_1 steps no longer factor and become the x-arrows
    x_arrows = (q - 2) * (p - 2) if p > 2 else q - 2
    return vertices, x_arrows, y_arrows, (q - 2) * max(p - 3, 0)


def shape(quiver):
    return len(quiver.vertices), quiver.arrow_count('x'), quiver.arrow_count('y'), quiver.relation_count(COMMUTATIVITY)


def quiver_shape_check(quiver):
    return shape(quiver) == expected_shape(quiver.weights, quiver.kind)
