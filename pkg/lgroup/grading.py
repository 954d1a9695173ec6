# lgroup/grading.py

"""
The grading group L(p1,p2,p3).

L is the rank-one abelian group on x1, x2, x3 with p1*x1 = p2*x2 = p3*x3 = c.
Every element has a unique normal form l1*x1 + l2*x2 + l3*x3 + l*c with
0 <= l_i <= p_i - 1, and LElement only ever holds that normal form, so
equality of elements is equality of coordinates.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import lcm

from django.db import models

from .exceptions import InvalidWeightsError, WeightMismatchError

AXES = (1, 2, 3)


class WeightType(models.TextChoices):
    DOMESTIC = 'domestic', 'Domestic'
    TUBULAR = 'tubular', 'Tubular'
    WILD = 'wild', 'Wild'


@lru_cache(maxsize=None)
def _degrees(weights):
    p = lcm(*weights)
    return p, tuple(p // p_i for p_i in weights)


@dataclass(frozen=True, slots=True)
class WeightTriple:
    p1: int
    p2: int
    p3: int

    def __post_init__(self):
        for p_i in self.weights:
            if not isinstance(p_i, int) or isinstance(p_i, bool) or p_i < 2:
                raise InvalidWeightsError(f"weights must be integers >= 2, got {self.weights}")

    def __str__(self):
        return f"{self.p1},{self.p2},{self.p3}"

    @property
    def weights(self):
        return (self.p1, self.p2, self.p3)

    def weight(self, i):
        return self.weights[i - 1]

    @property
    def p(self):
        """Least common multiple of the weights."""
        return _degrees(self.weights)[0]

    def normalize(self, a1, a2, a3, a=0):
        """Normal form of a1*x1 + a2*x2 + a3*x3 + a*c."""
        l = a
        coords = []
        for a_i, p_i in zip((a1, a2, a3), self.weights):
            k_i, l_i = divmod(a_i, p_i)
            coords.append(l_i)
            l += k_i
        return LElement(self, coords[0], coords[1], coords[2], l)

    element = normalize

    @property
    def zero(self):
        return LElement(self, 0, 0, 0, 0)

    @property
    def c(self):
        return LElement(self, 0, 0, 0, 1)

    def x(self, i):
        raw = [0, 0, 0]
        raw[i - 1] = 1
        return self.normalize(*raw)

    def omega(self):
        """The dualizing element c - x1 - x2 - x3."""
        return self.normalize(-1, -1, -1, 1)

    def xbar(self, j):
        if j not in AXES:
            raise ValueError(f"axis must be 1, 2 or 3, got {j}")
        return self.omega() + self.x(j)

    def delta_omega(self):
        return self.omega().delta()

    def classify(self):
        d = self.delta_omega()
        if d < 0:
            return WeightType.DOMESTIC
        if d == 0:
            return WeightType.TUBULAR
        return WeightType.WILD

    @property
    def is_tubular(self):
        return self.delta_omega() == 0

    def interior_bound(self):
        """The element sum (p_i - 2) x_i bounding interior parameters."""
        return self.normalize(self.p1 - 2, self.p2 - 2, self.p3 - 2)

    def interior_count(self):
        return (self.p1 - 1) * (self.p2 - 1) * (self.p3 - 1)


@dataclass(frozen=True, slots=True)
class LElement:
    weights: WeightTriple
    l1: int
    l2: int
    l3: int
    l: int

    def __post_init__(self):
        for l_i, p_i in zip(self.coords, self.weights.weights):
            if not 0 <= l_i < p_i:
                raise ValueError(
                    f"({self.l1},{self.l2},{self.l3},{self.l}) is not in normal form "
                    f"for weights {self.weights}; build elements with WeightTriple.normalize"
                )

    @property
    def coords(self):
        return (self.l1, self.l2, self.l3)

    def coord(self, i):
        return self.coords[i - 1]

    def key(self):
        return (self.l1, self.l2, self.l3, self.l)

    def _check(self, other):
        if not isinstance(other, LElement):
            return NotImplemented
        if other.weights != self.weights:
            raise WeightMismatchError(f"cannot combine elements of L({self.weights}) and L({other.weights})")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.weights.normalize(
            self.l1 + other.l1, self.l2 + other.l2, self.l3 + other.l3, self.l + other.l
        )

    def __neg__(self):
        return self.weights.normalize(-self.l1, -self.l2, -self.l3, -self.l)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return self.weights.normalize(n * self.l1, n * self.l2, n * self.l3, n * self.l)

    __rmul__ = __mul__

    def scale(self, n):
        return self * n

    def delta(self):
        """Degree: delta(x_i) = p / p_i, delta(c) = p."""
        p, degs = _degrees(self.weights.weights)
        return sum(l_i * d_i for l_i, d_i in zip(self.coords, degs)) + self.l * p

    def is_zero(self):
        return self.key() == (0, 0, 0, 0)

    def is_nonneg(self):
        return self.l >= 0

    def leq(self, other):
        return (other - self).is_nonneg()

    def __str__(self):
        terms = []
        for i, l_i in zip(AXES, self.coords):
            if l_i:
                terms.append(f"x{i}" if l_i == 1 else f"{l_i}x{i}")
        if self.l:
            terms.append({1: 'c', -1: '-c'}.get(self.l, f"{self.l}c"))
        if not terms:
            return '0'
        text = terms[0]
        for term in terms[1:]:
            text += term if term.startswith('-') else '+' + term
        return text

    def quadruple(self):
        return f"({self.l1},{self.l2},{self.l3},{self.l})"


def all_weight_triples(max_weight, min_weight=2):
    """Every triple min_weight <= p1 <= p2 <= p3 <= max_weight, in lexicographic order."""
    return [
        WeightTriple(*triple)
        for triple in combinations_with_replacement(range(min_weight, max_weight + 1), 3)
    ]
