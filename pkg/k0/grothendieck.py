# k0/grothendieck.py

"""
K0 of the weighted projective line in the basis of the canonical tilting
sheaf: the classes [O(x)] for 0 <= x <= c.

Basis order is fixed: [O], then [O(l*x_i)] for i = 1, 2, 3 and
l = 1 .. p_i - 1, then [O(c)].
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from django.conf import settings

from lgroup.exceptions import CrossCheckError, WeightMismatchError
from lgroup.grading import AXES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class K0Basis:
    weights: object
    elements: tuple

    @classmethod
    def for_weights(cls, weights):
        return _basis(weights)

    @property
    def labels(self):
        return [f"O({x})" if not x.is_zero() else 'O' for x in self.elements]

    def __len__(self):
        return len(self.elements)

    def index_of(self, i, l_i):
        """Position of [O(l_i*x_i)]; l_i = 0 is [O]."""
        if l_i == 0:
            return 0
        return 1 + sum(p_j - 1 for p_j in self.weights.weights[: i - 1]) + (l_i - 1)

    @property
    def c_index(self):
        return len(self.elements) - 1


@lru_cache(maxsize=None)
def _basis(weights):
    elements = [weights.zero]
    for i in AXES:
        elements.extend(weights.normalize(*[l_i if j == i else 0 for j in AXES]) for l_i in range(1, weights.weight(i)))
    elements.append(weights.c)
    return K0Basis(weights, tuple(elements))


@dataclass(frozen=True)
class K0Class:
    weights: object
    coeffs: tuple

    @classmethod
    def zero(cls, weights):
        return cls(weights, (0,) * len(_basis(weights)))

    @property
    def basis(self):
        return _basis(self.weights)

    def _check(self, other):
        if other.weights != self.weights:
            raise WeightMismatchError(f"cannot combine K0 classes of {self.weights} and {other.weights}")

    def __add__(self, other):
        self._check(other)
        return K0Class(self.weights, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return K0Class(self.weights, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return K0Class(self.weights, tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        terms = [f"{a}[{label}]" for a, label in zip(self.coeffs, self.basis.labels) if a]
        return ' + '.join(terms) if terms else '0'


def line_bundle_class(x):
    """[O(x)] = sum_i [O(l_i x_i)] + l[O(c)] - (l+2)[O]; l_i = 0 lands on [O]."""
    basis = _basis(x.weights)
    coeffs = [0] * len(basis)
    for i, l_i in zip(AXES, x.coords):
        coeffs[basis.index_of(i, l_i)] += 1
    coeffs[basis.c_index] += x.l
    coeffs[0] -= x.l + 2
    return K0Class(x.weights, tuple(coeffs))


def rank(k):
    return sum(k.coeffs)


def degree(k):
    return sum(a * x.delta() for a, x in zip(k.coeffs, k.basis.elements))


def determinant(k):
    total = k.weights.zero
    for a, x in zip(k.coeffs, k.basis.elements):
        if a:
            total = total + a * x
    return total


def pair_class_key(x, y):
    """Hashable invariant of [O(x)] + [O(y)]: the sum l + k and the coordinate multisets {l_i, k_i}."""
    return (x.l + y.l, *(tuple(sorted((x.coord(i), y.coord(i)))) for i in AXES))


def _pair_multisets_agree(x, y, z, u):
    return pair_class_key(x, y) == pair_class_key(z, u)


def pair_sum_equal(x, y, z, u):
    """[O(x)] + [O(y)] == [O(z)] + [O(u)], by the closed coordinate criterion."""
    result = _pair_multisets_agree(x, y, z, u)
    if getattr(settings, 'ORACLE_CROSSCHECK', False):
        oracle = line_bundle_class(x) + line_bundle_class(y) == line_bundle_class(z) + line_bundle_class(u)
        if oracle != result:
            logger.warning("pair_sum_equal mismatch on (%s, %s, %s, %s): closed=%s classes=%s", x, y, z, u, result, oracle)
            raise CrossCheckError(f"pair criterion says {result}, class arithmetic says {oracle} for ({x}, {y}, {z}, {u})")
    return result


def extension_bundle_class(bundle):
    """[E_L<x>] = [O(t + omega)] + [O(t + x)]."""
    t = bundle.twist
    return line_bundle_class(t + t.weights.omega()) + line_bundle_class(t + bundle.interior)
