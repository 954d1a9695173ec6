# orbits/klein.py

"""
The Klein four-group {id, sigma_1, sigma_2, sigma_3} acting on interior
parameters, and its lift to (L / Z*omega) x interiors.

Group elements are indexed 0 (identity) and 1, 2, 3 (sigma_j).
"""

from bundles.extension import interiors, klein_image
from lgroup.grading import AXES
from lgroup.quotient import coset_reps_mod_omega, reduce_mod_omega

IDENTITY = 0
ELEMENTS = (IDENTITY, *AXES)


class InteriorSet:
    """The interiors 0 <= x <= sum (p_i - 2) x_i, indexed in lexicographic order."""

    def __init__(self, weights):
        self.weights = weights
        self.elements = interiors(weights)
        self.index = {x: n for n, x in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, n):
        return self.elements[n]


class KleinAction:
    def __init__(self, weights):
        self.weights = weights

    def sigma(self, j, x):
        if j == IDENTITY:
            return x
        return klein_image(x, j)

    @staticmethod
    def compose(i, j):
        """Index of sigma_i * sigma_j."""
        if i == j:
            return IDENTITY
        if IDENTITY in (i, j):
            return i + j
        return 6 - i - j

    def lift_shift(self, j, x):
        """The twist sum_{i != j} l_i x_i - x_j carried by the lifted sigma_j."""
        w = self.weights
        return w.normalize(*[-1 if i == j else x.coord(i) for i in AXES])

    def lifted(self, j, coset, x):
        """sigma_j on (L / Z*omega) x interiors; coset is a canonical representative."""
        if j == IDENTITY:
            return coset, x
        return reduce_mod_omega(coset + self.lift_shift(j, x)), self.sigma(j, x)


class LiftedSet:
    """Pairs (coset representative, interior) for non-tubular weights."""

    def __init__(self, weights):
        self.weights = weights
        self.cosets = coset_reps_mod_omega(weights)
        self.interiors = InteriorSet(weights)
        self.elements = [(coset, x) for coset in self.cosets for x in self.interiors]
        self.index = {pair: n for n, pair in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, n):
        return self.elements[n]
