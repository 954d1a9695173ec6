# lgroup/exceptions.py

"""Exceptions shared by every app of the project."""


class ExtBundlesError(Exception):
    """Base class for domain errors."""


class InvalidWeightsError(ExtBundlesError, ValueError):
    pass


class WeightMismatchError(ExtBundlesError, ValueError):
    pass


class ElementSyntaxError(ExtBundlesError, ValueError):
    pass


class InvalidInteriorError(ExtBundlesError, ValueError):
    pass


class TubularWeightError(ExtBundlesError, ValueError):
    def __init__(self, weights, operation=''):
        self.weights = weights
        where = f' ({operation})' if operation else ''
        super().__init__(f"tubular weight type {weights}: delta(omega) = 0{where}")


class UnsupportedWeightsError(ExtBundlesError, ValueError):
    pass


class UnsupportedTiltingError(ExtBundlesError, ValueError):
    pass


class InfiniteQuotientError(ExtBundlesError, ArithmeticError):
    pass


class CrossCheckError(ExtBundlesError, AssertionError):
    """A closed formula disagreed with its brute-force oracle."""
