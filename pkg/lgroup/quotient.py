# lgroup/quotient.py

"""
The quotient L / Z*omega for non-tubular weights.

Membership in Z*omega and coset reduction both project through the degree
map: delta(omega) != 0 pins down the only possible multiple, which is then
verified by exact normal-form equality.
"""

import logging
from collections import deque
from fractions import Fraction
from math import prod

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .exceptions import CrossCheckError, InfiniteQuotientError, TubularWeightError
from .grading import AXES

logger = logging.getLogger(__name__)


def _delta_omega(weights, operation):
    d = weights.delta_omega()
    if d == 0:
        raise TubularWeightError(weights, operation)
    return d


def in_z_omega(a):
    """Return r with a = r*omega, or None when a is not a multiple of omega."""
    weights = a.weights
    d = _delta_omega(weights, 'in_z_omega')
    r, rest = divmod(a.delta(), d)
    if rest:
        return None
    return r if r * weights.omega() == a else None


def reduce_mod_omega(a):
    """Canonical representative of a + Z*omega: the one with 0 <= delta < |delta(omega)|."""
    weights = a.weights
    d = _delta_omega(weights, 'reduce_mod_omega')
    r = -(a.delta() // d) if d > 0 else a.delta() // -d
    return a + r * weights.omega()


def omega_presentation(weights):
    """Relations of L / Z*omega in the generators x1, x2, x3."""
    p1, p2, p3 = weights.weights
    return [
        [p1, -p2, 0],
        [0, p2, -p3],
        [p1 - 1, -1, -1],
    ]


def snf_quotient_order(relations):
    """Order of Z^n / (row span of a square integer matrix), via Smith normal form."""
    m = Matrix(relations)
    if not m.is_square:
        raise ValueError(f"relation matrix must be square, got {m.shape}")
    factors = [int(f) for f in invariant_factors(m, domain=ZZ)]
    if len(factors) < m.rows or 0 in factors:
        raise InfiniteQuotientError(f"infinite quotient: invariant factors {factors}")
    order = abs(prod(factors))
    if order != abs(int(m.det())):
        raise CrossCheckError(f"Smith normal form order {order} disagrees with determinant {m.det()}")
    return order


def omega_index(weights):
    """[L : Z*omega] = |(1 - sum 1/p_i) * prod p_i|."""
    _delta_omega(weights, 'omega_index')
    value = abs((1 - sum(Fraction(1, p_i) for p_i in weights.weights)) * prod(weights.weights))
    if value.denominator != 1:
        raise CrossCheckError(f"index formula is not integral for {weights}: {value}")
    return value.numerator


def coset_reps_mod_omega(weights):
    """
    Breadth-first closure from 0 over x1, x2, x3, keeping one canonical
    representative per coset.  The Smith-normal-form order is the stopping
    certificate.
    """
    _delta_omega(weights, 'coset_reps_mod_omega')
    order = snf_quotient_order(omega_presentation(weights))
    generators = [weights.x(i) for i in AXES]

    start = weights.zero
    reps = [start]
    seen = {start}
    queue = deque([start])
    while queue and len(reps) < order:
        current = queue.popleft()
        for generator in generators:
            candidate = reduce_mod_omega(current + generator)
            if candidate not in seen:
                seen.add(candidate)
                reps.append(candidate)
                queue.append(candidate)

    logger.debug("L(%s)/Z*omega: %d coset representatives", weights, len(reps))
    if len(reps) != order:
        logger.warning("coset enumeration for %s found %d cosets, SNF says %d", weights, len(reps), order)
        raise CrossCheckError(f"coset enumeration found {len(reps)} cosets, SNF order is {order}")
    return reps
