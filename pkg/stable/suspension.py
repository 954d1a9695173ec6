# stable/suspension.py

"""
Suspension in the stable category of vector bundles, and stable Hom
between Auslander bundles.

E<x>[1] = E<(p_i - 2 - l_i) x_i + sum_{j != i} l_j x_j>((l_i + 1) x_i) for
any axis i; the results for different axes are isomorphic.  For p1 = 2 the
suspension is the twist by x1.
"""

import logging

from bundles.extension import ExtensionBundle, interiors, iso_test_general
from lgroup.exceptions import UnsupportedWeightsError
from lgroup.grading import AXES

logger = logging.getLogger(__name__)


def _flip(x, i):
    w = x.weights
    return w.normalize(*[w.weight(k) - 2 - l_k if k == i else l_k for k, l_k in zip(AXES, x.coords)])


def suspend(e, i):
    x = e.interior
    return ExtensionBundle(e.twist + (x.coord(i) + 1) * e.weights.x(i), _flip(x, i))


def desuspend(e, i):
    x = _flip(e.interior, i)
    return ExtensionBundle(e.twist - (x.coord(i) + 1) * e.weights.x(i), x)


def shift(e, n, i=1):
    """E[n] through |n| applications of suspend or desuspend along axis i."""
    step = suspend if n >= 0 else desuspend
    for _ in range(abs(n)):
        e = step(e, i)
    return e


def require_two_first(weights):
    if weights.p1 != 2:
        raise UnsupportedWeightsError(f"weight type (2,p,q) required, got {weights}")


def suspension_is_x1_twist_check(weights):
    require_two_first(weights)
    x1 = weights.x(1)
    for x in interiors(weights):
        e = ExtensionBundle.of(x)
        for i in AXES:
            if not iso_test_general(suspend(e, i), e.twisted(x1)):
                logger.warning("E<%s>[1] along axis %d is not E<%s>(x1)", x, i, x)
                return False
    return True


def axis_independence_check(weights):
    for x in interiors(weights):
        e = ExtensionBundle.of(x)
        first = suspend(e, 1)
        if not all(iso_test_general(first, suspend(e, i)) for i in AXES[1:]):
            return False
    return True


def double_suspension_check(weights):
    """E[2] is E(c)."""
    c = weights.c
    for x in interiors(weights):
        e = ExtensionBundle.of(x)
        for i in AXES:
            if not iso_test_general(suspend(suspend(e, i), i), e.twisted(c)):
                return False
    return True


def boundary_suspension(weights, i):
    """E<(p_i - 2) x_i>[1] along axis i, which is literally E((p_i - 1) x_i)."""
    e = ExtensionBundle.of((weights.weight(i) - 2) * weights.x(i))
    return suspend(e, i)


def boundary_suspension_check(weights):
    return all(
        boundary_suspension(weights, i) == ExtensionBundle((weights.weight(i) - 1) * weights.x(i), weights.zero)
        for i in AXES
    )


def auslander_hom_dim(s):
    """dim of stable Hom(E, E(s)) for the Auslander bundle E: 1 for s in {0, xbar_1, xbar_2, xbar_3}."""
    w = s.weights
    return int(s.is_zero() or any(s == w.xbar(j) for j in AXES))


def hom_targets(weights):
    return [weights.zero] + [weights.xbar(j) for j in AXES]


def hom_degrees(u, v):
    """All n with stable Hom(E(u), E(v)[n]) != 0, i.e. (v - u) + n x1 in {0, xbar_j}."""
    weights = u.weights
    require_two_first(weights)
    d = v - u
    x1 = weights.x(1)
    step = x1.delta()
    degrees = set()
    for target in hom_targets(weights):
        n, rest = divmod(target.delta() - d.delta(), step)
        if not rest and d + n * x1 == target:
            degrees.add(n)
    return degrees


def t1_shift_decomposition(x):
    """E(x) = E(l2 x2 + l3 x3)[l1 + 2l] for p1 = 2; returns (l2 x2 + l3 x3, l1 + 2l)."""
    weights = x.weights
    require_two_first(weights)
    return weights.normalize(0, x.l2, x.l3), x.l1 + 2 * x.l


def t1_shift_decomposition_check(x):
    base, n = t1_shift_decomposition(x)
    weights = x.weights
    return iso_test_general(shift(ExtensionBundle(base, weights.zero), n), ExtensionBundle(x, weights.zero))
