# orbits/counting.py

"""
Counting extension bundles up to line-bundle twist (Picard orbits) and up to
the Auslander-Reiten translate (tau-orbits).

Every closed formula here has a brute-force counterpart; the selftest and
the test suite compare them.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from django.conf import settings

from bundles.extension import ExtensionBundle, iso_test_general, iso_witnesses
from lgroup.exceptions import CrossCheckError, TubularWeightError
from lgroup.grading import AXES

from .klein import ELEMENTS, InteriorSet, KleinAction, LiftedSet
from .unionfind import find_orbits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitPartition:
    """Blocks of indices into ``elements``; fixed_counts[g] = |fixed points of g| for g in 0..3."""

    elements: tuple
    blocks: tuple
    fixed_counts: tuple

    @property
    def count(self):
        return len(self.blocks)

    @property
    def sizes(self):
        return [len(block) for block in self.blocks]

    def members(self, block):
        return [self.elements[n] for n in block]


def _quarter(total, what):
    if total % 4:
        raise CrossCheckError(f"{what} is not divisible by 4: {total}")
    return total // 4


def pic_orbit_count_formula(weights):
    """Closed form in terms of the number m of even weights."""
    size = weights.interior_count()
    even = [p_i for p_i in weights.weights if p_i % 2 == 0]
    odd = [p_i for p_i in weights.weights if p_i % 2]
    if len(even) <= 1:
        return _quarter(size, f"orbit formula for {weights}")
    if len(even) == 2:
        return _quarter(size + odd[0] - 1, f"orbit formula for {weights}")
    return _quarter(size + sum(p_i - 1 for p_i in weights.weights), f"orbit formula for {weights}")


def fixed_point_rule(weights):
    """|S^sigma_j| = p_j - 1 when both other weights are even, else 0."""
    rule = []
    for j in AXES:
        others = [weights.weight(i) for i in AXES if i != j]
        rule.append(weights.weight(j) - 1 if all(p_i % 2 == 0 for p_i in others) else 0)
    return tuple(rule)


def fixed_point_scan(weights, action=None):
    action = action or KleinAction(weights)
    space = InteriorSet(weights)
    return tuple(sum(1 for x in space if action.sigma(j, x) == x) for j in AXES)


def pic_orbit_count_burnside(weights):
    scan = fixed_point_scan(weights)
    rule = fixed_point_rule(weights)
    if scan != rule:
        logger.warning("fixed points of %s: scan %s, rule %s", weights, scan, rule)
        raise CrossCheckError(f"fixed-point scan {scan} disagrees with the parity rule {rule} for {weights}")
    return _quarter(weights.interior_count() + sum(scan), f"Burnside sum for {weights}")


def pic_orbit_partition(weights):
    action = KleinAction(weights)
    space = InteriorSet(weights)
    blocks = find_orbits(AXES, len(space), lambda j, n: space.index[action.sigma(j, space[n])])
    fixed = (len(space),) + tuple(sum(1 for x in space if action.sigma(j, x) == x) for j in AXES)
    logger.debug("Picard orbits of %s: %d blocks over %d interiors", weights, len(blocks), len(space))
    return OrbitPartition(tuple(space.elements), tuple(blocks), fixed)


def partition_matches_iso(partition):
    """Same block iff some twist makes the bundles isomorphic."""
    block_of = {}
    for b, block in enumerate(partition.blocks):
        for n in block:
            block_of[n] = b
    size = len(partition.elements)
    for m in range(size):
        for n in range(size):
            related = bool(iso_witnesses(partition.elements[m], partition.elements[n]))
            if related != (block_of[m] == block_of[n]):
                logger.warning("partition and iso criterion disagree on %s, %s", partition.elements[m], partition.elements[n])
                return False
    return True


def is_transitive(weights):
    return pic_orbit_count_formula(weights) == 1


def tau_orbit_count_formula(weights):
    """|1/4 (1 - sum 1/p_i) prod p_i (p_i - 1)|."""
    if weights.is_tubular:
        raise TubularWeightError(weights, 'tau_orbit_count_formula')
    value = abs(
        Fraction(1, 4)
        * (1 - sum(Fraction(1, p_i) for p_i in weights.weights))
        * prod(p_i * (p_i - 1) for p_i in weights.weights)
    )
    if value.denominator != 1:
        raise CrossCheckError(f"tau-orbit formula is not integral for {weights}: {value}")
    return value.numerator


def tau_orbit_partition(weights):
    if weights.is_tubular:
        raise TubularWeightError(weights, 'tau_orbit_partition')
    action = KleinAction(weights)
    space = LiftedSet(weights)

    def image(j, n):
        return space.index[action.lifted(j, *space[n])]

    blocks = find_orbits(AXES, len(space), image)
    fixed = (len(space),) + tuple(sum(1 for n in range(len(space)) if image(j, n) == n) for j in AXES)
    logger.debug("tau-orbits of %s: %d blocks over %d pairs", weights, len(blocks), len(space))
    return OrbitPartition(tuple(space.elements), tuple(blocks), fixed)


def tau_orbit_count_brute(weights):
    return tau_orbit_partition(weights).count


def lifted_action_is_free(partition):
    return not any(partition.fixed_counts[1:])


def lifted_compose_check(weights):
    """sigma_i sigma_j = sigma_k and sigma_j^2 = id for the lifted action on (L / Z*omega) x interiors."""
    action = KleinAction(weights)
    space = LiftedSet(weights)
    for pair in space.elements:
        for i in ELEMENTS:
            for j in ELEMENTS:
                composed = action.lifted(i, *action.lifted(j, *pair))
                if composed != action.lifted(KleinAction.compose(i, j), *pair):
                    logger.warning("lifted action of %s: sigma_%d sigma_%d fails at %s", weights, i, j, pair)
                    return False
    return True


def raw_klein_relations_check(weights):
    """sigma_j^2 = id and sigma_i sigma_j = sigma_j sigma_i pointwise on the interiors."""
    action = KleinAction(weights)
    for x in InteriorSet(weights):
        for i in AXES:
            if action.sigma(i, action.sigma(i, x)) != x:
                return False
            for j in AXES:
                if action.sigma(i, action.sigma(j, x)) != action.sigma(j, action.sigma(i, x)):
                    return False
    return True


def sigma_compatibility_check(weights, t, x):
    """
    The lifted sigma_j followed by the projection to bundles agrees with the
    translate: E<sigma_j x>(t + sum_{i != j} l_i x_i - x_j) is isomorphic to
    E<x>(t + omega) for every j.
    """
    action = KleinAction(weights)
    translate = ExtensionBundle(t + weights.omega(), x)
    for j in AXES:
        moved = ExtensionBundle(t + action.lift_shift(j, x), action.sigma(j, x))
        if not iso_test_general(moved, translate):
            logger.warning("sigma_%d does not lift the translate at t=%s, x=%s", j, t, x)
            return False
    return True


def sigma_compatibility_sample(weights, samples=None, seed=None):
    """Run sigma_compatibility_check on random (t, x) pairs; returns the number of failures."""
    samples = settings.TAU_SAMPLE_SIZE if samples is None else samples
    rng = random.Random(settings.SELFTEST_SEED if seed is None else seed)
    space = InteriorSet(weights)
    failures = 0
    for _ in range(samples):
        t = weights.normalize(*(rng.randrange(p_i) for p_i in weights.weights), rng.randint(-3, 3))
        x = space[rng.randrange(len(space))]
        if not sigma_compatibility_check(weights, t, x):
            failures += 1
    return failures

