# cli/selftest.py

"""
Sweep every formula-versus-oracle check over the weight triples
2 <= p1 <= p2 <= p3 <= max_weight.

Each suite is a function of one weight triple returning a list of failure
messages; the expensive suites stop at their own weight cap.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from bundles.extension import (
    ExtensionBundle,
    Stability,
    canonical_rep,
    injective_hull,
    interiors,
    is_auslander,
    iso_witnesses,
    projective_cover,
    stability,
    stable_iff_not_auslander,
)
from k0.grothendieck import extension_bundle_class
from lgroup.exceptions import ExtBundlesError
from lgroup.grading import WeightTriple, WeightType, all_weight_triples
from lgroup.quotient import coset_reps_mod_omega, omega_index, omega_presentation, snf_quotient_order
from orbits.counting import (
    fixed_point_rule,
    fixed_point_scan,
    lifted_action_is_free,
    lifted_compose_check,
    pic_orbit_count_burnside,
    pic_orbit_count_formula,
    pic_orbit_partition,
    raw_klein_relations_check,
    sigma_compatibility_sample,
    tau_orbit_count_formula,
    tau_orbit_partition,
)
from stable.quiver import build_quiver, quiver_shape_check, shape
from stable.suspension import (
    axis_independence_check,
    boundary_suspension_check,
    double_suspension_check,
    suspension_is_x1_twist_check,
)
from stable.tilting import TiltingKind, build_tilting, check_extension_free, end_dimension, summands_pairwise_distinct

logger = logging.getLogger(__name__)

ISO_CAP = 5
COVER_HULL_CAP = 5
TAU_CAP = 6
SUSPENSION_CAP = 6

TRANSITIVE = {(2, 2, 2), (2, 2, 3), (2, 3, 3)}

TUBULAR_STABLE_RULES = {
    (3, 3, 3): lambda x: sum(x.coords) in (1, 3),
    (2, 3, 6): lambda x: x.l3 not in (0, 4),
    (2, 4, 4): lambda x: x.l2 == 1 or x.l3 == 1,
}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures


@dataclass
class SelftestReport:
    max_weight: int
    triples: int
    suites: list

    @property
    def passed(self):
        return all(suite.passed for suite in self.suites)


def twist_grid(w, levels=range(-2, 3)):
    return [
        w.normalize(a1, a2, a3, a)
        for a1 in range(w.p1)
        for a2 in range(w.p2)
        for a3 in range(w.p3)
        for a in levels
    ]


def check_orbit_agreement(w):
    failures = []
    formula = pic_orbit_count_formula(w)
    burnside = pic_orbit_count_burnside(w)
    brute = pic_orbit_partition(w).count
    if not formula == burnside == brute:
        failures.append(f"formula {formula}, burnside {burnside}, brute {brute}")
    if (brute == 1) != (w.weights in TRANSITIVE):
        failures.append(f"transitivity: {brute} orbits")
    if not raw_klein_relations_check(w):
        failures.append('Klein relations fail on interiors')
    return failures


def check_fixed_point_law(w):
    scan, rule = fixed_point_scan(w), fixed_point_rule(w)
    return [] if scan == rule else [f"scan {scan}, rule {rule}"]


def check_iso_criterion(w):
    """Closed iso criterion against Grothendieck classes over interiors x, y and a bounded twist grid z."""
    failures = []
    space = interiors(w)
    grid = twist_grid(w)
    in_grid = set(grid)
    by_class = defaultdict(set)
    for y in space:
        for z in grid:
            by_class[extension_bundle_class(ExtensionBundle.of(y, z))].add((y, z))
    for x in space:
        e = ExtensionBundle.of(x)
        expected = {(y, z) for y in space for z in iso_witnesses(x, y) if z in in_grid}
        if by_class.get(extension_bundle_class(e), set()) != expected:
            failures.append(f"iso criterion and classes disagree at x={x}")
        if is_auslander(e) != canonical_rep(e).is_zero():
            failures.append(f"Auslander detection disagrees with canonical_rep at x={x}")
    return failures


def check_cover_hull(w):
    bundles = [ExtensionBundle.of(x, t) for x in interiors(w) for t in twist_grid(w, levels=(-1, 0))]
    classes = [extension_bundle_class(e) for e in bundles]
    covers = [projective_cover(e) for e in bundles]
    hulls = [injective_hull(e) for e in bundles]
    blocks = len(set(classes))
    failures = []
    if not len(set(covers)) == len(set(zip(classes, covers))) == blocks:
        failures.append('projective covers do not separate isomorphism classes')
    if not len(set(hulls)) == len(set(zip(classes, hulls))) == blocks:
        failures.append('injective hulls do not separate isomorphism classes')
    return failures


def check_stability(w):
    verdicts = {x: stability(ExtensionBundle.of(x)) for x in interiors(w)}
    kind = w.classify()
    failures = []
    if kind == WeightType.DOMESTIC and set(verdicts.values()) != {Stability.STABLE}:
        failures.append('domestic weights with an unstable bundle')
    if kind == WeightType.WILD and Stability.NOT_SEMISTABLE not in verdicts.values():
        failures.append('wild weights without a non-semistable bundle')
    if kind == WeightType.TUBULAR:
        if Stability.NOT_SEMISTABLE in verdicts.values():
            failures.append('tubular weights with a non-semistable bundle')
        if not stable_iff_not_auslander(w):
            failures.append('stability does not separate Auslander bundles')
        rule = TUBULAR_STABLE_RULES.get(w.weights)
        if rule is not None:
            failures.extend(
                f"stability table differs at {x}" for x, verdict in verdicts.items()
                if (verdict == Stability.STABLE) != rule(x)
            )
    return failures


def check_tau_agreement(w):
    if w.is_tubular:
        return []
    failures = []
    partition = tau_orbit_partition(w)
    formula = tau_orbit_count_formula(w)
    if formula != partition.count:
        failures.append(f"formula {formula}, brute {partition.count}")
    if not lifted_action_is_free(partition):
        failures.append(f"lifted action has fixed points {partition.fixed_counts[1:]}")
    if not lifted_compose_check(w):
        failures.append('lifted action is not a Klein four-group action')
    misses = sigma_compatibility_sample(w)
    if misses:
        failures.append(f"sigma does not lift the translate on {misses} samples")
    return failures


def check_suspension_laws(w):
    checks = {
        'axis independence': axis_independence_check,
        'double suspension is the c-twist': double_suspension_check,
        'boundary identity': boundary_suspension_check,
    }
    if w.p1 == 2:
        checks['suspension is the x1-twist'] = suspension_is_x1_twist_check
    return [name for name, check in checks.items() if not check(w)]


def check_tilting(w):
    failures = []
    dims = {}
    for kind in (TiltingKind.T1, TiltingKind.T2):
        tilting = build_tilting(w, kind)
        certificate = check_extension_free(tilting)
        if not certificate.extension_free:
            failures.append(f"{kind} has {len(certificate.violations)} Ext violations")
            continue
        if not summands_pairwise_distinct(tilting):
            failures.append(f"{kind} has isomorphic summands")
        quiver = build_quiver(tilting)
        if not quiver_shape_check(quiver):
            failures.append(f"{kind} quiver has shape {shape(quiver)}")
        dims[kind] = end_dimension(tilting)
    if len(set(dims.values())) > 1:
        failures.append(f"End dimensions differ: {dims}")
    return failures


def check_snf_oracle(w):
    if w.is_tubular:
        return []
    snf = snf_quotient_order(omega_presentation(w))
    closed = omega_index(w)
    bfs = len(coset_reps_mod_omega(w))
    return [] if snf == closed == bfs else [f"snf {snf}, formula {closed}, cosets {bfs}"]


def _run_suite(name, check, triples):
    result = SuiteResult(name)
    for w in triples:
        result.checked += 1
        try:
            failures = check(w)
        except ExtBundlesError as exc:
            failures = [f"{exc.__class__.__name__}: {exc}"]
        result.failures.extend(f"{w}: {message}" for message in failures)
    logger.info("selftest %s: %s over %d triples", name, 'pass' if result.passed else 'FAIL', result.checked)
    return result


def run_selftest(max_weight):
    triples = all_weight_triples(max_weight)

    def upto(cap):
        return [w for w in triples if max(w.weights) <= cap]

    grids = [WeightTriple(2, p, q) for p in range(2, max_weight + 1) for q in range(2, max_weight + 1)]
    suites = [
        _run_suite('orbit_agreement', check_orbit_agreement, triples),
        _run_suite('fixed_point_law', check_fixed_point_law, triples),
        _run_suite('iso_criterion', check_iso_criterion, upto(ISO_CAP)),
        _run_suite('cover_hull', check_cover_hull, upto(COVER_HULL_CAP)),
        _run_suite('stability', check_stability, triples),
        _run_suite('tau_agreement', check_tau_agreement, upto(TAU_CAP)),
        _run_suite('suspension_laws', check_suspension_laws, upto(SUSPENSION_CAP)),
        _run_suite('tilting', check_tilting, grids),
        _run_suite('snf_oracle', check_snf_oracle, triples),
    ]
    return SelftestReport(max_weight, len(triples), suites)
