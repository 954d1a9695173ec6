# stable/tilting.py

"""
Tilting objects in the stable category.

T_cub is the sum of all E<x> with x interior.  For weight type (2,p,q) the
grids T1 = sum E(a xbar_2 + b xbar_3) and T2 = sum E(a xbar_1 + b xbar_3),
0 <= a <= q - 2 and 0 <= b <= p - 2, are sums of Auslander bundles; their
summands are recorded by grid coordinates (a, b) and determinant shift.
"""

import logging
from dataclasses import dataclass, field

from django.db import models

from bundles.extension import ExtensionBundle, interiors
from k0.grothendieck import extension_bundle_class
from lgroup.exceptions import UnsupportedTiltingError

from .suspension import auslander_hom_dim, hom_degrees, require_two_first

logger = logging.getLogger(__name__)

UNSUPPORTED_HOM = "unsupported: requires general Hom formula"


class TiltingKind(models.TextChoices):
    CUB = 'cub', 'Cuboid'
    T1 = 't1', 'Rectangular grid'
    T2 = 't2', 'Sheared grid'


# Cuboid and both grids have the same derived category
DERIVED_EQUIVALENT = (TiltingKind.CUB, TiltingKind.T1, TiltingKind.T2)


@dataclass(frozen=True)
class TiltingObject:
    weights: object
    kind: str
    summands: tuple
    coords: tuple

    @property
    def shifts(self):
        return [e.twist for e in self.summands]

    def vertex_name(self, n):
        return 'v_' + '_'.join(str(k) for k in self.coords[n])

    def __len__(self):
        return len(self.summands)


@dataclass
class ExtensionFreeCertificate:
    extension_free: bool
    pairs_checked: int
    violations: list = field(default_factory=list)


def _grid_steps(weights, kind):
    if kind == TiltingKind.T1:
        return weights.xbar(2), weights.xbar(3)
    return weights.xbar(1), weights.xbar(3)


def build_tilting(weights, kind):
    try:
        kind = TiltingKind(kind)
    except ValueError:
        raise UnsupportedTiltingError(f"unknown tilting kind {kind!r}") from None
    if kind == TiltingKind.CUB:
        xs = interiors(weights)
        return TiltingObject(weights, kind, tuple(ExtensionBundle.of(x) for x in xs), tuple(x.coords for x in xs))

    require_two_first(weights)
    p, q = weights.p2, weights.p3
    first, second = _grid_steps(weights, kind)
    summands, coords = [], []
    for a in range(q - 1):
        for b in range(p - 1):
            summands.append(ExtensionBundle(a * first + b * second, weights.zero))
            coords.append((a, b))
    logger.debug("%s for %s: %d summands", kind.label, weights, len(summands))
    return TiltingObject(weights, kind, tuple(summands), tuple(coords))


def summands_pairwise_distinct(tilting):
    """No two summands are isomorphic; isomorphism is equality of K0 classes."""
    classes = {extension_bundle_class(e) for e in tilting.summands}
    return len(classes) == len(tilting.summands)


def _require_grid(tilting):
    if tilting.kind == TiltingKind.CUB:
        raise UnsupportedTiltingError(UNSUPPORTED_HOM)


def check_extension_free(tilting):
    """Every ordered pair of summands has stable Hom only in degree 0."""
    _require_grid(tilting)
    shifts = tilting.shifts
    certificate = ExtensionFreeCertificate(True, 0)
    for m, u in enumerate(shifts):
        for n, v in enumerate(shifts):
            certificate.pairs_checked += 1
            for degree in sorted(hom_degrees(u, v) - {0}):
                certificate.extension_free = False
                certificate.violations.append((tilting.coords[m], tilting.coords[n], degree))
    if certificate.violations:
        logger.warning("%s for %s has %d Ext violations", tilting.kind, tilting.weights, len(certificate.violations))
    return certificate


def end_dimension(tilting):
    _require_grid(tilting)
    shifts = tilting.shifts
    return sum(auslander_hom_dim(v - u) for u in shifts for v in shifts)
