from k0.grothendieck import K0Basis
from lgroup.serializers import WeightTripleSerializer
from orbits.counting import is_transitive, pic_orbit_count_formula, tau_orbit_count_formula

from cli.base import WeightCommand


class Command(WeightCommand):
    help = 'Summarize a weight triple: degree of omega, weight type, K0 rank and orbit counts.'

    def report_weights(self, weights, **options):
        data = dict(WeightTripleSerializer(weights).data)
        data.update(
            k0_rank=len(K0Basis.for_weights(weights)),
            interiors=weights.interior_count(),
            pic_orbits=pic_orbit_count_formula(weights),
            transitive=is_transitive(weights),
            tau_orbits=None if weights.is_tubular else tau_orbit_count_formula(weights),
        )
        self.emit(data)
