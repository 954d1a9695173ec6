from orbits.counting import lifted_action_is_free, tau_orbit_count_formula, tau_orbit_partition
from orbits.serializers import OrbitCountSerializer

from cli.base import WeightCommand

from .orbits import orbit_table


class Command(WeightCommand):
    help = 'Count extension bundles up to the Auslander-Reiten translate (non-tubular weights).'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--list', action='store_true', dest='list_blocks', help='include the orbit blocks')

    def report_weights(self, weights, list_blocks=False, **options):
        partition = tau_orbit_partition(weights)
        counts = {
            'weights': weights,
            'formula': tau_orbit_count_formula(weights),
            'partition': partition,
        }
        data = dict(OrbitCountSerializer(counts, context={'list': list_blocks}).data)
        data['free'] = lifted_action_is_free(partition)
        self.emit(data, orbit_table(data))
        if not (data['agree'] and data['free']):
            self.fail(f"tau-orbit check failed for {weights}: {dict(data['method'])}, free={data['free']}")
