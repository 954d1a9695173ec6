from orbits.counting import pic_orbit_count_burnside, pic_orbit_count_formula, pic_orbit_partition
from orbits.serializers import OrbitCountSerializer

from cli.base import WeightCommand
from cli.tables import key_value_table


def orbit_table(data):
    table = key_value_table(data, skip=('blocks',))
    if 'blocks' in data:
        blocks = '\n'.join(f"{n}: {', '.join(str(m) for m in block)}" for n, block in enumerate(data['blocks']))
        table = f"{table}\n{blocks}"
    return table


class Command(WeightCommand):
    help = 'Count extension bundles up to line-bundle twist by closed form, Burnside and union-find.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--list', action='store_true', dest='list_blocks', help='include the orbit blocks')

    def report_weights(self, weights, list_blocks=False, **options):
        counts = {
            'weights': weights,
            'formula': pic_orbit_count_formula(weights),
            'burnside': pic_orbit_count_burnside(weights),
            'partition': pic_orbit_partition(weights),
        }
        data = OrbitCountSerializer(counts, context={'list': list_blocks}).data
        self.emit(data, orbit_table(data))
        if not data['agree']:
            self.fail(f"orbit counts disagree for {weights}: {dict(data['method'])}")
