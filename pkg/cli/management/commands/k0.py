from k0.grothendieck import line_bundle_class, pair_sum_equal
from k0.serializers import K0ReportSerializer

from cli.base import ELEMENT_HELP, WeightCommand
from cli.tables import records_table


class Command(WeightCommand):
    help = 'Grothendieck classes [O(x)] in the canonical tilting basis.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('elements', nargs='+', help=ELEMENT_HELP)
        parser.add_argument(
            '--pair', action='store_true',
            help='with four elements x y z u, test [O(x)] + [O(y)] == [O(z)] + [O(u)]',
        )

    def report_weights(self, weights, elements, pair=False, **options):
        parsed = self.parse_elements(weights, elements)
        if pair:
            if len(parsed) != 4:
                self.usage_error(f"--pair needs exactly four elements, got {len(parsed)}")
            x, y, z, u = parsed
            data = {
                'weights': str(weights),
                'left': [str(x), str(y)],
                'right': [str(z), str(u)],
                'equal': pair_sum_equal(x, y, z, u),
            }
            self.emit(data)
            return
        rows = []
        for x in parsed:
            row = {'element': str(x)}
            row.update(K0ReportSerializer(line_bundle_class(x)).data)
            rows.append(row)
        self.emit(rows, records_table(rows, columns=['element', 'rank', 'degree', 'determinant', 'coeffs']))
