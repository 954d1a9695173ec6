from lgroup.serializers import LElementSerializer

from cli.base import ELEMENT_HELP, WeightCommand
from cli.tables import records_table


class Command(WeightCommand):
    help = 'Bring elements of L to normal form l1*x1 + l2*x2 + l3*x3 + l*c.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('elements', nargs='+', help=ELEMENT_HELP)

    def report_weights(self, weights, elements, **options):
        rows = LElementSerializer(self.parse_elements(weights, elements), many=True).data
        self.emit(rows, records_table(rows))
