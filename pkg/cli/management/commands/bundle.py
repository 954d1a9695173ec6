from bundles.serializers import ExtensionBundleInputSerializer, ExtensionBundleSerializer

from cli.base import ELEMENT_HELP, WeightCommand


class Command(WeightCommand):
    help = 'Report on the extension bundle E<interior>(twist).'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('interior', help=ELEMENT_HELP)
        parser.add_argument('--twist', default='0', help='twist element; write a negative one as --twist=-x1')

    def report_weights(self, weights, interior, twist='0', **options):
        serializer = ExtensionBundleInputSerializer(
            data={'weights': list(weights.weights), 'interior': interior, 'twist': twist},
        )
        serializer.is_valid(raise_exception=True)
        data = ExtensionBundleSerializer(serializer.validated_data['bundle']).data
        self.emit(data)
