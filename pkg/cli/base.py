# cli/base.py

import logging
import sys

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from lgroup.exceptions import CrossCheckError, ExtBundlesError

from .serializers import ElementsInputSerializer, WeightsInputSerializer
from .tables import key_value_table

logger = logging.getLogger(__name__)

USAGE_ERROR = 1
VERIFICATION_FAILED = 2

ELEMENT_HELP = (
    'element such as 2x2+4x3-c or (l1,l2,l3,l); '
    'an element starting with "-" must come after "--", e.g. -- -x1'
)


def format_errors(detail, prefix=''):
    """Flatten DRF error detail into 'field: message' lines."""
    if isinstance(detail, dict):
        lines = []
        for key, value in detail.items():
            name = key if key != 'non_field_errors' else ''
            lines.extend(format_errors(value, f"{prefix}{name}: " if name else prefix))
        return lines
    if isinstance(detail, list):
        lines = []
        for item in detail:
            lines.extend(format_errors(item, prefix))
        return lines
    return [f"{prefix}{detail}"]


class ReportCommand(BaseCommand):
    """
    Base for every extbundles subcommand: the output format flags and the
    mapping of domain errors to exit codes (1 for usage and preconditions,
    2 for failed verification).
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # argparse errors become CommandError(returncode=1) instead of exit 2
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except CommandError as exc:
            self.stderr.write(f"error: {exc}")
            sys.exit(exc.returncode)

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=['table', 'json'], default='table', dest='format')
        parser.add_argument('--json', action='store_const', const='json', dest='format', help='same as --format json')

    def handle(self, *args, **options):
        self.format = options.get('format') or 'table'
        try:
            self.report(**options)
        except CrossCheckError as exc:
            logger.warning("verification failed: %s", exc)
            raise CommandError(str(exc), returncode=VERIFICATION_FAILED)
        except ExtBundlesError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        except serializers.ValidationError as exc:
            raise CommandError('; '.join(format_errors(exc.detail)), returncode=USAGE_ERROR)

    def report(self, **options):
        raise NotImplementedError('subclasses of ReportCommand must provide a report() method')

    def parse_weights(self, text):
        serializer = WeightsInputSerializer(data={'weights': text})
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data['weights']

    def parse_elements(self, weights, texts):
        serializer = ElementsInputSerializer(data={'elements': list(texts)}, context={'weights': weights})
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data['elements']

    def emit(self, data, table=None):
        if self.format == 'json':
            self.stdout.write(JSONRenderer().render(data, renderer_context={'indent': 2}).decode())
        else:
            self.stdout.write(table if table is not None else key_value_table(data))

    def fail(self, message):
        raise CommandError(message, returncode=VERIFICATION_FAILED)

    def usage_error(self, message):
        raise CommandError(message, returncode=USAGE_ERROR)


class WeightCommand(ReportCommand):
    """A subcommand whose first positional argument is the weight triple."""

    def add_arguments(self, parser):
        parser.add_argument('weights', help='weight triple "p1,p2,p3"')
        super().add_arguments(parser)

    def report(self, **options):
        weights = self.parse_weights(options.pop('weights'))
        self.report_weights(weights, **options)

    def report_weights(self, weights, **options):
        raise NotImplementedError('subclasses of WeightCommand must provide a report_weights() method')
