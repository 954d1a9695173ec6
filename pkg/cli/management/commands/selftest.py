from django.conf import settings

from cli.base import ReportCommand
from cli.selftest import run_selftest
from cli.serializers import MaxWeightInputSerializer, SelftestReportSerializer
from cli.tables import records_table


class Command(ReportCommand):
    help = 'Run every formula-versus-oracle check over all weight triples up to --max-weight.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-weight', type=int, default=None)
        parser.add_argument(
            '--acceptance', action='store_true',
            help='use the acceptance bound SELFTEST_ACCEPTANCE_WEIGHT',
        )

    def report(self, max_weight=None, acceptance=False, **options):
        if max_weight is None:
            max_weight = settings.SELFTEST_ACCEPTANCE_WEIGHT if acceptance else settings.SELFTEST_MAX_WEIGHT
        serializer = MaxWeightInputSerializer(data={'max_weight': max_weight})
        serializer.is_valid(raise_exception=True)

        report = run_selftest(serializer.validated_data['max_weight'])
        data = SelftestReportSerializer(report).data
        rows = [
            {'suite': suite['name'], 'passed': suite['passed'], 'triples': suite['checked'], 'failures': len(suite['failures'])}
            for suite in data['suites']
        ]
        failures = [message for suite in data['suites'] for message in suite['failures']]
        table = records_table(rows)
        if failures:
            table = table + '\n\n' + '\n'.join(failures)
        self.emit(data, table)
        if not report.passed:
            self.fail(f"selftest failed in {sum(not suite.passed for suite in report.suites)} suite(s)")
