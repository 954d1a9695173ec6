from pathlib import Path

from stable.quiver import quiver_shape_check, to_dot
from stable.serializers import TiltingReportSerializer
from stable.tilting import TiltingKind, build_tilting

from cli.base import WeightCommand
from cli.tables import key_value_table, records_table


class Command(WeightCommand):
    help = 'Build a tilting object of the stable category, check it is extension-free and draw its quiver.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--kind', choices=TiltingKind.values, default=TiltingKind.T1)
        parser.add_argument('--dot', metavar='PATH', help='write the endomorphism quiver as Graphviz DOT')

    def report_weights(self, weights, kind=TiltingKind.T1, dot=None, **options):
        tilting = build_tilting(weights, kind)
        report = TiltingReportSerializer.collect(tilting)
        data = TiltingReportSerializer(report).data
        quiver = report['quiver']
        if dot:
            if tilting.kind == TiltingKind.CUB:
                self.usage_error(data['note'])
            if quiver is not None:
                Path(dot).write_text(to_dot(quiver))

        table = key_value_table(data, skip=('summands', 'violations', 'vertices', 'arrows', 'relations'))
        self.emit(data, f"{table}\n\n{records_table(data['summands'])}")

        if report['extension_free'] is False:
            self.fail(f"{tilting.kind} for {weights} is not extension-free ({len(data['violations'])} violations)")
        if quiver is not None and not quiver_shape_check(quiver):
            self.fail(f"quiver of {tilting.kind} for {weights} does not have the expected shape")
