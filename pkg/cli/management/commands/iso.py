from bundles.extension import ExtensionBundle, iso_test, iso_witnesses
from k0.grothendieck import extension_bundle_class

from cli.base import ELEMENT_HELP, WeightCommand


class Command(WeightCommand):
    help = 'Decide whether E<x> is isomorphic to E<y>(z), and compare with Grothendieck classes.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('x', help=f'interior parameter of the first bundle; {ELEMENT_HELP}')
        parser.add_argument('y', help=f'interior parameter of the second bundle; {ELEMENT_HELP}')
        parser.add_argument('z', help=f'twist of the second bundle; {ELEMENT_HELP}')

    def report_weights(self, weights, x, y, z, **options):
        x, y, z = self.parse_elements(weights, [x, y, z])
        e, f = ExtensionBundle.of(x), ExtensionBundle.of(y, z)
        closed = iso_test(x, y, z)
        by_classes = extension_bundle_class(e) == extension_bundle_class(f)
        data = {
            'weights': str(weights),
            'left': str(e),
            'right': str(f),
            'isomorphic': closed,
            'k0_agrees': closed == by_classes,
            'witnesses': [str(t) for t in iso_witnesses(x, y)],
        }
        self.emit(data)
        if closed != by_classes:
            self.fail(f"closed criterion says {closed}, Grothendieck classes say {by_classes}")
