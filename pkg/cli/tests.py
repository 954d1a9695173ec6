import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.apps import apps
from django.core.management import call_command, load_command_class
from django.core.management.base import CommandError
from django.db import connections
from django.test import SimpleTestCase

from bundles.extension import ExtensionBundle
from lgroup.grading import WeightTriple
from lgroup.parsing import parse_element
from orbits.klein import KleinAction

from .runner import run
from .selftest import check_iso_criterion, check_tilting, run_selftest
from .tables import key_value_table, records_table


def run_json(*argv):
    stdout, stderr = StringIO(), StringIO()
    code = run([*argv, '--json'], stdout=stdout, stderr=stderr)
    return code, json.loads(stdout.getvalue()) if stdout.getvalue() else None, stderr.getvalue()


class InfoCommandTests(SimpleTestCase):
    def test_wild_triple(self):
        code, data, _ = run_json('info', '2,3,7')
        self.assertEqual(code, 0)
        self.assertEqual(data['delta_omega'], 1)
        self.assertEqual(data['weight_type'], 'wild')
        self.assertEqual(data['k0_rank'], 11)
        self.assertEqual(data['omega_index'], 1)
        self.assertEqual(data['interiors'], 12)

    def test_tubular_triple(self):
        code, data, _ = run_json('info', '3,3,3')
        self.assertEqual(code, 0)
        self.assertIsNone(data['tau_orbits'])
        self.assertIsNone(data['omega_index'])

    def test_table_output(self):
        out = StringIO()
        call_command('info', '2,3,7', stdout=out)
        self.assertIn('k0_rank', out.getvalue())
        self.assertIn('wild', out.getvalue())

    def test_bad_weights(self):
        for weights in ('1,3,7', '2,3', 'a,b,c'):
            stderr = StringIO()
            self.assertEqual(run(['info', weights], stdout=StringIO(), stderr=stderr), 1, weights)
            self.assertIn('weights', stderr.getvalue())

    def test_usage_errors(self):
        self.assertEqual(run(['info', '2,3,7', '--bogus'], stdout=StringIO(), stderr=StringIO()), 1)
        self.assertEqual(run(['frobnicate', '2,3,7'], stdout=StringIO(), stderr=StringIO()), 1)
        self.assertEqual(run([], stdout=StringIO(), stderr=StringIO()), 1)

    def test_call_command_returncode(self):
        with self.assertRaises(CommandError) as cm:
            call_command('tau_orbits', '3,3,3', stdout=StringIO())
        self.assertEqual(cm.exception.returncode, 1)
        self.assertIn('tubular weight type', str(cm.exception))


class ElementCommandTests(SimpleTestCase):
    def test_normalize(self):
        code, data, _ = run_json('normalize', '2,3,7', 'x1', '2x2+4x3-c', '(0,0,0,1)')
        self.assertEqual(code, 0)
        self.assertEqual([row['normal_form'] for row in data], ['(1,0,0,0)', '(0,2,4,-1)', '(0,0,0,1)'])
        self.assertEqual(data[0]['omega_multiple'], 21)

    def test_element_strings_reparse(self):
        w = WeightTriple(2, 3, 7)
        _, data, _ = run_json('normalize', '2,3,7', '5x3+3x2', 'w', '(1,-4,9,2)', '0')
        for row in data:
            x = parse_element(w, row['element'])
            self.assertEqual(x.quadruple(), row['normal_form'])
        _, data, _ = run_json('bundle', '2,4,5', 'x2+2x3', '--twist', 'x1-c')
        w = WeightTriple(2, 4, 5)
        for text in (data['twist'], data['interior'], data['determinant'], *data['cover'], *data['hull']):
            self.assertEqual(str(parse_element(w, text)), text)

    def test_bad_element(self):
        stderr = StringIO()
        self.assertEqual(run(['normalize', '2,3,7', 'x4'], stdout=StringIO(), stderr=stderr), 1)
        self.assertIn('x4', stderr.getvalue())

    def test_k0(self):
        code, data, _ = run_json('k0', '2,3,7', '0', 'c')
        self.assertEqual(code, 0)
        self.assertEqual(data[0]['rank'], 1)
        self.assertEqual(data[0]['degree'], 0)
        self.assertEqual(data[1]['degree'], 42)
        self.assertEqual(len(data[0]['coeffs']), 11)

    def test_k0_pair(self):
        code, data, _ = run_json('k0', '2,3,7', 'x2', 'x3', 'x3', 'x2', '--pair')
        self.assertEqual(code, 0)
        self.assertTrue(data['equal'])
        self.assertEqual(run(['k0', '2,3,7', 'x2', '--pair'], stdout=StringIO(), stderr=StringIO()), 1)

    def test_iso(self):
        code, data, _ = run_json('iso', '2,3,7', '0', 'x2+5x3', 'x2+x3-c')
        self.assertEqual(code, 0)
        self.assertTrue(data['isomorphic'])
        self.assertTrue(data['k0_agrees'])
        code, data, _ = run_json('iso', '2,3,7', '0', 'x2', '0')
        self.assertEqual(code, 0)
        self.assertFalse(data['isomorphic'])

    def test_negative_element_after_separator(self):
        stdout = StringIO()
        code = run(['iso', '2,3,7', '--json', '--', 'x2+5x3', '0', '-x1'], stdout=stdout, stderr=StringIO())
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(stdout.getvalue())['right'], str(ExtensionBundle.of(WeightTriple(2, 3, 7).zero, -WeightTriple(2, 3, 7).x(1))))
        self.assertEqual(run(['iso', '2,3,7', 'x2+5x3', '0', '-x1'], stdout=StringIO(), stderr=StringIO()), 1)
        help_text = load_command_class('cli', 'iso').create_parser('manage.py', 'iso').format_help()
        self.assertIn('-- -x1', ' '.join(help_text.split()))

    def test_iso_rejects_non_interior(self):
        code, _, stderr = run_json('iso', '2,3,7', 'x1', '0', '0')
        self.assertEqual(code, 1)

    def test_bundle(self):
        code, data, _ = run_json('bundle', '2,3,7', '0')
        self.assertEqual(code, 0)
        self.assertTrue(data['auslander'])
        self.assertEqual(data['slope'], '1/2')
        self.assertEqual(data['stability'], 'not_semistable')


class OrbitCommandTests(SimpleTestCase):
    def test_single_orbit(self):
        code, data, _ = run_json('orbits', '2,2,2')
        self.assertEqual(code, 0)
        self.assertEqual(data['count'], 1)
        self.assertEqual(data['method'], {'formula': 1, 'burnside': 1, 'brute': 1})
        self.assertNotIn('blocks', data)

    def test_list_blocks(self):
        code, data, _ = run_json('orbits', '2,3,7', '--list')
        self.assertEqual(code, 0)
        self.assertEqual(sum(len(block) for block in data['blocks']), 12)
        self.assertEqual(len(data['blocks']), data['count'])

    def test_tau_orbits(self):
        code, data, _ = run_json('tau-orbits', '2,4,5')
        self.assertEqual(code, 0)
        self.assertEqual(data['method']['formula'], data['method']['brute'])
        self.assertTrue(data['free'])

    def test_tubular_rejected(self):
        code, _, stderr = run_json('tau-orbits', '2,4,4')
        self.assertEqual(code, 1)
        self.assertIn('tubular weight type', stderr)

    def test_corrupted_action(self):
        with mock.patch.object(KleinAction, 'sigma', lambda self, j, x: x), \
                self.assertLogs('orbits', 'WARNING') as counting_logs, \
                self.assertLogs('cli', 'WARNING'):
            code, _, stderr = run_json('orbits', '2,3,3')
        self.assertEqual(code, 2)
        self.assertIn('fixed points of 2,3,3', counting_logs.output[0])


class TiltingCommandTests(SimpleTestCase):
    def test_grid_with_dot(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'out.dot'
            code, data, _ = run_json('tilting', '2,3,3', '--kind', 't1', '--dot', str(path))
            dot = path.read_text()
        self.assertEqual(code, 0)
        self.assertTrue(data['extension_free'])
        self.assertEqual(len(data['vertices']), 4)
        self.assertTrue(dot.startswith('digraph "t1(2,3,3)" {'))
        self.assertEqual(dot.count(' -> '), 4)

    def test_sheared_grid(self):
        code, data, _ = run_json('tilting', '2,4,5', '--kind', 't2')
        self.assertEqual(code, 0)
        self.assertEqual(len(data['vertices']), 12)

    def test_cuboid(self):
        code, data, _ = run_json('tilting', '2,3,7', '--kind', 'cub')
        self.assertEqual(code, 0)
        self.assertIsNone(data['extension_free'])
        self.assertEqual(data['note'], 'unsupported: requires general Hom formula')
        with tempfile.TemporaryDirectory() as tmp:
            code, _, stderr = run_json('tilting', '2,3,7', '--kind', 'cub', '--dot', str(Path(tmp) / 'cub.dot'))
        self.assertEqual(code, 1)
        self.assertIn('unsupported', stderr)

    def test_needs_two_first(self):
        self.assertEqual(run(['tilting', '3,3,4'], stdout=StringIO(), stderr=StringIO()), 1)
        self.assertEqual(run(['tilting', '2,3,3', '--kind', 't3'], stdout=StringIO(), stderr=StringIO()), 1)


class SelftestTests(SimpleTestCase):
    def test_degenerate_range(self):
        report = run_selftest(2)
        self.assertEqual(report.triples, 1)
        self.assertTrue(report.passed, [suite.failures for suite in report.suites])
        self.assertEqual(len(report.suites), 9)

    def test_command(self):
        code, data, _ = run_json('selftest', '--max-weight', '3')
        self.assertEqual(code, 0)
        self.assertTrue(data['passed'])
        self.assertEqual(data['triples'], 4)

    def test_bound_too_small(self):
        self.assertEqual(run(['selftest', '--max-weight', '1'], stdout=StringIO(), stderr=StringIO()), 1)

    def test_corrupted_sigma_fails(self):
        with mock.patch.object(KleinAction, 'sigma', lambda self, j, x: x), \
                self.assertLogs('orbits', 'WARNING'):
            code, data, _ = run_json('selftest', '--max-weight', '3')
        self.assertEqual(code, 2)
        self.assertFalse(data['passed'])
        failed = {suite['name'] for suite in data['suites'] if not suite['passed']}
        self.assertIn('orbit_agreement', failed)

    def test_suites_on_their_own(self):
        self.assertEqual(check_iso_criterion(WeightTriple(2, 3, 4)), [])
        self.assertEqual(check_tilting(WeightTriple(2, 4, 3)), [])

    def test_output_is_deterministic(self):
        first, second = StringIO(), StringIO()
        run(['selftest', '--max-weight', '3', '--json'], stdout=first, stderr=StringIO())
        run(['selftest', '--max-weight', '3', '--json'], stdout=second, stderr=StringIO())
        self.assertEqual(first.getvalue(), second.getvalue())
        first, second = StringIO(), StringIO()
        run(['tilting', '2,4,5', '--kind', 't2'], stdout=first, stderr=StringIO())
        run(['tilting', '2,4,5', '--kind', 't2'], stdout=second, stderr=StringIO())
        self.assertEqual(first.getvalue(), second.getvalue())


class TableTests(SimpleTestCase):
    def test_tables(self):
        table = records_table([{'suite': 'a', 'failures': [1, 2]}])
        self.assertIn('1, 2', table)
        self.assertEqual(records_table([]), '(none)')
        self.assertIn('value', key_value_table({'count': 3, 'blocks': []}, skip=('blocks',)))


class ProjectSettingsTests(SimpleTestCase):
    def test_no_database_or_models(self):
        self.assertEqual(connections['default'].settings_dict['ENGINE'], 'django.db.backends.dummy')
        for label in ('lgroup', 'k0', 'bundles', 'orbits', 'stable', 'cli'):
            self.assertEqual(list(apps.get_app_config(label).get_models()), [], label)
