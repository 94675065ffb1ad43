import argparse
import contextlib
import filecmp
import io
import math
import os
import shutil
import tempfile
import unittest

import numpy.testing as npt

from squeezehelpers import configuration
from squeezehelpers.cli import main, parse_number, parse_packets, EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, MANIFEST_NAME
from squeezehelpers.export import read_json, read_csv, write_json


def run(*argv):
    with contextlib.redirect_stdout(io.StringIO()):
        return main(['-q'] + list(argv))


class ParseTestCase(unittest.TestCase):
    def test_parse_number(self):
        self.assertEqual(parse_number('9/5'), 1.8)
        self.assertEqual(parse_number('-0.25'), -0.25)
        self.assertEqual(parse_number('1e-3'), 1e-3)
        self.assertAlmostEqual(parse_number('pi'), math.pi)
        self.assertAlmostEqual(parse_number('-pi/2'), -math.pi / 2)
        self.assertAlmostEqual(parse_number('35pi/32'), 35 * math.pi / 32)
        self.assertAlmostEqual(parse_number('2*pi'), 2 * math.pi)
        for text in ('inf', 'nan', 'abc', '1/0', ''):
            self.assertRaises(argparse.ArgumentTypeError, parse_number, text)

    def test_parse_packets(self):
        packets = parse_packets('0,1;1,-1,2')
        self.assertEqual([pk.as_dict() for pk in packets],
                         [{'q0': 0., 'p0': 1., 'kappa': 1.}, {'q0': 1., 'p0': -1., 'kappa': 2.}])
        for text in ('1', '1,2,3,4', '0,0,-1', ';'):
            self.assertRaises(argparse.ArgumentTypeError, parse_packets, text)


class CommandTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        configuration.set_target_profile('default')
        self._tmp.cleanup()

    def test_usage_errors(self):
        self.assertEqual(run('unknown'), EXIT_USAGE)
        self.assertEqual(run('design', '--b', '1'), EXIT_USAGE)
        self.assertEqual(run('design', '--b', '0', '--c', '1', '--out', self.tmp), EXIT_USAGE)
        self.assertEqual(run('units', 'to-dimensionless', '--context', '{"mass_g": 1}', '--out', self.tmp),
                         EXIT_USAGE)

    def test_units(self):
        self.assertEqual(run('units', 'to-physical', '--beta0', '1.217', '--beta1', '0.844', '--out', self.tmp),
                         EXIT_OK)
        conversion = read_json(os.path.join(self.tmp, 'conversion.json'))
        self.assertAlmostEqual(conversion['drive']['phi0_V'] / 1.2705, 1., delta=1e-3)
        self.assertAlmostEqual(conversion['drive']['phi1_V'] / 1.7622, 1., delta=1e-3)
        self.assertAlmostEqual(conversion['energy_scale_eV'], 1.044, places=3)
        manifest = read_json(os.path.join(self.tmp, MANIFEST_NAME))
        self.assertEqual(manifest['command'], 'units')
        self.assertEqual(set(manifest['outputs']), {'conversion'})

    def test_design(self):
        self.assertEqual(run('design', '--b', '2', '--c', '-3', '--gamma', 'sin2', '--samples', '101',
                             '--out', self.tmp), EXIT_OK)
        report = read_json(os.path.join(self.tmp, 'report.json'))
        self.assertTrue(report['suitable'])
        npt.assert_allclose(report['design']['a'], [65 / 32, 0, -1 / 48, 1 / 96], atol=1e-12)
        header, rows = read_csv(os.path.join(self.tmp, 'profile.csv'))
        self.assertEqual(header, ['tau', 'beta', 'gamma', 'theta'])
        self.assertEqual(len(rows), 101)
        self.assertAlmostEqual(float(rows[50][1]), 0.75, places=6)

    def test_design_domain(self):
        design_dir = os.path.join(self.tmp, 'design')
        self.assertEqual(run('design', '--b', '2', '--c', '-3', '--gamma', 'sin2', '--samples', '11',
                             '--out', design_dir), EXIT_OK)
        design_file = os.path.join(design_dir, 'design.json')
        self.assertEqual(run('propagate', '--design', design_file, '--interval', '0', '2', '--samples', '10',
                             '--out', self.tmp), EXIT_USAGE)
        self.assertEqual(run('propagate', '--design', design_file, '--extend', '--interval', '-1.5', '2',
                             '--samples', '10', '--step', '1e-3', '--out', self.tmp), EXIT_OK)

    def test_propagate(self):
        self.assertEqual(run('propagate', '--beta', '0', '--interval', '0', '1', '--samples', '10',
                             '--packets', '1,1;0,2', '--out', self.tmp), EXIT_OK)
        final = read_json(os.path.join(self.tmp, 'final.json'))
        npt.assert_allclose(final['matrix'], [[1, 1], [0, 1]], atol=1e-12)
        header, rows = read_csv(os.path.join(self.tmp, 'trajectories.csv'))
        self.assertEqual(header, ['packet', 'tau', 'q', 'p'])
        self.assertEqual(len(rows), 22)
        self.assertAlmostEqual(float(rows[10][2]), 2.)

    def test_shadow(self):
        self.assertEqual(run('shadow', '--beta', '1', '--interval', '0', '1', '--samples', '5', '--packet', '1,0',
                             '--w', '0', '--out', self.tmp), EXIT_OK)
        header, rows = read_csv(os.path.join(self.tmp, 'shadow.csv'))
        self.assertEqual(header, ['tau', 'qmean', 'dq', 'lo', 'hi'])
        for row in rows:
            self.assertEqual(row[1], row[3])
            self.assertEqual(row[1], row[4])

    def test_scan_and_rerun(self):
        out = os.path.join(self.tmp, 'scan')
        self.assertEqual(run('scan', '--beta0-range', '0.002', '0.01', '--beta1-range', '0', '0.01',
                             '--grid', '3', '3', '--step', '0.01', '--out', out), EXIT_OK)
        summary = read_json(os.path.join(out, 'summary.json'))
        self.assertIsNone(summary['intersection'])
        self.assertEqual(summary['curve_points'], {'U12Zero': 0, 'U21Zero': 0})
        header, rows = read_csv(os.path.join(out, 'raster.csv'))
        self.assertEqual(header, ['beta0', 'beta1', 'trace', 'regime'])
        self.assertEqual(len(rows), 9)

        copy = os.path.join(self.tmp, 'copy')
        shutil.copytree(out, copy)
        self.assertEqual(run('rerun', os.path.join(out, MANIFEST_NAME)), EXIT_OK)
        self.assertEqual(sorted(os.listdir(out)), sorted(os.listdir(copy)))
        for name in ('raster.csv', 'curves.csv', 'summary.json', MANIFEST_NAME):
            self.assertTrue(filecmp.cmp(os.path.join(out, name), os.path.join(copy, name), shallow=False), name)

        again = os.path.join(self.tmp, 'again')
        self.assertEqual(run('rerun', os.path.join(out, MANIFEST_NAME), '--out', again), EXIT_OK)
        for name in ('raster.csv', 'curves.csv', 'summary.json'):
            self.assertTrue(filecmp.cmp(os.path.join(again, name), os.path.join(out, name), shallow=False), name)
        self.assertEqual(run('rerun', os.path.join(out, MANIFEST_NAME), '--out', out), EXIT_USAGE)

    def test_rerun_mismatch(self):
        out = os.path.join(self.tmp, 'scan')
        self.assertEqual(run('scan', '--beta0-range', '0.002', '0.01', '--beta1-range', '0', '0.01',
                             '--grid', '3', '3', '--step', '0.01', '--out', out), EXIT_OK)
        filename = os.path.join(out, MANIFEST_NAME)
        manifest = read_json(filename)
        manifest['outputs']['raster']['sha256'] = '0' * 64
        write_json(filename, manifest)
        with open(filename, 'rb') as f:
            tampered = f.read()

        # the baseline is never overwritten, so the mismatch is reported on every rerun
        for _ in range(2):
            self.assertEqual(run('rerun', filename), EXIT_MISMATCH)
            with open(filename, 'rb') as f:
                self.assertEqual(f.read(), tampered)

    def test_rerun_invalid(self):
        filename = os.path.join(self.tmp, 'other.json')
        with open(filename, 'w') as f:
            f.write('{"a": 1}')
        self.assertEqual(run('rerun', filename), EXIT_USAGE)


if __name__ == '__main__':
    unittest.main()
