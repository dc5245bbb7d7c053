# -*- coding: utf-8 -*-
"""
orthopack.tests.test_orthopack_cli
Tests for orthopack.cli
"""
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from orthopack import cli
from orthopack import constructions as con
from orthopack.cube import Vector
from orthopack.io.json import write_json


class TestCli(unittest.TestCase):
    def setUp(self):
        unittest.TestCase.setUp(self)
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name
        self.addCleanup(self._tmp.cleanup)

    def path(self, filename):
        return os.path.join(self.tmp, filename)

    def run_cli(self, *argv):
        out = io.StringIO()
        with redirect_stdout(out), redirect_stderr(io.StringIO()):
            code = cli.run(list(argv))
        return code, out.getvalue()

    def test_construct_and_verify(self):
        code, out = self.run_cli('construct', 'thin3d', '--out',
                                 self.path('thin.json'), '--points',
                                 self.path('points.json'))
        self.assertEqual(code, 0)
        self.assertIn('301 points', out)
        code, out = self.run_cli('verify', '--set', self.path('thin.json'),
                                 '--check', 'maximal', '--check', 'slab',
                                 '--report', self.path('report.json'))
        self.assertEqual(code, 0)
        self.assertIn('maximal: pass', out)
        with open(self.path('report.json')) as f_ptr:
            report = json.load(f_ptr)
        self.assertEqual(report['schema'], 'orthopack.report/1')
        self.assertEqual(sorted(report['certificates']), ['maximal', 'slab'])
        self.assertNotIn('timings', report)
        code, _ = self.run_cli('verify', '--set', self.path('points.json'),
                               '--check', 'orthogonal', '--check',
                               'coordinate')
        self.assertEqual(code, 0)

    def test_empty_set(self):
        self.run_cli('construct', 'empty:3', '--out', self.path('empty.json'))
        code, out = self.run_cli('verify', '--set', self.path('empty.json'),
                                 '--check', 'maximal')
        self.assertEqual(code, 1)
        self.assertIn('maximal: fail', out)

    def test_deterministic_artifacts(self):
        for filename in ('first.json', 'second.json'):
            self.run_cli('construct', 'thick3d', '--out', self.path(filename))
        with open(self.path('first.json'), 'rb') as f_ptr:
            first = f_ptr.read()
        with open(self.path('second.json'), 'rb') as f_ptr:
            self.assertEqual(f_ptr.read(), first)
        F, points = cli.load_set(self.path('first.json'))
        self.assertIsNone(points)
        self.assertEqual(F.truncate(3, 3), con.thick3d().truncate(3, 3))

    def test_check_names(self):
        self.run_cli('construct', 'thin3d', '--out', self.path('thin.json'))
        for name in ('maximal', 'orthogonal', 'packing', 'slab', 'coordinate',
                     'affine-cover', 'shift', 'cover'):
            code, out = self.run_cli('verify', '--set', self.path('thin.json'),
                                     '--check', name, '--window', '3',
                                     '--kmax', '3')
            self.assertEqual(code, 0, msg=name)
        code, out = self.run_cli('verify', '--set', self.path('thin.json'),
                                 '--check', 'shift', '--window', '3',
                                 '--kmax', '3')
        self.assertIn('coordinate: pass', out)

    def test_mutant_fails(self):
        self.run_cli('construct', 'thick3d', '--without', '3', '--out',
                     self.path('mutant.json'))
        code, out = self.run_cli('verify', '--set', self.path('mutant.json'),
                                 '--check', 'maximal')
        self.assertEqual(code, 1)
        self.assertIn('witness=', out)

    def test_points_file(self):
        write_json(cli.points_artifact([Vector([0, 0, 0])], 3),
                   self.path('single.json'))
        code, _ = self.run_cli('verify', '--set', self.path('single.json'),
                               '--check', 'slab')
        self.assertEqual(code, 1)
        code, _ = self.run_cli('verify', '--set', self.path('single.json'),
                               '--check', 'maximal')
        self.assertEqual(code, 64)

    def test_product_and_cover(self):
        code, _ = self.run_cli('construct', 'thin3d', '--times', 'lattice:1',
                               '--out', self.path('product.json'))
        self.assertEqual(code, 0)
        code, _ = self.run_cli('verify', '--set', self.path('product.json'),
                               '--check', 'affine-cover', '--window', '2',
                               '--kmax', '2')
        self.assertEqual(code, 0)

    def test_branch_limit(self):
        self.run_cli('construct', 'thick3d', '--out', self.path('thick.json'))
        code, _ = self.run_cli('verify', '--set', self.path('thick.json'),
                               '--check', 'maximal', '--branch-limit', '1')
        self.assertEqual(code, 2)

    def test_finite(self):
        code, out = self.run_cli('finite', '--verify', 'maximal', '--verify',
                                 'overflow', '--verify', 'tiling')
        self.assertEqual(code, 0)
        self.assertIn('maximal: pass', out)
        code, _ = self.run_cli('finite', '--emit', 'lambda0', '--out',
                               self.path('lambda0.json'))
        self.assertEqual(code, 0)
        with open(self.path('lambda0.json')) as f_ptr:
            artifact = json.load(f_ptr)
        self.assertEqual(artifact['size'], 45)
        self.assertEqual(artifact['N'], 11025)

    def test_finite_lift(self):
        code, _ = self.run_cli('finite', '--emit', 'lift', '--out',
                               self.path('lift.json'))
        self.assertEqual(code, 0)
        with open(self.path('lift.json')) as f_ptr:
            artifact = json.load(f_ptr)
        N = artifact['N']
        starts = artifact['H']['starts']
        runs = artifact['H_runs']
        self.assertEqual(sum(stop - start for start, stop in runs),
                         len(starts))
        for (_, stop), (start, _) in zip(runs, runs[1:]):
            self.assertLess(stop, start)
        self.assertEqual(len(artifact['Lambda_unit']), 45)
        self.assertEqual(
            [Fraction(x)*N for x in artifact['Lambda_unit']],
            sorted(artifact['Lambda']['residues']))
        self.assertEqual(len(artifact['Gamma_unit']),
                         len(artifact['Gamma']['residues']))

    def test_report(self):
        self.run_cli('finite', '--verify', 'overflow', '--report',
                     self.path('finite.json'))
        code, _ = self.run_cli('report', self.path('finite.json'),
                               '--format', 'csv', '--out',
                               self.path('table.csv'))
        self.assertEqual(code, 0)
        with open(self.path('table.csv')) as f_ptr:
            self.assertTrue(f_ptr.readline().startswith('label,kind'))

    def test_errors(self):
        self.assertEqual(self.run_cli()[0], 64)
        self.assertEqual(self.run_cli('construct', 'cube')[0], 64)
        self.assertEqual(self.run_cli('finite', '--r', '9')[0], 64)
        self.assertEqual(self.run_cli('construct', 'thin3d', '--witness',
                                      'alpha=sqrt4')[0], 64)
        self.assertEqual(self.run_cli('verify', '--set',
                                      self.path('missing.json'), '--check',
                                      'maximal')[0], 74)


if __name__ == '__main__':
    unittest.main()
