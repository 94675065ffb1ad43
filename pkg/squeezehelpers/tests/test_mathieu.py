import math
import unittest
import warnings

import numpy as np
import numpy.testing as npt

from squeezehelpers.errors import IntersectionNotFoundError
from squeezehelpers.mathieu import OPERATION_INTERVAL, MathieuParams, mathieu_profile, monodromy, monodromy_batch, \
    ScanGrid, strutt_map, CurveKind, SqueezeCurve, trace_curve, find_intersection
from squeezehelpers.symplectic import Regime, classify


class MathieuParamsTestCase(unittest.TestCase):
    def test_beta(self):
        self.assertAlmostEqual(MathieuParams(1, 0).beta(0.7), 1)
        params = MathieuParams(0, 0.5)
        self.assertAlmostEqual(params.beta(0), 1)
        self.assertAlmostEqual(params.beta(math.pi), -1)
        self.assertAlmostEqual(MathieuParams(1.217, 0.844).beta(math.pi / 2), 1.217)

        profile = mathieu_profile(MathieuParams(1, 0.5))
        npt.assert_almost_equal(profile.evaluate(0.)[0], 2)
        self.assertEqual(MathieuParams(1, 0.5), MathieuParams(1., 0.5))

    def test_monodromy(self):
        u = monodromy(MathieuParams(1.054, 0.646))
        npt.assert_allclose(u.array, [[0.3431, -1.1634], [0.0537, 2.7327]], atol=2e-3)
        u = monodromy(MathieuParams(1.577, 1.231))
        npt.assert_allclose(u.array, [[0.2605, 3.4071], [0.1562, 5.8825]], atol=2e-3)
        u = monodromy(MathieuParams(1.774, 1.454))
        npt.assert_allclose(u.array, [[0.3663, 5.3636], [0.1539, 4.9825]], atol=2e-3)

    def test_squeezing_monodromy(self):
        u = monodromy(MathieuParams(1.217, 0.844))
        self.assertAlmostEqual(u.u11, 0.227, delta=5e-3)
        self.assertAlmostEqual(u.u22, 4.394, delta=5e-3)
        self.assertLess(abs(u.u12), 0.1)
        self.assertLess(abs(u.u21), 0.1)
        self.assertAlmostEqual(u.det, 1, delta=1e-9)
        self.assertIs(classify(u).regime, Regime.SQUEEZING)

    def test_constant_amplitude(self):
        u = monodromy(MathieuParams(0.1, 0))
        self.assertAlmostEqual(u.trace, 2 * math.cos(2 * math.pi * math.sqrt(0.1)), delta=1e-6)
        self.assertIs(classify(u).regime, Regime.STABLE)

        u = monodromy(MathieuParams(0.25, 0))
        npt.assert_allclose(u.array, -np.eye(2), atol=1e-8)
        self.assertIs(classify(u).regime, Regime.THRESHOLD)

        u = monodromy(MathieuParams(0, 0))
        self.assertAlmostEqual(u.trace, 2)
        self.assertAlmostEqual(u.u12, 2 * math.pi)
        self.assertIs(classify(u).regime, Regime.THRESHOLD)

    def test_trace_invariance(self):
        params = MathieuParams(1.4, 0.9)
        traces = [monodromy(params, tau0).trace for tau0 in (0, 1, math.pi / 2)]
        npt.assert_allclose(traces, traces[0], atol=1e-6)

    def test_monodromy_batch(self):
        beta0 = np.array([[1.054], [1.577]])
        beta1 = np.array([0.646, 1.231])
        matrices = monodromy_batch(beta0, beta1, step=1e-3)
        self.assertEqual(matrices.shape, (2, 2, 2, 2))
        npt.assert_allclose(matrices[1, 1], monodromy(MathieuParams(1.577, 1.231)).array, atol=1e-6)


class ScanTestCase(unittest.TestCase):
    def test_grid(self):
        grid = ScanGrid((0, 1), (0, 2), (3, 5))
        npt.assert_almost_equal(grid.beta0_values, [0, 0.5, 1])
        npt.assert_almost_equal(grid.beta1_values, [0, 0.5, 1, 1.5, 2])
        self.assertEqual(grid.interval, OPERATION_INTERVAL)
        self.assertEqual(ScanGrid.default().shape, (221, 221))

        self.assertRaises(ValueError, ScanGrid, (1, 0), (0, 1), (3, 3))
        self.assertRaises(ValueError, ScanGrid, (0, 1), (0, 0), (3, 3))
        self.assertRaises(ValueError, ScanGrid, (0, 1), (0, 1), (1, 3))

    def test_strutt_map(self):
        grid = ScanGrid((0.1, 1.3), (0, 0.9), (4, 3))
        smap = strutt_map(grid, step=1e-2, parallel=False)
        self.assertEqual(smap.flagged_count, 0)
        self.assertEqual(smap.matrices.shape, (4, 3, 2, 2))
        for i, j in ((0, 0), (2, 1), (3, 2)):
            expected = monodromy_batch(grid.beta0_values[i], grid.beta1_values[j], step=1e-2)
            npt.assert_allclose(smap.matrix(i, j).array, expected, atol=1e-12)
            self.assertIs(smap.regime(i, j), Regime.from_trace(smap.traces[i, j]))

        rows = list(smap.rows())
        self.assertEqual(len(rows), 12)
        self.assertEqual(rows[0][:2], (0.1, 0.))
        self.assertEqual(sum(smap.counts().values()), 12)
        self.assertIs(smap.report(0, 0).regime, Regime.STABLE)

    def test_parallel_scan(self):
        grid = ScanGrid((0.5, 1.5), (0.2, 1.0), (3, 3))
        serial = strutt_map(grid, step=1e-2, parallel=False)
        parallel = strutt_map(grid, step=1e-2, parallel=True, max_workers=2)
        npt.assert_array_equal(serial.matrices, parallel.matrices)

    def test_flagged(self):
        grid = ScanGrid((-1e6, -9e5), (0, 1), (2, 2))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            smap = strutt_map(grid, step=0.1, parallel=False)
        self.assertEqual(smap.flagged_count, 4)
        self.assertTrue(caught)
        self.assertIsNone(smap.regime(0, 0))
        self.assertEqual(smap.counts(), {'Flagged': 4})
        self.assertRaises(ValueError, smap.report, 0, 0)


class CurveTestCase(unittest.TestCase):
    grid = ScanGrid((1.20, 1.26), (0.78, 0.90), (13, 7))

    def test_intersection(self):
        u12_curve = trace_curve(CurveKind.U12_ZERO, self.grid, step=5e-3, parallel=False)
        u21_curve = trace_curve(CurveKind.U21_ZERO, self.grid, step=5e-3, parallel=False)
        self.assertFalse(u12_curve.is_empty)
        self.assertEqual(len(u21_curve), 13)
        self.assertEqual(len(u21_curve.branches), 1)

        for beta0, beta1, lam in u21_curve.points:
            m = monodromy_batch(beta0, beta1, step=5e-3)
            self.assertLess(abs(m[1, 0]), 1e-6)
            self.assertAlmostEqual(lam, m[0, 0], delta=1e-6)

        params, matrix = find_intersection(u12_curve, u21_curve)
        self.assertAlmostEqual(params.beta0, 1.229490, delta=1e-3)
        self.assertAlmostEqual(params.beta1, 0.835709, delta=1e-3)
        self.assertAlmostEqual(matrix.u11, 0.23568, delta=1e-3)
        self.assertLess(abs(matrix.u12), 1e-6)
        self.assertLess(abs(matrix.u21), 1e-6)

        # the reported pair lies close to the double zero
        self.assertLess(math.hypot(params.beta0 - 1.217, params.beta1 - 0.844), 0.02)

    def test_no_crossing(self):
        empty = SqueezeCurve(CurveKind.U12_ZERO, [], OPERATION_INTERVAL)
        self.assertTrue(empty.is_empty)
        self.assertEqual(empty.points.shape, (0, 3))
        other = SqueezeCurve(CurveKind.U21_ZERO, [[[1, 0.5, 0.2], [1.1, 0.6, 0.2]]], OPERATION_INTERVAL)
        self.assertRaises(IntersectionNotFoundError, find_intersection, empty, other)

    def test_empty_region(self):
        grid = ScanGrid((0.002, 0.01), (0, 0.01), (3, 3))
        for kind in CurveKind:
            self.assertTrue(trace_curve(kind, grid, step=1e-2, parallel=False).is_empty)
