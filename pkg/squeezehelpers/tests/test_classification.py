import math
import unittest

import numpy.testing as npt

from squeezehelpers.errors import NonSymplecticError
from squeezehelpers.symplectic import SymplecticMatrix, Regime, classify, rotation


class ClassificationTestCase(unittest.TestCase):
    def test_from_trace(self):
        self.assertIs(Regime.from_trace(1.5), Regime.STABLE)
        self.assertIs(Regime.from_trace(-2.0000001), Regime.THRESHOLD)
        self.assertIs(Regime.from_trace(2.5), Regime.SQUEEZING)
        self.assertIs(Regime.from_trace(-2.5), Regime.SQUEEZING)
        self.assertIs(Regime.from_trace(2.01, band=0.1), Regime.THRESHOLD)

    def test_stable(self):
        report = classify(rotation(1, 0.3))
        self.assertIs(report.regime, Regime.STABLE)
        self.assertAlmostEqual(report.sigma, 0.3)
        self.assertAlmostEqual(report.eigenvalues[0], complex(math.cos(0.3), math.sin(0.3)))
        self.assertIsNone(report.squeezing_factor)

    def test_squeezing(self):
        report = classify(SymplecticMatrix(2., 0., 0., 0.5))
        self.assertIs(report.regime, Regime.SQUEEZING)
        self.assertAlmostEqual(report.sigma, math.log(2))
        self.assertAlmostEqual(report.squeezing_factor, 2)
        npt.assert_almost_equal(report.eigen_rows[0], [1, 0])
        npt.assert_almost_equal(report.eigen_rows[1], [0, 1])

        report = classify(SymplecticMatrix(-2., 0., 0., -0.5))
        self.assertAlmostEqual(report.gamma_trace, -2.5)
        self.assertAlmostEqual(report.sigma, math.log(2))
        self.assertAlmostEqual(report.squeezing_factor, -2)

    def test_eigen_rows(self):
        u = SymplecticMatrix(2., 3., 1., 2.)
        report = classify(u)
        for value, row in zip(report.eigenvalues, report.eigen_rows):
            npt.assert_almost_equal(row @ u.array, value * row)
            self.assertAlmostEqual(max(row, key=abs), 1)

    def test_threshold(self):
        report = classify(SymplecticMatrix(1., 1., 0., 1.))
        self.assertIs(report.regime, Regime.THRESHOLD)
        self.assertAlmostEqual(report.sigma, 0)
        self.assertEqual(report.as_dict()['regime'], 'Threshold')

    def test_not_symplectic(self):
        self.assertRaises(NonSymplecticError, classify, SymplecticMatrix(2., 0., 0., 1.))
