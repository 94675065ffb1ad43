import unittest
import numpy as np
import numpy.testing as npt

from squeezehelpers.helpers import normalize_phase, sign_change_brackets, vectorized_bisection


class HelpersTestCase(unittest.TestCase):
    def test_normalize_phase(self):
        self.assertAlmostEqual(normalize_phase(3 * np.pi / 2), -np.pi / 2)
        self.assertAlmostEqual(normalize_phase(-np.pi / 2, positive=True), 3 * np.pi / 2)
        npt.assert_allclose(normalize_phase(np.array([0.5, 2 * np.pi + 0.5, -7.])), [0.5, 0.5, 2 * np.pi - 7.])

    def test_sign_change_brackets(self):
        x = np.arange(6.)
        y = np.array([1., -1., -2., 0., 3., np.nan])
        lo, hi, y_lo, y_hi = sign_change_brackets(x, y)
        # the zero sample and the nan sample do not form brackets
        npt.assert_equal(lo, [0.])
        npt.assert_equal(hi, [1.])
        npt.assert_equal(y_lo, [1.])
        npt.assert_equal(y_hi, [-1.])

    def test_vectorized_bisection(self):
        calls = []

        def func(x):
            calls.append(len(x))
            return x ** 2 - 2, 2 * x

        roots, extra = vectorized_bisection(func, [0., -2.], [2., 0.], [-2., 2.], 1e-12)
        npt.assert_allclose(roots, [np.sqrt(2), -np.sqrt(2)], atol=1e-11)
        npt.assert_allclose(extra, 2 * roots)
        self.assertTrue(all(n == 2 for n in calls))

        roots, extra = vectorized_bisection(func, [], [], [], 1e-12)
        self.assertEqual(len(roots), 0)
        self.assertIsNone(extra)
