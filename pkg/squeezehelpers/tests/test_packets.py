import math
import unittest

import numpy as np
import numpy.testing as npt
import scipy.integrate

from squeezehelpers.design import solve_coefficients, design_profile
from squeezehelpers.errors import NonSymplecticError
from squeezehelpers.packets import GaussianPacket, shadow_multiplier, evolve_center, covariance, uncertainty_q, \
    uncertainty_p, probability_density, monte_carlo_uncertainty, trajectory_congruence, uncertainty_shadow
from squeezehelpers.symplectic import AmplitudeProfile, SymplecticMatrix, propagate, propagate_family, rotation

FREE = SymplecticMatrix(1., 1., 0., 1.)


class GaussianPacketTestCase(unittest.TestCase):
    def test_packet(self):
        pk = GaussianPacket(1., 2., 2.)
        self.assertAlmostEqual(pk.delta_q, 0.5)
        self.assertAlmostEqual(pk.delta_p, 1.)
        npt.assert_almost_equal(pk.covariance, [[0.25, 0], [0, 1]])
        self.assertEqual(pk.as_dict(), {'q0': 1., 'p0': 2., 'kappa': 2.})
        self.assertEqual(pk.sample(10, seed=1).shape, (10, 2))
        self.assertRaises(ValueError, GaussianPacket, 0., 0., 0.)

    def test_free_evolution(self):
        pk = GaussianPacket(1., 1.)
        self.assertEqual(evolve_center(pk, FREE), (2., 1.))
        self.assertAlmostEqual(uncertainty_q(pk, FREE), 1.)
        self.assertAlmostEqual(uncertainty_p(pk, FREE), math.sqrt(0.5))
        npt.assert_almost_equal(covariance(pk, FREE), [[1, 0.5], [0.5, 0.5]])
        self.assertAlmostEqual(uncertainty_q(pk, SymplecticMatrix.identity()), pk.delta_q)

    def test_non_symplectic(self):
        self.assertRaises(NonSymplecticError, evolve_center, GaussianPacket(), SymplecticMatrix(2., 0., 0., 1.))

    def test_uncertainty_relation(self):
        pk = GaussianPacket(0.3, -1.)
        family = propagate_family(AmplitudeProfile(lambda t: 1.2 + 1.6 * np.cos(t)), np.linspace(0, 7, 36))
        for k in range(36):
            self.assertGreaterEqual(uncertainty_q(pk, family[k]) * uncertainty_p(pk, family[k]), 0.5 - 1e-12)
        for tau in (0.2, 1., 2.5):
            u = rotation(1., tau)
            self.assertAlmostEqual(uncertainty_q(pk, u) * uncertainty_p(pk, u), 0.5, delta=1e-12)
        self.assertGreater(uncertainty_q(pk, FREE) * uncertainty_p(pk, FREE), 0.5)

    def test_density(self):
        pk = GaussianPacket(1., 1.)
        total, _ = scipy.integrate.quad(lambda x: probability_density(pk, FREE, x), -np.inf, np.inf)
        self.assertAlmostEqual(total, 1., delta=1e-8)
        self.assertAlmostEqual(float(probability_density(pk, FREE, 2.)), 1 / math.sqrt(math.pi))

    def test_monte_carlo(self):
        pk = GaussianPacket(0.5, -0.3, 1.5)
        u = SymplecticMatrix(2., 1., 1., 1.)
        dq, dp = monte_carlo_uncertainty(pk, u, n=100000, seed=3)
        self.assertAlmostEqual(dq / uncertainty_q(pk, u), 1., delta=0.01)
        self.assertAlmostEqual(dp / uncertainty_p(pk, u), 1., delta=0.01)

    def test_shadow_multiplier(self):
        self.assertAlmostEqual(shadow_multiplier(0.999), 3.2905, places=4)
        self.assertAlmostEqual(shadow_multiplier(), 3.2905, places=4)
        self.assertRaises(AssertionError, shadow_multiplier, 1.)


class CongruenceTestCase(unittest.TestCase):
    def test_oscillator(self):
        packets = [GaussianPacket(1., 0.), GaussianPacket(0., 1.), GaussianPacket(-0.5, 2.)]
        congruence = trajectory_congruence(AmplitudeProfile.constant(1.), (0, 2), packets, n_samples=40, step=1e-3)
        self.assertEqual(len(congruence), 3)
        for pk, (taus, q, p) in zip(packets, congruence):
            self.assertEqual(len(taus), 41)
            npt.assert_allclose(q, pk.q0 * np.cos(taus) + pk.p0 * np.sin(taus), atol=1e-9)
            npt.assert_allclose(p, -pk.q0 * np.sin(taus) + pk.p0 * np.cos(taus), atol=1e-9)

    def test_zero_length(self):
        band = uncertainty_shadow(AmplitudeProfile.constant(1.), (0.5, 0.5), GaussianPacket(1., 0.), n_samples=4)
        npt.assert_allclose(band.q_mean, 1.)
        npt.assert_allclose(band.dq, math.sqrt(0.5))

    def test_collapsed_band(self):
        pk = GaussianPacket(1., 0.5)
        band = uncertainty_shadow(AmplitudeProfile.constant(1.), (0, 1), pk, w=0, n_samples=20, step=1e-3)
        npt.assert_array_equal(band.lo, band.q_mean)
        npt.assert_array_equal(band.hi, band.q_mean)
        self.assertEqual(len(list(band.rows())), 21)

    def test_designed_shadow(self):
        design = solve_coefficients(2, -3, 0, gamma='sin2')
        profile = design_profile(design, domain=(-math.pi / 2, 35 * math.pi / 32))
        band = uncertainty_shadow(profile, profile.domain, GaussianPacket(0., 1.), n_samples=200, step=1e-3)
        self.assertAlmostEqual(band.w, 3.2905, places=4)
        self.assertAlmostEqual(band.dq[0], math.sqrt(0.5))
        self.assertLess(band.max_extent, 10)
        # interior maximum of the width in the middle third of the interval
        peak = int(np.argmax(band.dq))
        self.assertTrue(67 <= peak < 134, peak)
        self.assertGreater(band.dq[peak], 1 / math.sqrt(2))

    def test_designed_amplification(self):
        design = solve_coefficients(2, -3, 0, gamma='sin2')
        profile = design_profile(design, domain=(-math.pi / 2, 35 * math.pi / 32))
        u = propagate(profile, -math.pi / 2, 35 * math.pi / 32, step=1e-3)
        self.assertAlmostEqual(u.u11, -1.14, delta=0.05)
        self.assertAlmostEqual(evolve_center(GaussianPacket(1., 0.), u)[0], u.u11)


if __name__ == '__main__':
    unittest.main()
