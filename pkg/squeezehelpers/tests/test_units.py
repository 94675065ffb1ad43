import math
import unittest

import numpy as np
import numpy.testing as npt

from squeezehelpers.mathieu import MathieuParams
from squeezehelpers.symplectic import AmplitudeProfile
from squeezehelpers.units import PhysicalContext, TrapDrive, trap_to_dimensionless, required_voltages, \
    magnetic_beta, required_magnetic_field, PROTON_MASS, SPEED_OF_LIGHT


class PhysicalContextTestCase(unittest.TestCase):
    def test_proton_scales(self):
        ctx = PhysicalContext.proton()
        self.assertAlmostEqual(ctx.energy_scale_ev, 1.0440, places=3)
        self.assertAlmostEqual(ctx.voltage_scale, 1.0440, places=3)
        self.assertAlmostEqual(ctx.omega * ctx.period, 2 * math.pi)
        self.assertAlmostEqual(ctx.time_scale, 1e-5)

    def test_radio_wavelength(self):
        ctx = PhysicalContext.from_radio_wavelength(100.)
        self.assertAlmostEqual(ctx.omega / (SPEED_OF_LIGHT / 100.), 1.)

    def test_phase_space(self):
        ctx = PhysicalContext.proton()
        for q, p in ((1e-6, 2e-20), (-3e-5, 0.), (0., -1e-19)):
            q_d, p_d = ctx.to_dimensionless(q, p)
            q_back, p_back = ctx.to_physical(q_d, p_d)
            self.assertAlmostEqual(q_back / q if q else q_back, 1. if q else 0., delta=1e-12)
            self.assertAlmostEqual(p_back / p if p else p_back, 1. if p else 0., delta=1e-12)

    def test_dict(self):
        ctx = PhysicalContext.proton(r0=5., omega=2e5)
        restored = PhysicalContext.from_dict(ctx.to_dict())
        self.assertAlmostEqual(restored.mass / PROTON_MASS, 1.)
        self.assertAlmostEqual(restored.charge / ctx.charge, 1.)
        self.assertEqual(restored.r0, 5.)
        self.assertEqual(restored.omega, 2e5)
        self.assertRaises(ValueError, PhysicalContext.from_dict, {'mass_g': 1.})
        self.assertRaises(ValueError, PhysicalContext, PROTON_MASS, 1., -1., 1.)


class TrapTestCase(unittest.TestCase):
    def test_required_voltages(self):
        drive = required_voltages(PhysicalContext.proton(), MathieuParams(1.217, 0.844))
        self.assertAlmostEqual(drive.phi0 / 1.2705, 1., delta=1e-3)
        self.assertAlmostEqual(drive.phi1 / 1.7622, 1., delta=1e-3)
        self.assertEqual(set(drive.as_dict()), {'phi0_V', 'phi1_V'})

    def test_radius_scaling(self):
        params = MathieuParams(1.217, 0.844)
        small = required_voltages(PhysicalContext.proton(r0=1.), params)
        large = required_voltages(PhysicalContext.proton(r0=10.), params)
        self.assertAlmostEqual(large.phi0 / small.phi0, 100., delta=1e-9)
        self.assertAlmostEqual(large.phi1 / small.phi1, 100., delta=1e-9)

    def test_round_trip(self):
        ctx = PhysicalContext.proton(r0=2., omega=3e6)
        for beta0, beta1 in ((1.054, 0.646), (1.774, 1.454), (-0.3, 0.1)):
            params = trap_to_dimensionless(ctx, required_voltages(ctx, MathieuParams(beta0, beta1)))
            self.assertAlmostEqual(params.beta0, beta0, delta=1e-12)
            self.assertAlmostEqual(params.beta1, beta1, delta=1e-12)

    def test_zero_drive(self):
        params = trap_to_dimensionless(PhysicalContext.proton(), TrapDrive(0., 0.))
        self.assertEqual((params.beta0, params.beta1), (0., 0.))


class MagneticTestCase(unittest.TestCase):
    def test_round_trip(self):
        ctx = PhysicalContext.proton()
        profile = AmplitudeProfile(lambda tau: 0.5 + 0.25 * np.cos(tau))
        field = required_magnetic_field(ctx, profile)
        recovered = magnetic_beta(ctx, field)
        taus = np.linspace(-2, 2, 9)
        npt.assert_allclose(recovered.beta(taus), profile.beta(taus), rtol=1e-12)

    def test_constant_field(self):
        ctx = PhysicalContext.proton()
        field = required_magnetic_field(ctx, lambda tau: np.ones_like(tau))
        self.assertAlmostEqual(float(magnetic_beta(ctx, float(field(0.))).beta(0.3)), 1.)

    def test_negative_amplitude(self):
        field = required_magnetic_field(PhysicalContext.proton(), lambda tau: -np.ones_like(tau))
        self.assertRaises(ValueError, field, 0.)


if __name__ == '__main__':
    unittest.main()
