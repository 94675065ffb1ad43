"""
Conversion between the dimensionless model and laboratory quantities.

All internal quantities are Gaussian CGS. Volts and electron volts only appear at the interface. The dimensionless
time is ``tau = omega t``, i.e. the time scale is ``1 / omega`` and one drive period lasts ``2 pi / omega``.
"""
import math

import numpy as np
import scipy.constants as const

from squeezehelpers.mathieu.params import MathieuParams
from squeezehelpers.symplectic.profile import AmplitudeProfile

SPEED_OF_LIGHT = const.c * 1e2  # cm/s
ELEMENTARY_CHARGE = const.e * const.c * 10  # esu
PROTON_MASS = const.m_p * 1e3  # g
HBAR = const.hbar * 1e7  # erg s
ERG_PER_EV = const.e * 1e7
VOLT_PER_STATVOLT = const.c * 1e-6


class PhysicalContext:
    """
    Particle and trap parameters.

    :param mass: Particle mass in grams.
    :param charge: Particle charge in esu.
    :param r0: Trap radius in centimeters.
    :param omega: Drive angular frequency in rad/s.
    :param hbar: Action unit in erg s, defaults to the reduced Planck constant.
    """

    def __init__(self, mass, charge, r0, omega, hbar=HBAR):
        for name, value in (('mass', mass), ('charge', charge), ('r0', r0), ('omega', omega), ('hbar', hbar)):
            if not value > 0:
                raise ValueError('%s must be positive, got %r' % (name, value))
        self.mass = float(mass)
        self.charge = float(charge)
        self.r0 = float(r0)
        self.omega = float(omega)
        self.hbar = float(hbar)

    @classmethod
    def proton(cls, r0=10., omega=1e5):
        return cls(PROTON_MASS, ELEMENTARY_CHARGE, r0, omega)

    @classmethod
    def from_radio_wavelength(cls, wavelength, mass=PROTON_MASS, charge=ELEMENTARY_CHARGE, r0=10.):
        """
        Context driven by a radio wave of the given free space wavelength, with ``omega = c / wavelength``.

        :param wavelength: Wavelength in centimeters.
        """
        return cls(mass, charge, r0, SPEED_OF_LIGHT / wavelength)

    @classmethod
    def from_dict(cls, d):
        """
        Create a context from ``{mass_g, charge_e, r0_cm, omega_rad_s, hbar}``; ``hbar`` is optional.
        """
        try:
            return cls(float(d['mass_g']), float(d['charge_e']) * ELEMENTARY_CHARGE, float(d['r0_cm']),
                       float(d['omega_rad_s']), float(d.get('hbar', HBAR)))
        except KeyError as e:
            raise ValueError('Context is missing the key %s' % e)

    def to_dict(self):
        return {'mass_g': self.mass, 'charge_e': self.charge / ELEMENTARY_CHARGE, 'r0_cm': self.r0,
                'omega_rad_s': self.omega, 'hbar': self.hbar}

    @property
    def time_scale(self):
        """
        Seconds per unit of dimensionless time.
        """
        return 1 / self.omega

    @property
    def period(self):
        """
        Duration of one drive period in seconds.
        """
        return 2 * math.pi / self.omega

    @property
    def energy_scale(self):
        """
        ``m omega**2 r0**2`` in erg.
        """
        return self.mass * self.omega ** 2 * self.r0 ** 2

    @property
    def energy_scale_ev(self):
        return self.energy_scale / ERG_PER_EV

    @property
    def voltage_scale(self):
        """
        Potential in volts corresponding to ``beta = 1``.
        """
        return self.energy_scale / self.charge * VOLT_PER_STATVOLT

    def to_dimensionless(self, q, p):
        """
        Scale a phase-space point given in cm and g cm/s to dimensionless variables.
        """
        t = self.time_scale
        return q * math.sqrt(self.mass / (self.hbar * t)), p * math.sqrt(t / (self.hbar * self.mass))

    def to_physical(self, q_d, p_d):
        t = self.time_scale
        return q_d / math.sqrt(self.mass / (self.hbar * t)), p_d / math.sqrt(t / (self.hbar * self.mass))

    def __repr__(self):
        return 'PhysicalContext(mass=%g g, charge=%g esu, r0=%g cm, omega=%g rad/s)' % (
            self.mass, self.charge, self.r0, self.omega)


class TrapDrive:
    """
    Trap potential ``Phi(t) = phi0 + phi1 cos(omega t)``.

    :param phi0: Constant part in volts.
    :param phi1: Oscillating amplitude in volts.
    """

    def __init__(self, phi0, phi1):
        self.phi0 = float(phi0)
        self.phi1 = float(phi1)
        assert math.isfinite(self.phi0) and math.isfinite(self.phi1)

    def as_dict(self):
        return {'phi0_V': self.phi0, 'phi1_V': self.phi1}

    def __repr__(self):
        return 'TrapDrive(phi0=%.6g V, phi1=%.6g V)' % (self.phi0, self.phi1)


def trap_to_dimensionless(ctx, drive):
    """
    ``beta0 = e phi0 / (omega**2 r0**2 m)`` and ``2 beta1 = e phi1 / (omega**2 r0**2 m)``.

    :type ctx: PhysicalContext
    :type drive: TrapDrive
    :rtype: MathieuParams
    """
    scale = ctx.voltage_scale
    return MathieuParams(drive.phi0 / scale, drive.phi1 / (2 * scale))


def required_voltages(ctx, params):
    """
    Drive voltages realising the given Mathieu parameters.

    :type ctx: PhysicalContext
    :type params: MathieuParams
    :rtype: TrapDrive
    """
    scale = ctx.voltage_scale
    return TrapDrive(params.beta0 * scale, 2 * params.beta1 * scale)


def magnetic_beta(ctx, field):
    """
    Amplitude profile of a particle in a solenoid with field ``B(t)``, ``beta = (e T B(T tau) / (2 m c))**2``.

    :param field: Callable mapping times in seconds to the field in gauss, or a constant.
    :rtype: AmplitudeProfile
    """
    field = field if callable(field) else (lambda t, b=float(field): np.full(np.shape(t), b))
    t_scale = ctx.time_scale
    factor = ctx.charge * t_scale / (2 * ctx.mass * SPEED_OF_LIGHT)

    def beta(tau):
        return (factor * np.asarray(field(t_scale * np.asarray(tau)), dtype=float)) ** 2

    return AmplitudeProfile(beta, 1., name='solenoid')


def required_magnetic_field(ctx, profile, eps=1e-12):
    """
    Field ``B(t) = (2 m c / (e T)) sqrt(beta(t / T))`` realising a non-negative amplitude.

    :param profile: Amplitude profile or callable ``beta(tau)``.
    :param eps: Tolerance for negative amplitudes, which are clipped to zero.
    :return: Callable mapping times in seconds to the field in gauss.
    :raises ValueError: When called at times where ``beta < -eps``.
    """
    beta = profile.beta if isinstance(profile, AmplitudeProfile) else profile
    t_scale = ctx.time_scale
    factor = 2 * ctx.mass * SPEED_OF_LIGHT / (ctx.charge * t_scale)

    def field(t):
        values = np.asarray(beta(np.asarray(t, dtype=float) / t_scale), dtype=float)
        if np.any(values < -eps):
            raise ValueError('Negative amplitude %g cannot be realised by a magnetic field' % np.min(values))
        return factor * np.sqrt(np.clip(values, 0, None))

    return field
