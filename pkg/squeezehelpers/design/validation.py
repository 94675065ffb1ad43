import logging
import math
from collections import namedtuple

import numpy as np

from squeezehelpers.design.synthesis import beta_from_theta, design_profile
from squeezehelpers.design.theta import Theta
from squeezehelpers.design.toeplitz import ThetaDesign
from squeezehelpers.errors import MalformedDesignError
from squeezehelpers.helpers import normalize_phase
from squeezehelpers.symplectic.profile import AmplitudeProfile
from squeezehelpers.symplectic.propagator import propagate, propagate_symmetric

logger = logging.getLogger(__name__)

Eigentrajectories = namedtuple('Eigentrajectories', ['taus', 'eigenvalues', 're_plus', 're_minus', 'is_real_pair',
                                                     'phase'])
SuitabilityDiagnostics = namedtuple('SuitabilityDiagnostics', ['min_beta', 'sign_changes', 'taus', 'beta',
                                                               'eigentrajectories'])


class DesignReport:
    """
    Result of :func:`validate_design`.

    The three conditions are:

    1. at every zero of theta, ``theta' = +-2``,
    2. at zeros of theta where also ``theta''' = 0``, ``beta' = 0``,
    3. where ``theta' = 0`` but ``theta != 0``, ``-beta theta**2 = theta'' theta / 2 + gamma``.

    Each condition has a residual and a flag that is true if the residual is below the tolerance.
    """

    def __init__(self):
        self.condition1_residual = 0.
        self.condition2_residual = 0.
        self.condition3_residual = 0.
        self.condition1_ok = True
        self.condition2_ok = True
        self.condition3_ok = True
        self.beta_endpoint_residual = None
        self.singular_points = []
        self.squeezed_fourier_points = []
        self.endpoint_matrix = None
        self.roundtrip_u12_residual = None
        self.roundtrip_u11_residual = None
        self.min_beta = None
        self.beta_sign_changes = None

    @property
    def ok(self):
        return self.condition1_ok and self.condition2_ok and self.condition3_ok

    def as_dict(self):
        return {
            'condition1_ok': self.condition1_ok,
            'condition1_residual': self.condition1_residual,
            'condition2_ok': self.condition2_ok,
            'condition2_residual': self.condition2_residual,
            'condition3_ok': self.condition3_ok,
            'condition3_residual': self.condition3_residual,
            'beta_endpoint_residual': self.beta_endpoint_residual,
            'singular_points': [[tau, d_theta] for tau, d_theta in self.singular_points],
            'squeezed_fourier_points': list(self.squeezed_fourier_points),
            'endpoint_matrix': None if self.endpoint_matrix is None else self.endpoint_matrix.to_list(),
            'roundtrip_u12_residual': self.roundtrip_u12_residual,
            'roundtrip_u11_residual': self.roundtrip_u11_residual,
            'min_beta': self.min_beta,
            'beta_sign_changes': self.beta_sign_changes
        }


def count_sign_changes(values, eps=1e-9):
    """
    Number of sign changes of a sampled function, ignoring samples with ``|value| <= eps``.
    """
    values = np.asarray(values, dtype=float)
    signs = np.sign(values[np.abs(values) > eps])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def validate_design(theta, T=math.pi / 2, tol=1e-6, derivative_tol=1e-5, n_samples=1001, check_roundtrip=True,
                    step=None):
    """
    Check the regularity conditions of a designed theta on ``[-T, T]``.

    :param theta: The designed function.
    :type theta: Theta
    :param T: Half width of the interval.
    :param tol: Tolerance of conditions 1 and 3.
    :param derivative_tol: Tolerance of the finite difference ``beta'`` in condition 2.
    :param n_samples: Number of samples for the sign analysis of ``beta``.
    :param check_roundtrip: Propagate the synthesised profile over ``[-T, T]`` and record the end point matrix.
    :param step: Maximum RK4 step of the round trip propagation.
    :rtype: DesignReport
    """
    assert isinstance(theta, Theta)
    report = DesignReport()

    zeros = theta.zeros(0, T)
    report.singular_points = [(float(z), float(theta.derivative(z, 1))) for z in zeros]
    if report.singular_points:
        report.condition1_residual = max(abs(abs(d) - 2) for _, d in report.singular_points)
    report.condition1_ok = report.condition1_residual <= tol

    h = 1e-4
    for z, _ in report.singular_points:
        if abs(float(theta.derivative(z, 3))) > 1e-9:
            continue
        try:
            slope = (beta_from_theta(theta, z + h) - beta_from_theta(theta, z - h)) / (2 * h)
        except MalformedDesignError:
            slope = math.inf
        report.condition2_residual = max(report.condition2_residual, abs(slope))
    report.condition2_ok = report.condition2_residual <= derivative_tol

    is_design = isinstance(theta, ThetaDesign)
    for point in theta.zeros(0, T, order=1):
        value = float(theta.derivative(point, 0))
        if abs(value) <= 1e-12:
            continue
        report.squeezed_fourier_points.append(float(point))
        try:
            beta = beta_from_theta(theta, point)
        except MalformedDesignError:
            beta = math.nan
        gamma = float(theta.gamma(point))
        residual = abs(-beta * value ** 2 - (0.5 * float(theta.derivative(point, 2)) * value + gamma))
        report.condition3_residual = max(report.condition3_residual, residual if math.isfinite(residual) else math.inf)
    report.condition3_ok = report.condition3_residual <= tol

    if report.condition1_ok:
        taus = np.linspace(-T, T, n_samples)
        beta = beta_from_theta(theta, taus)
        report.min_beta = float(np.min(beta))
        report.beta_sign_changes = count_sign_changes(beta)
        if is_design:
            report.beta_endpoint_residual = abs(beta_from_theta(theta, T) - theta.beta_end)

        if check_roundtrip:
            endpoint = propagate(design_profile(theta, (-T, T)), -T, T, step)
            report.endpoint_matrix = endpoint
            report.roundtrip_u12_residual = abs(endpoint.u12 - float(theta.derivative(T, 0)))
            report.roundtrip_u11_residual = abs(endpoint.u11 - 0.5 * float(theta.derivative(T, 1)))

    logger.info('Design validation: conditions %s/%s/%s, residuals %.3g/%.3g/%.3g',
                report.condition1_ok, report.condition2_ok, report.condition3_ok,
                report.condition1_residual, report.condition2_residual, report.condition3_residual)
    return report


def eigentrajectories(profile, T, n_samples=200, step=None):
    """
    Eigenvalues of ``u(tau, -tau)`` on a uniform grid of ``(0, T]``.

    :param profile: Profile symmetric about 0.
    :type profile: AmplitudeProfile
    :param T: Largest half width.
    :param n_samples: Number of grid points.
    :param step: Maximum RK4 step.
    :return: Named tuple with the times, the eigenvalue pairs ``(lambda+, lambda-)``, their real parts, a flag for
             real pairs (``|trace| >= 2``) and the phase of ``lambda+``.
    :rtype: Eigentrajectories
    """
    family = propagate_symmetric(profile, T, step=step, n_samples=n_samples)
    taus = family.taus[1:]
    traces = family.traces[1:]
    dets = family.dets[1:]

    # branch fixed by the sign of the real discriminant, so lambda+ stays continuous where the trace changes sign
    disc = (traces / 2) ** 2 - dets
    root = np.where(disc >= 0, np.sqrt(np.maximum(disc, 0)), 1j * np.sqrt(np.maximum(-disc, 0)))
    plus, minus = traces / 2 + root, traces / 2 - root
    is_real = np.abs(traces) >= 2
    return Eigentrajectories(taus, np.column_stack([plus, minus]), plus.real, minus.real, is_real,
                             normalize_phase(np.angle(plus)))


def suitability(design, T=math.pi / 2, n_samples=1000, eps=1e-9, step=None):
    """
    Decide whether an amplitude is suitable for a soft squeezing operation: it must not become negative.

    :param design: Designed theta or a symmetric amplitude profile.
    :param T: Half width of the interval.
    :param n_samples: Number of samples of ``beta`` and of the eigentrajectories.
    :param eps: Tolerance for negative values.
    :param step: Maximum RK4 step of the eigentrajectories.
    :return: Tuple ``(suitable, diagnostics)``.
    :rtype: tuple
    """
    profile = design if isinstance(design, AmplitudeProfile) else design_profile(design, (-T, T))
    taus = np.linspace(-T, T, n_samples)
    beta = np.array(profile.beta(taus))

    diagnostics = SuitabilityDiagnostics(float(np.min(beta)), count_sign_changes(beta, eps), taus, beta,
                                         eigentrajectories(profile, T, n_samples, step))
    suitable = bool(np.all(beta >= -eps))
    logger.info('Suitability: min beta %.6g, %d sign changes -> %s', diagnostics.min_beta,
                diagnostics.sign_changes, 'suitable' if suitable else 'not suitable')
    return suitable, diagnostics
