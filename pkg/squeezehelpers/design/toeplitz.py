"""
Four-harmonic designs ``theta(tau) = a1 sin(tau) + a3 sin(3 tau) + a5 sin(5 tau) + a7 sin(7 tau)``.

On ``[-pi/2, pi/2]`` the coefficients are fixed by four conditions:

* ``theta(pi/2) = b``, the squeezed Fourier scale at the ends,
* ``theta'(0) = 2``, which keeps ``beta`` regular at ``tau = 0``,
* ``theta''(pi/2) = -2 gamma_end / b - 2 b beta_end``, which makes ``beta(pi/2) = beta_end``,
* a third derivative condition at ``tau = 0`` with design constant ``c``.

The third condition is written with the full second derivative. For the fourth one two sign conventions exist:
``'printed'`` requires ``a1 + 27 a3 + 125 a5 + 343 a7 = -c`` (so that ``theta'''(0) = c``) and ``'analytic'``
requires ``theta'''(0) = -c``.
"""
import logging
import math
from collections import namedtuple

import numpy as np
import scipy.linalg

from squeezehelpers.design.theta import GammaFunction, SineSeriesTheta

logger = logging.getLogger(__name__)

HARMONICS = (1, 3, 5, 7)
CONVENTIONS = ('printed', 'analytic')

CoefficientAudit = namedtuple('CoefficientAudit', ['solved', 'closed_form', 'max_discrepancy', 'solved_residuals',
                                                   'closed_form_residuals', 'truncated_row_residual',
                                                   'closed_form_convention'])


def _design_system(b, c, beta_end, gamma_end, third_derivative):
    assert third_derivative in CONVENTIONS, 'third_derivative must be one of %s' % list(CONVENTIONS)
    third_sign = 1. if third_derivative == 'printed' else -1.
    matrix = np.array([
        [1., -1., 1., -1.],
        [1., 3., 5., 7.],
        [-1., 9., -25., 49.],
        [third_sign * 1., third_sign * 27., third_sign * 125., third_sign * 343.]
    ])
    rhs = np.array([b, 2., -2. * gamma_end / b - 2. * b * beta_end, -c])
    return matrix, rhs


class ThetaDesign(SineSeriesTheta):
    """
    A four-harmonic theta together with its design parameters.

    Use :func:`solve_coefficients` to construct a design from ``(b, c, beta_end, gamma)``.

    :param coefficients: ``(a1, a3, a5, a7)``.
    :param b: Target ``u12`` at the interval ends.
    :param c: Third derivative design constant.
    :param beta_end: Amplitude at ``tau = +-pi/2``.
    :param gamma: Kinetic amplitude of the design formulas.
    :param gamma_end: Value of gamma used in the end point condition, defaults to ``gamma(pi/2)``.
    :param third_derivative: Sign convention of the fourth condition.
    """

    def __init__(self, coefficients, b, c, beta_end=0., gamma=1., gamma_end=None, third_derivative='printed'):
        super().__init__(coefficients, HARMONICS, gamma)
        assert len(self.amplitudes) == 4
        assert third_derivative in CONVENTIONS, 'third_derivative must be one of %s' % list(CONVENTIONS)
        self.b = float(b)
        self.c = float(c)
        self.beta_end = float(beta_end)
        self.gamma_end = float(self.gamma(math.pi / 2)) if gamma_end is None else float(gamma_end)
        self.third_derivative = third_derivative

    @property
    def coefficients(self):
        return tuple(self.amplitudes.tolist())

    @property
    def a1(self):
        return self.coefficients[0]

    @property
    def a3(self):
        return self.coefficients[1]

    @property
    def a5(self):
        return self.coefficients[2]

    @property
    def a7(self):
        return self.coefficients[3]

    def condition_residuals(self):
        """
        Residuals of the four design conditions.

        :rtype: numpy.ndarray
        """
        matrix, rhs = _design_system(self.b, self.c, self.beta_end, self.gamma_end, self.third_derivative)
        return matrix @ self.amplitudes - rhs

    def check_conditions(self, tol=1e-10):
        """
        Assert the design conditions at the end points and ``theta'(pi/2) = 0``.
        """
        theta, d_theta = self.derivative(math.pi / 2, 0), self.derivative(math.pi / 2, 1)
        assert abs(theta - self.b) <= tol, 'theta(pi/2) = %.15g differs from b = %.15g' % (theta, self.b)
        assert abs(self.derivative(0., 1) - 2) <= tol, 'theta\'(0) must be 2'
        assert abs(d_theta) <= 1e-12, 'theta\'(pi/2) must vanish'
        return self

    def to_dict(self):
        return {
            'b': self.b,
            'c': self.c,
            'beta_end': self.beta_end,
            'gamma': self.gamma.to_dict(),
            'gamma_end': self.gamma_end,
            'third_derivative': self.third_derivative,
            'a': list(self.coefficients)
        }

    @classmethod
    def from_dict(cls, d):
        """
        Restore a design from its dictionary representation. Designs without stored coefficients are solved.

        :rtype: ThetaDesign
        """
        gamma = GammaFunction.from_dict(d['gamma']) if isinstance(d.get('gamma'), dict) else \
            GammaFunction.coerce(d.get('gamma', 1.))
        third_derivative = d.get('third_derivative', 'printed')
        if d.get('a') is None:
            return solve_coefficients(d['b'], d['c'], d.get('beta_end', 0.), d.get('gamma_end'), gamma,
                                      third_derivative)
        return cls(d['a'], d['b'], d['c'], d.get('beta_end', 0.), gamma, d.get('gamma_end'), third_derivative)

    def __repr__(self):
        return 'ThetaDesign(b=%g, c=%g, beta_end=%g, gamma=%s, a=[%s])' % (
            self.b, self.c, self.beta_end, self.gamma, ', '.join('%.6g' % a for a in self.coefficients))


def solve_coefficients(b, c, beta_end=0., gamma_end=None, gamma=1., third_derivative='printed'):
    """
    Solve the four design conditions for the harmonic coefficients.

    :param b: Target ``u12`` at the interval ends, non-zero.
    :param c: Third derivative design constant, non-zero.
    :param beta_end: Amplitude at ``tau = +-pi/2``.
    :param gamma_end: Gamma in the end point condition, defaults to ``gamma(pi/2)``.
    :param gamma: Kinetic amplitude of the design, a :class:`GammaFunction`, number or string.
    :param third_derivative: ``'printed'`` or ``'analytic'``.
    :rtype: ThetaDesign
    """
    if b == 0:
        raise ValueError('b must not be zero')
    if c == 0:
        raise ValueError('c must not be zero')

    gamma = GammaFunction.coerce(gamma)
    if gamma_end is None:
        gamma_end = float(gamma(math.pi / 2))

    matrix, rhs = _design_system(b, c, beta_end, gamma_end, third_derivative)
    assert abs(scipy.linalg.det(matrix)) > 1e-6, 'Design system is singular'
    coefficients = scipy.linalg.solve(matrix, rhs)

    design = ThetaDesign(coefficients, b, c, beta_end, gamma, gamma_end, third_derivative)
    logger.debug('%r, condition residuals %s', design, design.condition_residuals())
    return design


def closed_form_coefficients(b, c, beta_end=0., gamma_end=1.):
    """
    Closed form solution of the four design conditions.

    :return: Array ``(a1, a3, a5, a7)``.
    :rtype: numpy.ndarray
    """
    if b == 0:
        raise ValueError('b must not be zero')
    return np.array([
        (b * (58 + c + 5 * b * (21 - 2 * beta_end)) - 10 * gamma_end) / (128 * b),
        (b * (74 + c - b * (35 + 2 * beta_end)) - 2 * gamma_end) / (128 * b),
        (b * (22 - c + 3 * b * (-7 + 6 * beta_end)) + 18 * gamma_end) / (384 * b),
        -(b * (26 + c + 3 * b * (-5 + 2 * beta_end)) + 6 * gamma_end) / (384 * b),
    ])


def coefficient_audit(b, c, beta_end=0., gamma_end=1., third_derivative='printed'):
    """
    Compare the solved coefficients with the closed form.

    The closed form is also checked against the second derivative row written without its ``a7`` term, and against
    both sign conventions of the third derivative row.

    :rtype: CoefficientAudit
    """
    solved = solve_coefficients(b, c, beta_end, gamma_end, GammaFunction('const', gamma_end), third_derivative)
    closed = closed_form_coefficients(b, c, beta_end, gamma_end)

    matrix, rhs = _design_system(b, c, beta_end, gamma_end, third_derivative)
    closed_residuals = matrix @ closed - rhs
    truncated = float(np.dot([-1., 9., -25.], closed[:3]) - rhs[2])

    convention = None
    for name in CONVENTIONS:
        m, r = _design_system(b, c, beta_end, gamma_end, name)
        if np.max(np.abs(m @ closed - r)) < 1e-9:
            convention = name
            break

    audit = CoefficientAudit(np.array(solved.coefficients), closed,
                             float(np.max(np.abs(np.array(solved.coefficients) - closed))),
                             solved.condition_residuals(), closed_residuals, truncated, convention)
    logger.info('Coefficient audit b=%g c=%g: max discrepancy %.3g, closed form convention %s',
                b, c, audit.max_discrepancy, convention)
    return audit


def theta_eval(design, tau):
    """
    ``(theta, theta', theta'', theta''')`` at ``tau``.

    :rtype: tuple
    """
    return design.evaluate(tau, 3)
