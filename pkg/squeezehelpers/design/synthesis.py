"""
Synthesis of the elastic amplitude from a designed ``theta(tau) = u12(tau, -tau)``:

    beta = gamma ((theta'/2)**2 - 1) / theta**2 - theta'' / (2 theta)

The expression is 0/0 at zeros of theta. Where ``theta'`` is +-2 there, the limit is finite and is evaluated from
the Taylor expansion of theta about the zero.
"""
import logging
import math

import numpy as np
import scipy.optimize

from squeezehelpers.design.toeplitz import ThetaDesign
from squeezehelpers.errors import MalformedDesignError
from squeezehelpers.symplectic.matrix import SymplecticMatrix, compose, squeezed_fourier
from squeezehelpers.symplectic.profile import AmplitudeProfile

logger = logging.getLogger(__name__)

SLOPE_TOLERANCE = 1e-6


def _direct(theta, d_theta, dd_theta, gamma):
    return gamma * ((0.5 * d_theta) ** 2 - 1) / theta ** 2 - dd_theta / (2 * theta)


def _locate_zero(theta, tau, window):
    f = lambda t: float(theta.derivative(t, 0))
    if f(tau) == 0:
        return tau
    lo, hi = tau - window, tau + window
    if f(lo) * f(hi) > 0:
        return None
    return scipy.optimize.brentq(f, lo, hi, xtol=1e-15)


def _taylor_limit(theta, tau, tau_zero):
    """
    Amplitude at ``tau`` from the expansion of theta to fifth order about the zero ``tau_zero``.
    """
    d1 = float(theta.derivative(tau_zero, 1))
    if abs(abs(d1) - 2) > SLOPE_TOLERANCE:
        raise MalformedDesignError(tau_zero, d1)
    s = math.copysign(2., d1)
    d2, d3, d4, d5 = (float(theta.derivative(tau_zero, k)) for k in (2, 3, 4, 5))
    t = tau - tau_zero

    # theta = t P, theta'^2 - 4 = sum A_k t^k, 2 theta theta'' = sum B_k t^k
    p = s + d2 * t / 2 + d3 * t ** 2 / 6 + d4 * t ** 3 / 24 + d5 * t ** 4 / 120
    a1 = 2 * s * d2
    a2 = s * d3 + d2 ** 2
    a3 = s * d4 / 3 + d2 * d3
    a4 = s * d5 / 12 + d3 ** 2 / 4 + d2 * d4 / 3
    b2 = 2 * s * d3 + d2 ** 2
    b3 = s * d4 + 4 * d2 * d3 / 3
    b4 = s * d5 / 3 + 7 * d2 * d4 / 12 + d3 ** 2 / 3

    gamma = float(theta.gamma(tau))
    gamma_zero = float(theta.gamma(tau_zero))
    if abs(a1) <= 1e-12:
        leading = 0.
    elif abs(gamma_zero - 1) <= 1e-12:
        # (gamma(tau) - 1) / t to first order
        leading = a1 * (float(theta.gamma.derivative(tau_zero, 1)) +
                        0.5 * float(theta.gamma.derivative(tau_zero, 2)) * t)
    else:
        raise MalformedDesignError(tau_zero, d1)

    numerator = leading + gamma * (a2 + t * a3 + t ** 2 * a4) - (b2 + t * b3 + t ** 2 * b4)
    return numerator / (4 * p ** 2)


def beta_from_theta(theta, tau, window=None):
    """
    Elastic amplitude realising the designed theta.

    :param theta: Designed function, its ``gamma`` is used in the formula.
    :type theta: Theta
    :param tau: Time or array of times.
    :param window: Times with ``|theta| <= window`` are evaluated from the limit at the nearby zero. Defaults to
                   ``configuration.singularity_window``.
    :return: Amplitude with the shape of ``tau``.
    :raises MalformedDesignError: If theta has a zero with ``theta'`` different from +-2.
    """
    if window is None:
        from squeezehelpers import configuration
        window = configuration.singularity_window

    shape = np.shape(tau)
    tau = np.atleast_1d(np.asarray(tau, dtype=float))
    values, d_values, dd_values = (theta.derivative(tau, k) for k in range(3))
    gamma = theta.gamma(tau)

    near = np.abs(values) <= window
    result = np.empty(tau.shape)
    with np.errstate(divide='ignore', invalid='ignore'):
        result[~near] = _direct(values[~near], d_values[~near], dd_values[~near], gamma[~near])

    for index in zip(*np.nonzero(near)):
        t = float(tau[index])
        tau_zero = _locate_zero(theta, t, window)
        if tau_zero is None:
            # theta touches the window without crossing zero
            d1 = float(d_values[index])
            if abs(abs(d1) - 2) > SLOPE_TOLERANCE:
                raise MalformedDesignError(t, d1)
            result[index] = _direct(values[index], d1, dd_values[index], gamma[index])
        else:
            result[index] = _taylor_limit(theta, t, tau_zero)

    if not shape:
        return float(result[0])
    return result.reshape(shape)


def design_profile(theta, domain=(-math.pi / 2, math.pi / 2), design_gamma=False, window=None):
    """
    Amplitude profile with the synthesised ``beta``.

    :param theta: Designed function.
    :param domain: Interval of the profile. It may extend beyond ``[-pi/2, pi/2]``; the same formula is then used.
    :param design_gamma: Use the design's gamma as kinetic amplitude of the dynamics instead of 1.
    :param window: Singularity window, see :func:`beta_from_theta`.
    :rtype: AmplitudeProfile
    """
    gamma = theta.gamma if design_gamma else 1.
    symmetric = -domain[0] == domain[1]
    return AmplitudeProfile(lambda tau: beta_from_theta(theta, tau, window), gamma, domain=domain,
                            symmetric=symmetric, name=repr(theta))


class PulseSequence:
    """
    Sequence of design pulses and constant holds, starting at ``tau = -pi/2``.

    Every pulse occupies an interval of length pi and is centred at the middle of it. A hold with ``beta = kappa**2``
    defaults to a quarter period ``pi / (2 kappa)`` of the constant oscillator, i.e. a squeezed Fourier
    transformation.

    :param start: Start time of the sequence.
    """

    def __init__(self, start=-math.pi / 2):
        self.start = float(start)
        self.segments = []

    @property
    def end(self):
        return self.segments[-1][1] if self.segments else self.start

    def add_pulse(self, design, window=None):
        """
        Append a design pulse.

        :type design: ThetaDesign
        :return: The sequence itself.
        :rtype: PulseSequence
        """
        assert isinstance(design, ThetaDesign), 'Pulses must be ThetaDesign instances'
        start = self.end
        center = start + math.pi / 2
        self.segments.append((start, start + math.pi, 'pulse', design, center, window))
        return self

    def add_hold(self, beta, length=None):
        """
        Append a segment with constant ``beta``.

        :param beta: Positive amplitude.
        :param length: Duration, defaults to ``pi / (2 sqrt(beta))``.
        :return: The sequence itself.
        :rtype: PulseSequence
        """
        if beta <= 0:
            raise ValueError('Hold amplitude must be positive, got %g' % beta)
        if length is None:
            length = math.pi / (2 * math.sqrt(beta))
        assert length > 0
        start = self.end
        self.segments.append((start, start + length, 'hold', float(beta), None, None))
        return self

    def profile(self):
        """
        :return: Piecewise profile of the whole sequence with unit kinetic amplitude.
        :rtype: AmplitudeProfile
        """
        if not self.segments:
            raise ValueError('Empty pulse sequence')

        pieces = []
        for start, end, kind, item, center, window in self.segments:
            if kind == 'pulse':
                beta = (lambda design, c, w: lambda tau: beta_from_theta(design, tau - c, w))(item, center, window)
            else:
                beta = item
            pieces.append((start, end, beta, 1.))
        return AmplitudeProfile.piecewise(pieces, name='pulse sequence of %d segments' % len(self.segments))

    def ideal_matrix(self):
        """
        Product of the squeezed Fourier matrices that the segments realise ideally.

        A pulse with scale ``b`` contributes ``[[0, b], [-1/b, 0]]``; a quarter period hold with amplitude ``beta``
        contributes ``[[0, 1/sqrt(beta)], [-sqrt(beta), 0]]``. Holds of other lengths contribute their rotation.

        :rtype: SymplecticMatrix
        """
        from squeezehelpers.symplectic.matrix import rotation

        factors = []
        for start, end, kind, item, _, _ in self.segments:
            if kind == 'pulse':
                sign = 1 if item.b > 0 else -1
                factors.append(squeezed_fourier(1 / abs(item.b), sign))
            else:
                factors.append(rotation(math.sqrt(item), end - start))
        if not factors:
            return SymplecticMatrix.identity()
        return compose(factors[::-1])
