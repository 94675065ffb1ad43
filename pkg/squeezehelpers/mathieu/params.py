import math

import numpy as np

from squeezehelpers.symplectic.matrix import SymplecticMatrix
from squeezehelpers.symplectic.profile import AmplitudeProfile
from squeezehelpers.symplectic.propagator import propagate, propagate_batch

OPERATION_INTERVAL = (math.pi / 2, 5 * math.pi / 2)


class MathieuParams:
    """
    Parameters of the periodic amplitude ``beta(tau) = beta0 + 2 beta1 cos(tau)``.

    :param beta0: Constant part.
    :param beta1: Half amplitude of the oscillating part.
    """

    def __init__(self, beta0, beta1):
        self.beta0 = float(beta0)
        self.beta1 = float(beta1)
        assert math.isfinite(self.beta0) and math.isfinite(self.beta1), 'beta0 and beta1 must be finite'

    def beta(self, tau):
        return self.beta0 + 2 * self.beta1 * np.cos(tau)

    def as_tuple(self):
        return self.beta0, self.beta1

    def __eq__(self, other):
        return isinstance(other, MathieuParams) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return 'MathieuParams(beta0=%.12g, beta1=%.12g)' % self.as_tuple()


def mathieu_profile(params):
    """
    Amplitude profile of a Paul trap driven with ``Phi0 + Phi1 cos(omega t)``: unit kinetic amplitude, defined for all
    times, period 2 pi.

    :type params: MathieuParams
    :rtype: AmplitudeProfile
    """
    return AmplitudeProfile(params.beta, 1., name='mathieu beta0=%g beta1=%g' % params.as_tuple())


def monodromy(params, tau0=OPERATION_INTERVAL[0], step=None):
    """
    One-period evolution matrix ``u(tau0 + 2 pi, tau0)``.

    :type params: MathieuParams
    :param tau0: Start of the period.
    :param step: Maximum RK4 step, defaults to ``configuration.step``.
    :rtype: SymplecticMatrix
    """
    return propagate(mathieu_profile(params), tau0, tau0 + 2 * math.pi, step)


def monodromy_batch(beta0, beta1, interval=OPERATION_INTERVAL, step=None):
    """
    Evolution matrices over ``interval`` for many parameter pairs at once.

    Pairs for which the integration overflows are returned with non-finite entries.

    :param beta0: Array of constant parts.
    :param beta1: Array of half amplitudes, broadcastable against ``beta0``.
    :param interval: ``(tau0, tau1)``.
    :param step: Maximum RK4 step, defaults to ``configuration.scan_step``.
    :return: Array of shape ``broadcast(beta0, beta1).shape + (2, 2)``.
    :rtype: numpy.ndarray
    """
    if step is None:
        from squeezehelpers import configuration
        step = configuration.scan_step

    beta0, beta1 = np.broadcast_arrays(np.asarray(beta0, dtype=float), np.asarray(beta1, dtype=float))
    batch_shape = beta0.shape
    beta0, beta1 = beta0.ravel(), beta1.ravel()

    def amplitudes(nodes):
        return beta0[None, :] + 2 * beta1[None, :] * np.cos(nodes)[:, None], 1.

    result = propagate_batch(amplitudes, interval[0], interval[1], step)
    return result.reshape(batch_shape + (2, 2))
