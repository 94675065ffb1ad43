"""
Gaussian packets ``Psi(x) ~ exp(i p0 (x - q0)) exp(-kappa (x - q0)**2 / 2)`` under quadratic Hamiltonians.

The packet centre follows the classical trajectory and the second moments transform as ``Sigma -> u Sigma u^T``.
"""
import logging
import math

import numpy as np
import scipy.stats

from squeezehelpers.symplectic.matrix import SymplecticMatrix
from squeezehelpers.symplectic.propagator import propagate_family

logger = logging.getLogger(__name__)


def shadow_multiplier(probability=None):
    """
    Two-sided Gaussian quantile enclosing the given probability mass, 3.2905 for 0.999.

    :param probability: Defaults to ``configuration.shadow_probability``.
    :rtype: float
    """
    if probability is None:
        from squeezehelpers import configuration
        probability = configuration.shadow_probability
    assert 0 < probability < 1
    return float(scipy.stats.norm.ppf(0.5 * (1 + probability)))


class GaussianPacket:
    """
    :param q0: Initial centre position.
    :param p0: Initial centre momentum.
    :param kappa: Width parameter, positive. ``kappa = 1`` gives ``(dq)**2 = (dp)**2 = 1/2``.
    """

    def __init__(self, q0=0., p0=0., kappa=1.):
        if not kappa > 0:
            raise ValueError('kappa must be positive, got %g' % kappa)
        self.q0 = float(q0)
        self.p0 = float(p0)
        self.kappa = float(kappa)

    @property
    def covariance(self):
        """
        Initial covariance matrix of ``(q, p)``.
        """
        return np.diag([1 / (2 * self.kappa), self.kappa / 2])

    @property
    def delta_q(self):
        return math.sqrt(1 / (2 * self.kappa))

    @property
    def delta_p(self):
        return math.sqrt(self.kappa / 2)

    def sample(self, n, seed=None):
        """
        Draw classical phase-space points from the Gaussian phase-space density of the packet.

        :param n: Number of points.
        :param seed: Seed of ``numpy.random.default_rng``.
        :return: Array of shape ``(n, 2)``.
        """
        rng = np.random.default_rng(seed)
        return rng.multivariate_normal([self.q0, self.p0], self.covariance, size=n)

    def as_dict(self):
        return {'q0': self.q0, 'p0': self.p0, 'kappa': self.kappa}

    def __repr__(self):
        return 'GaussianPacket(q0=%g, p0=%g, kappa=%g)' % (self.q0, self.p0, self.kappa)


def evolve_center(pk, u, tol=None):
    """
    Packet centre after the evolution ``u``.

    :type pk: GaussianPacket
    :type u: SymplecticMatrix
    :param tol: Determinant tolerance, defaults to ``configuration.det_tolerance``.
    :return: Tuple ``(q, p)``.
    :raises NonSymplecticError: If ``u`` is not symplectic.
    """
    u = SymplecticMatrix.from_array(u).check_symplectic(tol)
    q, p = u.apply(pk.q0, pk.p0)
    return float(q), float(p)


def covariance(pk, u):
    """
    Covariance matrix ``u Sigma u^T`` of the evolved packet.
    """
    u = SymplecticMatrix.from_array(u).array
    return u @ pk.covariance @ u.T


def uncertainty_q(pk, u):
    """
    Position uncertainty ``(dq)**2 = u11**2 / (2 kappa) + kappa u12**2 / 2``.
    """
    u = SymplecticMatrix.from_array(u)
    return math.sqrt(u.u11 ** 2 / (2 * pk.kappa) + pk.kappa * u.u12 ** 2 / 2)


def uncertainty_p(pk, u):
    """
    Momentum uncertainty ``(dp)**2 = u21**2 / (2 kappa) + kappa u22**2 / 2``.
    """
    u = SymplecticMatrix.from_array(u)
    return math.sqrt(u.u21 ** 2 / (2 * pk.kappa) + pk.kappa * u.u22 ** 2 / 2)


def probability_density(pk, u, x):
    """
    Position density ``exp(-(x - <q>)**2 / dq**2) / (sqrt(pi) dq)`` of the evolved packet, with
    ``<q> = u11 q0 + u12 p0`` and ``dq`` from :func:`uncertainty_q`.

    :param x: Position or array of positions.
    """
    u = SymplecticMatrix.from_array(u)
    center, _ = u.apply(pk.q0, pk.p0)
    dq = uncertainty_q(pk, u)
    x = np.asarray(x, dtype=float)
    return np.exp(-(x - center) ** 2 / dq ** 2) / (math.sqrt(math.pi) * dq)


def monte_carlo_uncertainty(pk, u, n=100000, seed=0):
    """
    Standard deviations of ``q`` and ``p`` of sampled initial points pushed through ``u``.

    :return: Tuple ``(dq, dp)``.
    """
    u = SymplecticMatrix.from_array(u)
    points = pk.sample(n, seed) @ u.array.T
    return float(np.std(points[:, 0])), float(np.std(points[:, 1]))


class Congruence:
    """
    Centre trajectories of several packets in one evolution family.

    :param family: The evolution family ``u(tau, tau0)``.
    :param packets: The packets.
    """

    def __init__(self, family, packets):
        self.family = family
        self.packets = list(packets)

    @property
    def taus(self):
        return self.family.taus

    def trajectory(self, k):
        """
        :return: Tuple of arrays ``(tau, q, p)`` of packet ``k``.
        """
        q, p = self.family.apply(self.packets[k].q0, self.packets[k].p0)
        return self.taus, q, p

    def __len__(self):
        return len(self.packets)

    def __iter__(self):
        return (self.trajectory(k) for k in range(len(self)))


def trajectory_congruence(profile, interval, packets, n_samples=400, step=None):
    """
    Centre trajectories of many packets from a single integration pass.

    :param profile: Amplitude profile.
    :param interval: ``(tau0, tau1)``.
    :param packets: List of :class:`GaussianPacket`.
    :param n_samples: Number of uniform intervals between the samples.
    :param step: Maximum RK4 step.
    :rtype: Congruence
    """
    taus = np.linspace(interval[0], interval[1], n_samples + 1)
    family = propagate_family(profile, taus, step)
    logger.debug('Congruence of %d packets over [%g, %g]', len(packets), interval[0], interval[1])
    return Congruence(family, packets)


class ShadowBand:
    """
    Band ``<q> +- w dq`` around a packet centre trajectory.

    :param taus: Sample times.
    :param q_mean: Centre positions.
    :param dq: Position uncertainties.
    :param w: Multiplier of the uncertainty.
    """

    def __init__(self, taus, q_mean, dq, w):
        self.taus = np.asarray(taus, dtype=float)
        self.q_mean = np.asarray(q_mean, dtype=float)
        self.dq = np.asarray(dq, dtype=float)
        self.w = float(w)

    @property
    def lo(self):
        return self.q_mean - self.w * self.dq

    @property
    def hi(self):
        return self.q_mean + self.w * self.dq

    @property
    def max_extent(self):
        """
        Largest ``|q|`` covered by the band.
        """
        return float(np.max(np.maximum(np.abs(self.lo), np.abs(self.hi))))

    def rows(self):
        for row in zip(self.taus, self.q_mean, self.dq, self.lo, self.hi):
            yield row


def uncertainty_shadow(profile, interval, pk, w=None, n_samples=400, step=None):
    """
    Uncertainty shadow of a packet along its centre trajectory.

    :param profile: Amplitude profile.
    :param interval: ``(tau0, tau1)``.
    :type pk: GaussianPacket
    :param w: Multiplier, defaults to :func:`shadow_multiplier` of ``configuration.shadow_probability``.
    :param n_samples: Number of uniform intervals between the samples.
    :param step: Maximum RK4 step.
    :rtype: ShadowBand
    """
    w = shadow_multiplier() if w is None else w
    assert w >= 0, 'w must not be negative'
    congruence = trajectory_congruence(profile, interval, [pk], n_samples, step)
    family = congruence.family
    taus, q, _ = congruence.trajectory(0)
    dq = np.sqrt(family.u11 ** 2 / (2 * pk.kappa) + pk.kappa * family.u12 ** 2 / 2)
    return ShadowBand(taus, q, dq, w)
