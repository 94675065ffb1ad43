"""
Fixed step integration of the evolution law ``du/dtau = Lambda(tau) u`` with ``Lambda = [[0, gamma], [-beta, 0]]``.

The classical fourth order Runge-Kutta step of a linear matrix ODE is itself a linear map, ``u_{n+1} = M_n u_n``.
All step matrices of a segment are built at once from the amplitudes sampled at the half-step nodes and multiplied
by pairwise reduction. Leading batch axes are carried through, so many profiles (e.g. a line of a parameter scan)
are integrated together.
"""
import logging
import math
import warnings
from collections import namedtuple

import numpy as np

from squeezehelpers.errors import DomainError, IntegrationError
from squeezehelpers.symplectic.matrix import SymplecticMatrix

logger = logging.getLogger(__name__)

_MAX_CHUNK_ELEMENTS = 1 << 18

ConvergenceReport = namedtuple('ConvergenceReport', ['estimate', 'fine', 'coarse'])


def _generators(beta, gamma):
    beta = np.asarray(beta, dtype=float)
    gamma = np.asarray(gamma, dtype=float)
    shape = np.broadcast(beta, gamma).shape
    generators = np.zeros(shape + (2, 2))
    generators[..., 0, 1] = gamma
    generators[..., 1, 0] = -beta
    return generators


def _symmetric_generators(beta, gamma):
    # vec(Lambda u + u Lambda) = (Lambda x I + I x Lambda^T) vec(u), row-major vec
    lam = _generators(beta, gamma)
    eye = np.eye(2)
    big = np.einsum('...ik,jl->...ijkl', lam, eye) + np.einsum('ik,...lj->...ijkl', eye, lam)
    return big.reshape(lam.shape[:-2] + (4, 4))


def _rk4_step_matrices(generators, h):
    a0, am, a1 = generators[0:-1:2], generators[1::2], generators[2::2]
    eye = np.eye(generators.shape[-1])
    k1 = a0
    k2 = am @ (eye + 0.5 * h * k1)
    k3 = am @ (eye + 0.5 * h * k2)
    k4 = a1 @ (eye + h * k3)
    return eye + (h / 6.) * (k1 + 2 * k2 + 2 * k3 + k4)


def _chain(ms):
    """
    Ordered product ``ms[-1] @ ... @ ms[0]`` by pairwise reduction along the first axis.
    """
    while ms.shape[0] > 1:
        tail = ms[-1:] if ms.shape[0] % 2 else None
        if tail is not None:
            ms = ms[:-1]
        ms = ms[1::2] @ ms[0::2]
        if tail is not None:
            ms = np.concatenate([ms, tail])
    return ms[0]


def _segment(amplitudes, make_generators, t_a, t_b, step):
    n = max(1, int(math.ceil(abs(t_b - t_a) / step - 1e-9)))
    h = (t_b - t_a) / n

    product = None
    chunk = None
    start = 0
    while start < n:
        if chunk is None:
            stop = min(n, 1024)
        else:
            stop = min(n, start + chunk)
        k = np.arange(2 * start, 2 * stop + 1)
        nodes = t_a + (t_b - t_a) * (k / (2. * n))
        if stop == n:
            nodes[-1] = t_b

        generators = make_generators(*amplitudes(nodes))
        ms = _rk4_step_matrices(generators, h)
        segment_product = _chain(ms)
        product = segment_product if product is None else segment_product @ product

        if chunk is None:
            per_step = max(1, int(np.prod(generators.shape[1:])))
            chunk = max(1, _MAX_CHUNK_ELEMENTS // per_step)
        start = stop

    return product


def _split(t_a, t_b, breakpoints):
    inner = [b for b in breakpoints if min(t_a, t_b) < b < max(t_a, t_b)]
    inner.sort(reverse=t_b < t_a)
    return [t_a] + inner + [t_b]


def _evolve(amplitudes, checkpoints, step, make_generators=_generators, breakpoints=(), strict=True):
    """
    Cumulative evolution matrices from ``checkpoints[0]`` to every checkpoint.

    :param amplitudes: Callable ``amplitudes(s_a, s_b)`` returning the evaluator for the breakpoint free interval
                       ``[s_a, s_b]``. The evaluator maps an array of ``N`` times to ``(beta, gamma)`` broadcastable
                       to ``(N, *batch)``.
    :param checkpoints: Monotonic sequence of times.
    :param step: Maximum absolute RK4 step.
    :param make_generators: Builds the generator matrices from the amplitudes.
    :param breakpoints: Times which are always step boundaries.
    :param strict: Raise an :class:`IntegrationError` on non-finite results instead of returning them.
    :return: Array of shape ``(len(checkpoints), *batch, d, d)``.
    """
    assert step > 0, 'step must be positive'
    checkpoints = [float(t) for t in checkpoints]

    dim = make_generators(np.zeros(1), np.zeros(1)).shape[-1]
    cumulative = np.eye(dim)
    results = [cumulative]
    for t_a, t_b in zip(checkpoints[:-1], checkpoints[1:]):
        edges = _split(t_a, t_b, breakpoints) if t_a != t_b else []
        for s_a, s_b in zip(edges[:-1], edges[1:]):
            cumulative = _segment(amplitudes(s_a, s_b), make_generators, s_a, s_b, step) @ cumulative
            if strict and not np.all(np.isfinite(cumulative)):
                raise IntegrationError(s_a)
        results.append(cumulative)

    shape = results[-1].shape
    return np.stack([np.broadcast_to(r, shape) for r in results])


def _monitor(matrices, label):
    from squeezehelpers import configuration

    det = matrices[..., 0, 0] * matrices[..., 1, 1] - matrices[..., 0, 1] * matrices[..., 1, 0]
    deviation = float(np.max(np.abs(det - 1))) if det.size else 0.
    logger.debug('%s: max |det - 1| = %.3g', label, deviation)
    if deviation > configuration.det_tolerance:
        message = '%s: determinant drifted by %.3g, consider a smaller step' % (label, deviation)
        logger.warning(message)
        warnings.warn(message)
    return deviation


def _resolve_step(step):
    if step is None:
        from squeezehelpers import configuration
        step = configuration.step
    assert step > 0, 'step must be positive'
    return step


class EvolutionFamily:
    """
    Dense output of a propagation: the evolution matrices at a sequence of times.

    For a forward propagation ``matrices[k] = u(taus[k], taus[0])``; for the symmetric form
    ``matrices[k] = u(taus[k], -taus[k])``.

    :param taus: Array of times.
    :param matrices: Array of shape ``(len(taus), 2, 2)``.
    :param symmetric: Whether the family was produced by :func:`propagate_symmetric`.
    """

    def __init__(self, taus, matrices, symmetric=False):
        self.taus = np.array(taus, dtype=float)
        self.matrices = np.array(matrices, dtype=float)
        assert self.matrices.shape == (len(self.taus), 2, 2)
        self.taus.flags.writeable = False
        self.matrices.flags.writeable = False
        self.symmetric = symmetric

    def __len__(self):
        return len(self.taus)

    def __getitem__(self, item):
        return SymplecticMatrix.from_array(self.matrices[item])

    def __iter__(self):
        return (SymplecticMatrix.from_array(m) for m in self.matrices)

    @property
    def final(self):
        return self[-1]

    @property
    def u11(self):
        return self.matrices[:, 0, 0]

    @property
    def u12(self):
        return self.matrices[:, 0, 1]

    @property
    def u21(self):
        return self.matrices[:, 1, 0]

    @property
    def u22(self):
        return self.matrices[:, 1, 1]

    @property
    def traces(self):
        return self.u11 + self.u22

    @property
    def dets(self):
        return self.u11 * self.u22 - self.u12 * self.u21

    def max_det_deviation(self):
        return float(np.max(np.abs(self.dets - 1)))

    def max_equidiagonal_deviation(self):
        return float(np.max(np.abs(self.u11 - self.u22)))

    def apply(self, q0, p0):
        """
        Map an initial phase-space point through every matrix of the family.

        :return: Tuple of arrays ``(q, p)`` with one entry per time.
        :rtype: tuple
        """
        return self.u11 * q0 + self.u12 * p0, self.u21 * q0 + self.u22 * p0


def generator(profile, tau):
    """
    The generator ``Lambda(tau) = [[0, gamma(tau)], [-beta(tau), 0]]``.

    :param profile: Amplitude profile.
    :type profile: AmplitudeProfile
    :param tau: Time within the profile domain.
    :type tau: float
    :return: 2x2 array with vanishing trace.
    :rtype: numpy.ndarray
    """
    beta, gamma = profile.evaluate(float(tau))
    return _generators(beta, gamma)


def propagate(profile, tau0, tau1, step=None):
    """
    Evolution matrix ``u(tau1, tau0)`` of the profile, with ``u(tau0, tau0) = 1``.

    ``tau1 < tau0`` integrates backwards with a negative step.

    :param profile: Amplitude profile.
    :type profile: AmplitudeProfile
    :param tau0: Initial time.
    :param tau1: Final time.
    :param step: Maximum RK4 step, defaults to ``configuration.step``.
    :rtype: SymplecticMatrix
    """
    step = _resolve_step(step)
    if not profile.contains(tau0, tau1):
        raise DomainError('Interval [%g, %g] exceeds the profile domain [%g, %g]' %
                          ((tau0, tau1) + profile.domain))

    matrices = _evolve(profile.segment_amplitudes, [tau0, tau1], step, breakpoints=profile.breakpoints)
    _monitor(matrices[-1], 'propagate %r [%g, %g]' % (profile, tau0, tau1))
    return SymplecticMatrix.from_array(matrices[-1])


def propagate_family(profile, taus, step=None):
    """
    Evolution matrices ``u(taus[k], taus[0])`` from a single integration pass.

    :param profile: Amplitude profile.
    :param taus: Monotonic sequence of checkpoint times.
    :param step: Maximum RK4 step, defaults to ``configuration.step``.
    :rtype: EvolutionFamily
    """
    step = _resolve_step(step)
    taus = np.asarray(taus, dtype=float)
    assert taus.ndim == 1 and len(taus) >= 1
    diffs = np.diff(taus)
    assert np.all(diffs >= 0) or np.all(diffs <= 0), 'checkpoints must be monotonic'
    if not profile.contains(taus[0], taus[-1]):
        raise DomainError('Interval [%g, %g] exceeds the profile domain [%g, %g]' %
                          ((taus[0], taus[-1]) + profile.domain))

    matrices = _evolve(profile.segment_amplitudes, taus, step, breakpoints=profile.breakpoints)
    _monitor(matrices, 'propagate_family %r' % profile)
    return EvolutionFamily(taus, matrices)


def propagate_batch(amplitudes, tau0, tau1, step=None, strict=False):
    """
    Propagate a batch of profiles given by a single vectorised amplitude function.

    Cells of the batch which become non-finite are returned as such when ``strict`` is False.

    :param amplitudes: Callable mapping an array of ``N`` times to ``(beta, gamma)`` arrays broadcastable to
                       ``(N, *batch)``.
    :param tau0: Initial time.
    :param tau1: Final time.
    :param step: Maximum RK4 step, defaults to ``configuration.step``.
    :param strict: Raise :class:`IntegrationError` on non-finite entries.
    :return: Array of shape ``(*batch, 2, 2)``.
    :rtype: numpy.ndarray
    """
    step = _resolve_step(step)
    with np.errstate(over='ignore', invalid='ignore'):
        return _evolve(lambda s_a, s_b: amplitudes, [tau0, tau1], step, strict=strict)[-1]


def propagate_symmetric(profile, T, step=None, n_samples=100, taus=None):
    """
    Evolution matrices ``u(tau, -tau)`` of a profile symmetric about zero, obtained from the anticommutator form
    ``du/dtau = Lambda(tau) u + u Lambda(tau)``.

    :param profile: Profile symmetric about 0 whose domain contains ``[-T, T]``.
    :param T: Largest half width.
    :param step: Maximum RK4 step, defaults to ``configuration.step``.
    :param n_samples: Number of uniform intervals in ``[0, T]`` if ``taus`` is not given.
    :param taus: Explicit increasing sample times in ``[0, T]`` starting at 0.
    :rtype: EvolutionFamily
    """
    step = _resolve_step(step)
    if T < 0:
        raise ValueError('T must not be negative')
    if not profile.contains(-T, T):
        raise DomainError('Interval [%g, %g] exceeds the profile domain [%g, %g]' % ((-T, T) + profile.domain))
    profile.check_symmetry(T)

    if taus is None:
        taus = np.linspace(0, T, n_samples + 1)
    taus = np.asarray(taus, dtype=float)
    assert taus[0] == 0 and np.all(np.diff(taus) >= 0) and taus[-1] <= T, 'taus must increase from 0 to at most T'

    breakpoints = [abs(b) for b in profile.breakpoints]
    propagators = _evolve(profile.segment_amplitudes, taus, step, make_generators=_symmetric_generators,
                          breakpoints=breakpoints)
    # apply to vec(identity) = e_0 + e_3
    matrices = (propagators[..., :, 0] + propagators[..., :, 3]).reshape(len(taus), 2, 2)
    _monitor(matrices, 'propagate_symmetric %r' % profile)
    return EvolutionFamily(taus, matrices, symmetric=True)


def convergence_check(profile, tau0, tau1, step=None):
    """
    Richardson estimate of the integration error of :func:`propagate`.

    :return: ``ConvergenceReport(estimate, fine, coarse)`` with ``estimate = max|u_h - u_2h| / 15``.
    :rtype: ConvergenceReport
    """
    step = _resolve_step(step)
    fine = propagate(profile, tau0, tau1, step)
    coarse = propagate(profile, tau0, tau1, 2 * step)
    estimate = float(np.max(np.abs(fine.array - coarse.array))) / 15.
    logger.info('Richardson error estimate for step %g: %.3g', step, estimate)
    return ConvergenceReport(estimate, fine, coarse)
