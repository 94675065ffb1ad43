import math
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from squeezehelpers.errors import DomainError, PreconditionError


def _constant(value):
    value = float(value)
    return lambda tau: np.full(np.shape(tau), value)


class AmplitudeProfile:
    """
    Elastic and kinetic amplitudes ``beta(tau)`` and ``gamma(tau)`` of the quadratic Hamiltonian
    ``H = gamma p**2 / 2 + beta q**2 / 2``.

    Both amplitude functions must accept numpy arrays and return arrays of the same shape. They are never mutated by
    the evaluation, so a profile can be shared between threads.

    :param beta: Elastic amplitude, callable or constant.
    :param gamma: Kinetic amplitude, callable or constant. Defaults to 1.
    :param domain: Closed interval ``(tau_lo, tau_hi)`` on which the profile is defined. Defaults to all reals.
    :param symmetric: Tag the profile as symmetric about ``tau = 0``.
    :param breakpoints: Points inside the domain at which the amplitudes are not smooth. The propagators place step
                        boundaries on them.
    :param name: Optional description used in logs and output files.
    """

    def __init__(self, beta, gamma=1., domain: Tuple[float, float] = (-math.inf, math.inf), symmetric=False,
                 breakpoints: Sequence[float] = (), name: Optional[str] = None):
        assert len(domain) == 2 and domain[0] < domain[1], 'domain must be an interval (lo, hi) with lo < hi'

        self._beta = beta if callable(beta) else _constant(beta)
        self._gamma = gamma if callable(gamma) else _constant(gamma)
        self.domain = (float(domain[0]), float(domain[1]))
        self.symmetric = bool(symmetric)
        self.breakpoints = tuple(sorted(float(b) for b in breakpoints))
        self.name = name
        # (tau_start, tau_end, beta, gamma) of each piece for piecewise profiles
        self.pieces = None

    @classmethod
    def constant(cls, beta, gamma=1., domain=(-math.inf, math.inf)):
        return cls(float(beta), float(gamma), domain=domain, symmetric=True,
                   name='constant beta=%g gamma=%g' % (beta, gamma))

    @classmethod
    def free(cls, domain=(-math.inf, math.inf)):
        return cls(0., 1., domain=domain, symmetric=True, name='free')

    @classmethod
    def piecewise(cls, segments: Sequence[Tuple[float, float, Callable, Callable]], name=None):
        """
        Join profiles defined on adjacent intervals.

        :param segments: List of ``(tau_start, tau_end, beta, gamma)`` tuples. The intervals must be contiguous and
                         ordered. ``beta`` and ``gamma`` are callables or constants in the global time.
        :return: Profile on the union of the intervals with breakpoints at the joints.
        :rtype: AmplitudeProfile
        """
        if not segments:
            raise ValueError('At least one segment is needed')
        for (_, end, _, _), (start, _, _, _) in zip(segments[:-1], segments[1:]):
            assert abs(end - start) < 1e-12, 'Segments must be contiguous'

        edges = np.array([s[0] for s in segments] + [segments[-1][1]], dtype=float)
        betas = [s[2] if callable(s[2]) else _constant(s[2]) for s in segments]
        gammas = [s[3] if callable(s[3]) else _constant(s[3]) for s in segments]

        def pick(functions):
            def evaluate(tau):
                tau = np.asarray(tau, dtype=float)
                idx = np.clip(np.searchsorted(edges, tau, side='right') - 1, 0, len(functions) - 1)
                result = np.empty(tau.shape)
                for i, func in enumerate(functions):
                    mask = idx == i
                    if np.any(mask):
                        result[mask] = func(tau[mask])
                return result

            return evaluate

        profile = cls(pick(betas), pick(gammas), domain=(edges[0], edges[-1]), breakpoints=edges[1:-1], name=name)
        profile.pieces = list(zip(edges[:-1], edges[1:], betas, gammas))
        return profile

    def check_domain(self, tau):
        """
        Raise a :class:`DomainError` if any of the given times lies outside of the domain.
        """
        tau = np.asarray(tau, dtype=float)
        lo, hi = self.domain
        if tau.size and (np.min(tau) < lo or np.max(tau) > hi or np.any(np.isnan(tau))):
            raise DomainError('tau in [%g, %g] exceeds the profile domain [%g, %g]' %
                              (np.nanmin(tau), np.nanmax(tau), lo, hi))

    def contains(self, tau0, tau1):
        lo, hi = self.domain
        return lo <= min(tau0, tau1) and max(tau0, tau1) <= hi

    def beta(self, tau):
        self.check_domain(tau)
        return np.asarray(self._beta(np.asarray(tau, dtype=float)), dtype=float)

    def gamma(self, tau):
        self.check_domain(tau)
        return np.asarray(self._gamma(np.asarray(tau, dtype=float)), dtype=float)

    def evaluate(self, tau):
        """
        Evaluate both amplitudes.

        :param tau: Time or array of times within the domain.
        :return: Tuple ``(beta, gamma)`` of arrays with the shape of ``tau``.
        :rtype: tuple
        """
        self.check_domain(tau)
        tau = np.asarray(tau, dtype=float)
        beta = np.broadcast_to(np.asarray(self._beta(tau), dtype=float), tau.shape)
        gamma = np.broadcast_to(np.asarray(self._gamma(tau), dtype=float), tau.shape)
        return beta, gamma

    def segment_amplitudes(self, tau_a, tau_b):
        """
        Amplitude evaluator for an interval between two consecutive breakpoints.

        For piecewise profiles the piece owning the interval is evaluated on its closed interval, so a joint gets the
        one-sided limit from within ``[tau_a, tau_b]``.

        :param tau_a: Start of the interval.
        :param tau_b: End of the interval, may be smaller than ``tau_a``.
        :return: Callable with the signature of :meth:`evaluate`.
        """
        if self.pieces is None:
            return self.evaluate

        middle = 0.5 * (tau_a + tau_b)
        _, _, beta, gamma = next((piece for piece in self.pieces if piece[0] <= middle <= piece[1]),
                                 self.pieces[-1])

        def evaluate(tau):
            self.check_domain(tau)
            tau = np.asarray(tau, dtype=float)
            return (np.broadcast_to(np.asarray(beta(tau), dtype=float), tau.shape),
                    np.broadcast_to(np.asarray(gamma(tau), dtype=float), tau.shape))

        return evaluate

    def check_symmetry(self, T, n_samples=101, tol=1e-10):
        """
        Check ``beta(tau) = beta(-tau)`` and ``gamma(tau) = gamma(-tau)`` on sample points in ``[0, T]``.

        :param T: Half width of the symmetric interval.
        :param n_samples: Number of sample points.
        :param tol: Absolute tolerance.
        :raises PreconditionError: If the profile is not symmetric.
        """
        tau = np.linspace(0, T, n_samples)
        beta_p, gamma_p = self.evaluate(tau)
        beta_m, gamma_m = self.evaluate(-tau)
        deviation = max(np.max(np.abs(beta_p - beta_m)), np.max(np.abs(gamma_p - gamma_m)))
        if not deviation <= tol:
            raise PreconditionError('Profile is not symmetric about 0 on [-%g, %g], deviation %g' % (T, T, deviation))

    def sample(self, tau0, tau1, n_samples):
        """
        Sample the amplitudes on a uniform grid, e.g. for output files.

        :return: Tuple of arrays ``(tau, beta, gamma)``.
        :rtype: tuple
        """
        tau = np.linspace(tau0, tau1, n_samples)
        beta, gamma = self.evaluate(tau)
        return tau, np.array(beta), np.array(gamma)

    def __repr__(self):
        return 'AmplitudeProfile(%s, domain=[%g, %g])' % (self.name or 'custom', self.domain[0], self.domain[1])
