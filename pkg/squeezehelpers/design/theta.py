import math

import numpy as np


class GammaFunction:
    """
    Kinetic amplitude used in the design formulas, either a constant or ``sin(tau)**2``.

    :param kind: ``'const'`` or ``'sin2'``.
    :param value: The constant for ``kind='const'``.
    """

    KINDS = ('const', 'sin2')

    def __init__(self, kind='const', value=1.):
        assert kind in self.KINDS, 'kind must be one of %s' % list(self.KINDS)
        self.kind = kind
        self.value = float(value) if kind == 'const' else None

    @classmethod
    def from_string(cls, text):
        """
        Parse ``'sin2'`` or ``'const:<value>'``.

        :rtype: GammaFunction
        """
        text = text.strip()
        if text == 'sin2':
            return cls('sin2')
        if text.startswith('const:'):
            return cls('const', float(text[len('const:'):]))
        raise ValueError('Cannot parse gamma "%s", expected "sin2" or "const:<value>"' % text)

    @classmethod
    def from_dict(cls, d):
        value = d.get('value')
        return cls(d['kind'], 1. if value is None else value)

    @classmethod
    def coerce(cls, gamma):
        """
        Accept a :class:`GammaFunction`, a number or a string.
        """
        if isinstance(gamma, GammaFunction):
            return gamma
        if isinstance(gamma, str):
            return cls.from_string(gamma)
        return cls('const', gamma)

    def to_dict(self):
        return {'kind': self.kind, 'value': self.value}

    def __str__(self):
        return 'sin2' if self.kind == 'sin2' else 'const:%r' % self.value

    def __call__(self, tau):
        tau = np.asarray(tau, dtype=float)
        if self.kind == 'sin2':
            return np.sin(tau) ** 2
        return np.full(tau.shape, self.value)

    def derivative(self, tau, order=1):
        tau = np.asarray(tau, dtype=float)
        if order == 0:
            return self(tau)
        if self.kind == 'const':
            return np.zeros(tau.shape)
        # d^n/dtau^n (1 - cos 2 tau)/2 = -2^(n-1) cos(2 tau + n pi/2)
        return -2. ** (order - 1) * np.cos(2 * tau + order * math.pi / 2)

    def __eq__(self, other):
        return isinstance(other, GammaFunction) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'GammaFunction(%s)' % self


class Theta:
    """
    Base class of the designed element ``theta(tau) = u12(tau, -tau)``.

    Subclasses implement :meth:`derivative` for arbitrary orders.

    :param gamma: Kinetic amplitude used when synthesising ``beta``.
    """

    def __init__(self, gamma=1.):
        self.gamma = GammaFunction.coerce(gamma)

    def derivative(self, tau, order):
        raise NotImplementedError

    def __call__(self, tau):
        return self.derivative(tau, 0)

    def evaluate(self, tau, max_order=3):
        """
        :return: Tuple ``(theta, theta', ..., theta^(max_order))``.
        :rtype: tuple
        """
        return tuple(self.derivative(tau, k) for k in range(max_order + 1))

    def zeros(self, lo, hi, order=0, n_points=None, atol=1e-12):
        """
        Locate the zeros of theta, or of one of its derivatives, on ``[lo, hi]`` from sign changes on a uniform scan,
        refined with Brent's method. Scan points with ``|value| <= atol``, e.g. ``tau = 0`` for odd functions or the
        interval ends, are zeros as well.

        :param order: Derivative order.
        :param n_points: Number of scan points, defaults to ``configuration.zero_scan_points``.
        :param atol: Tolerance for zeros on scan points.
        :return: Sorted array of zeros.
        :rtype: numpy.ndarray
        """
        import scipy.optimize
        from squeezehelpers import configuration

        n_points = configuration.zero_scan_points if n_points is None else n_points
        tau = np.linspace(lo, hi, n_points)
        values = self.derivative(tau, order)

        zeros = list(tau[np.abs(values) <= atol])
        for i in np.nonzero(values[:-1] * values[1:] < 0)[0]:
            zeros.append(scipy.optimize.brentq(lambda t: float(self.derivative(t, order)), tau[i], tau[i + 1],
                                               xtol=1e-14))

        merged = []
        for z in sorted(zeros):
            if not merged or z - merged[-1] > 1e-9:
                merged.append(z)
        return np.array(merged)


class SineSeriesTheta(Theta):
    """
    ``theta(tau) = sum_k a_k sin(omega_k tau)``, an odd function.

    :param amplitudes: Coefficients ``a_k``.
    :param frequencies: Angular frequencies ``omega_k``.
    :param gamma: Kinetic amplitude used when synthesising ``beta``.
    """

    def __init__(self, amplitudes, frequencies, gamma=1.):
        super().__init__(gamma)
        self.amplitudes = np.array(amplitudes, dtype=float)
        self.frequencies = np.array(frequencies, dtype=float)
        assert self.amplitudes.shape == self.frequencies.shape and self.amplitudes.ndim == 1
        self.amplitudes.flags.writeable = False
        self.frequencies.flags.writeable = False

    def derivative(self, tau, order):
        assert order >= 0
        tau = np.asarray(tau, dtype=float)
        result = np.zeros(tau.shape)
        for a, w in zip(self.amplitudes, self.frequencies):
            result = result + a * w ** order * np.sin(w * tau + order * math.pi / 2)
        return result


class LinearTheta(Theta):
    """
    ``theta(tau) = slope * tau``. With slope 2 and unit gamma this is the free evolution.
    """

    def __init__(self, slope=2., gamma=1.):
        super().__init__(gamma)
        self.slope = float(slope)

    def derivative(self, tau, order):
        tau = np.asarray(tau, dtype=float)
        if order == 0:
            return self.slope * tau
        if order == 1:
            return np.full(tau.shape, self.slope)
        return np.zeros(tau.shape)
