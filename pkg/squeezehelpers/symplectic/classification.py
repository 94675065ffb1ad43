import math
from enum import Enum

import numpy as np
import scipy.linalg

from squeezehelpers.symplectic.matrix import SymplecticMatrix


class Regime(Enum):
    """
    Behaviour of a monodromy matrix, decided by its trace alone.
    """
    STABLE = 'Stable'
    THRESHOLD = 'Threshold'
    SQUEEZING = 'Squeezing'

    @classmethod
    def from_trace(cls, trace, band=None):
        """
        :param trace: Trace of the matrix.
        :param band: Half width of the threshold band around ``|trace| = 2``. Defaults to
                     ``configuration.threshold_band``.
        :rtype: Regime
        """
        if band is None:
            from squeezehelpers import configuration
            band = configuration.threshold_band
        excess = abs(trace) - 2
        if abs(excess) <= band:
            return cls.THRESHOLD
        return cls.SQUEEZING if excess > 0 else cls.STABLE


class RegimeReport:
    """
    Classification of a symplectic matrix.

    :param gamma_trace: Trace of the matrix.
    :param regime: The regime.
    :param eigenvalues: Pair of complex eigenvalues. In the squeezing regime the one of larger modulus comes first,
                        otherwise the one with non-negative imaginary part.
    :param eigen_rows: Pair of row eigenvectors ``r`` with ``r u = lambda r``, scaled such that their entry of
                       largest modulus is +1.
    :param sigma: ``arccos(trace/2)`` in the stable regime and at the threshold, ``arccosh(|trace|/2)`` in the
                  squeezing regime.
    """

    def __init__(self, gamma_trace, regime, eigenvalues, eigen_rows, sigma):
        self.gamma_trace = gamma_trace
        self.regime = regime
        self.eigenvalues = eigenvalues
        self.eigen_rows = eigen_rows
        self.sigma = sigma

    @property
    def squeezing_factor(self):
        """
        The eigenvalue of larger modulus in the squeezing regime, ``None`` otherwise.
        """
        if self.regime is not Regime.SQUEEZING:
            return None
        return self.eigenvalues[0].real

    def as_dict(self):
        return {
            'trace': self.gamma_trace,
            'regime': self.regime.value,
            'eigenvalues': [[complex(v).real, complex(v).imag] for v in self.eigenvalues],
            'sigma': self.sigma
        }

    def __repr__(self):
        return 'RegimeReport(trace=%.12g, regime=%s, sigma=%.12g)' % (self.gamma_trace, self.regime.value, self.sigma)


def _normalized_row(row):
    row = np.asarray(row, dtype=complex)
    row = row / row[np.argmax(np.abs(row))]
    if np.all(np.abs(row.imag) < 1e-14):
        return row.real
    return row


def classify(u, tol=None):
    """
    Classify a symplectic matrix by its trace.

    :param u: Matrix with unit determinant.
    :type u: SymplecticMatrix
    :param tol: Tolerance of the determinant check, defaults to ``configuration.det_tolerance``.
    :return: The classification.
    :rtype: RegimeReport
    :raises NonSymplecticError: If the determinant deviates from one by more than ``tol``.
    """
    u = SymplecticMatrix.from_array(u).check_symplectic(tol)
    trace = u.trace
    regime = Regime.from_trace(trace)

    if regime is Regime.SQUEEZING:
        sigma = math.acosh(abs(trace) / 2)
    else:
        sigma = math.acos(min(1., max(-1., trace / 2)))

    eigenvalues, left = scipy.linalg.eig(u.array, left=True, right=False)
    if regime is Regime.SQUEEZING:
        order = np.argsort(-np.abs(eigenvalues), kind='stable')
    else:
        order = np.argsort(-eigenvalues.imag, kind='stable')
    eigenvalues = tuple(complex(eigenvalues[i]) for i in order)
    # scipy returns vl with vl^H u = lambda vl^H
    eigen_rows = tuple(_normalized_row(left[:, i].conj()) for i in order)

    return RegimeReport(trace, regime, eigenvalues, eigen_rows, sigma)
