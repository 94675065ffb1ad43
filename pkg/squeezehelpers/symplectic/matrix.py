import math

import numpy as np
import numpy.linalg as linalg

from squeezehelpers.errors import NonSymplecticError, PreconditionError


class SymplecticMatrix:
    """
    A real 2x2 evolution matrix acting on the canonical pair ``(q, p)``.

    The matrix is immutable, all operations return new instances. The unit determinant is not enforced on
    construction, use :func:`check_symplectic` where it is required.

    :param u11: Upper left element.
    :param u12: Upper right element.
    :param u21: Lower left element.
    :param u22: Lower right element.
    """

    __slots__ = ('_array',)

    def __init__(self, u11, u12, u21, u22):
        array = np.array([[u11, u12], [u21, u22]], dtype=float)
        array.flags.writeable = False
        self._array = array

    @classmethod
    def from_array(cls, array):
        """
        Create a matrix from any 2x2 array like object.

        :param array: 2x2 array.
        :return: The new matrix.
        :rtype: SymplecticMatrix
        """
        if isinstance(array, SymplecticMatrix):
            return array
        array = np.asarray(array, dtype=float)
        assert array.shape == (2, 2), 'Expected a 2x2 matrix, got shape %s' % (array.shape,)
        return cls(array[0, 0], array[0, 1], array[1, 0], array[1, 1])

    @classmethod
    def identity(cls):
        return cls(1., 0., 0., 1.)

    @property
    def array(self):
        """
        Read-only numpy view of the matrix.
        """
        return self._array

    @property
    def u11(self):
        return float(self._array[0, 0])

    @property
    def u12(self):
        return float(self._array[0, 1])

    @property
    def u21(self):
        return float(self._array[1, 0])

    @property
    def u22(self):
        return float(self._array[1, 1])

    @property
    def det(self):
        a = self._array
        return float(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])

    @property
    def trace(self):
        return float(self._array[0, 0] + self._array[1, 1])

    def inverse(self):
        """
        Inverse of the matrix, using the unit determinant of symplectic matrices.

        :return: ``[[u22, -u12], [-u21, u11]]``
        :rtype: SymplecticMatrix
        """
        return SymplecticMatrix(self.u22, -self.u12, -self.u21, self.u11)

    def is_equidiagonal(self, tol=1e-9):
        return abs(self.u11 - self.u22) <= tol

    def is_symplectic(self, tol=1e-9):
        return abs(self.det - 1) <= tol

    def check_symplectic(self, tol=None):
        """
        Raise a :class:`NonSymplecticError` if the determinant deviates from one by more than ``tol``.

        :param tol: Tolerance, defaults to ``configuration.det_tolerance``.
        :return: The matrix itself.
        :rtype: SymplecticMatrix
        """
        if tol is None:
            from squeezehelpers import configuration
            tol = configuration.det_tolerance
        if not self.is_symplectic(tol):
            raise NonSymplecticError(self.det, tol)
        return self

    def apply(self, q, p):
        """
        Map a phase-space point, or arrays of points, through the matrix.

        :return: Tuple ``(q', p')``.
        :rtype: tuple
        """
        a = self._array
        return a[0, 0] * q + a[0, 1] * p, a[1, 0] * q + a[1, 1] * p

    def allclose(self, other, atol=1e-8):
        return np.allclose(self._array, _as_array(other), rtol=0, atol=atol)

    def to_list(self):
        return self._array.tolist()

    def __matmul__(self, other):
        if isinstance(other, SymplecticMatrix):
            return SymplecticMatrix.from_array(self._array @ other.array)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        return np.array_equal(self._array, other.array)

    def __hash__(self):
        return hash(tuple(self._array.ravel()))

    def __iter__(self):
        return iter(self._array.ravel().tolist())

    def __repr__(self):
        return 'SymplecticMatrix(%.12g, %.12g, %.12g, %.12g)' % tuple(self)


def _as_array(m):
    if isinstance(m, SymplecticMatrix):
        return m.array
    m = np.asarray(m, dtype=float)
    assert m.shape == (2, 2), 'Expected a 2x2 matrix, got shape %s' % (m.shape,)
    return m


def is_equidiagonal(m, tol=1e-9):
    """
    Check whether a 2x2 matrix has equal diagonal elements.

    :param m: Matrix or 2x2 array.
    :param tol: Absolute tolerance.
    :rtype: bool
    """
    m = _as_array(m)
    return abs(m[0, 0] - m[1, 1]) <= tol


def rotation(kappa, delta_tau):
    """
    Evolution matrix of the constant oscillator ``beta = kappa**2`` over a time ``delta_tau``.

    For ``kappa == 0`` the free evolution ``[[1, delta_tau], [0, 1]]`` is returned.

    :param kappa: Oscillator frequency, not negative.
    :type kappa: float
    :param delta_tau: Evolution time, may be negative.
    :type delta_tau: float
    :rtype: SymplecticMatrix
    """
    if kappa < 0:
        raise ValueError('kappa must not be negative, got %g' % kappa)
    if kappa == 0:
        return SymplecticMatrix(1., delta_tau, 0., 1.)

    phase = kappa * delta_tau
    c, s = math.cos(phase), math.sin(phase)
    # exact zeros at multiples of pi/2
    if abs(c) < 1e-15:
        c = 0.
    if abs(s) < 1e-15:
        s = 0.
    return SymplecticMatrix(c, s / kappa, -kappa * s, c)


def squeezed_fourier(kappa, sign=1):
    """
    The squeezed Fourier matrix ``[[0, sign/kappa], [-sign*kappa, 0]]``.

    For ``sign=1`` this is the rotation of the oscillator with frequency ``kappa`` over a quarter period.

    :param kappa: Positive scale.
    :param sign: Either +1 or -1.
    :rtype: SymplecticMatrix
    """
    if kappa <= 0:
        raise ValueError('kappa must be positive, got %g' % kappa)
    assert sign in (1, -1), 'sign must be +1 or -1'
    return SymplecticMatrix(0., sign / kappa, -sign * kappa, 0.)


def compose(ms):
    """
    Multiply evolution matrices. The last matrix of the list acts first.

    :param ms: Non-empty list of matrices.
    :return: ``ms[0] @ ms[1] @ ... @ ms[-1]``
    :rtype: SymplecticMatrix
    """
    ms = [_as_array(m) for m in ms]
    if not ms:
        raise ValueError('Cannot compose an empty list of matrices')
    if len(ms) == 1:
        return SymplecticMatrix.from_array(ms[0])
    return SymplecticMatrix.from_array(linalg.multi_dot(ms))


def symmetric_product(v0, vs, tol=1e-9):
    """
    Symmetric product ``v_n ... v_1 v_0 v_1 ... v_n`` of equidiagonal matrices.

    :param v0: Central equidiagonal matrix.
    :param vs: List ``[v_1, ..., v_n]`` of equidiagonal matrices, may be empty.
    :param tol: Tolerance for the equidiagonal check of the inputs.
    :return: The equidiagonal product.
    :rtype: SymplecticMatrix
    """
    for i, v in enumerate([v0] + list(vs)):
        if not is_equidiagonal(v, tol):
            m = _as_array(v)
            raise PreconditionError('Factor %d is not equidiagonal (u11 - u22 = %g)' % (i, m[0, 0] - m[1, 1]))

    u = _as_array(v0)
    for v in vs:
        v = _as_array(v)
        u = v @ u @ v
    return SymplecticMatrix.from_array(u)


def anticommutator(u, v):
    """
    The anticommutator ``uv + vu`` of two 2x2 matrices.

    The result is equidiagonal whenever ``u`` and ``v`` are, but in general not symplectic, hence a plain array is
    returned.

    :rtype: numpy.ndarray
    """
    u, v = _as_array(u), _as_array(v)
    return u @ v + v @ u
