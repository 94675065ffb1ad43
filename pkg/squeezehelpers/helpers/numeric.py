import numpy as np


def normalize_phase(phase, positive=False):
    """
    Fold eigenvalue phases into one period.

    Works elementwise on arrays, so a whole eigentrajectory is folded at once.

    :param phase: Phase or array of phases in radians.
    :param positive: Fold into ``[0, 2*pi)`` instead of ``[-pi, pi)``.
    :return: Folded phase with the shape of ``phase``.
    """
    offset = 0. if positive else np.pi
    return np.mod(np.asarray(phase, dtype=float) + offset, 2 * np.pi) - offset


def sign_change_brackets(x, y):
    """
    Find all intervals of a sampled function with a strict sign change.

    Samples with ``nan`` values never form a bracket.

    :param x: Sample positions, monotonic.
    :param y: Function values at ``x``.
    :return: Tuple of arrays ``(lo, hi, y_lo, y_hi)``, one entry per bracket.
    :rtype: tuple
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    assert x.shape == y.shape and x.ndim == 1, 'x and y must be one-dimensional arrays of equal length'

    with np.errstate(invalid='ignore'):
        idx = np.nonzero(y[:-1] * y[1:] < 0)[0]
    return x[idx], x[idx + 1], y[idx], y[idx + 1]


def vectorized_bisection(func, lo, hi, f_lo, tol, max_iter=200):
    """
    Run bisection on many brackets at the same time.

    The function is called once per iteration with the array of all midpoints, which makes it possible to evaluate
    expensive functions such as batched propagations for all brackets together.

    :param func: Callable mapping an array of positions to a tuple ``(values, extra)``. ``extra`` is an arbitrary
                 array whose first axis matches the positions, it is returned for the final midpoints.
    :param lo: Lower ends of the brackets.
    :param hi: Upper ends of the brackets.
    :param f_lo: Function values at ``lo``.
    :param tol: Absolute tolerance on the bracket width.
    :param max_iter: Maximum number of iterations.
    :return: Tuple ``(roots, extra)`` evaluated at the last midpoints.
    :rtype: tuple
    """
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    f_lo = np.array(f_lo, dtype=float)
    assert lo.shape == hi.shape == f_lo.shape
    assert tol > 0

    if not lo.size:
        return lo, None

    mid, extra = None, None
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid, extra = func(mid)
        f_mid = np.asarray(f_mid, dtype=float)
        left = np.sign(f_mid) == np.sign(f_lo)
        lo = np.where(left, mid, lo)
        f_lo = np.where(left, f_mid, f_lo)
        hi = np.where(left, hi, mid)
        if np.max(hi - lo) < tol:
            break

    return mid, extra
