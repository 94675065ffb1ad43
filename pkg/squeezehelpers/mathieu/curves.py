import functools
import logging
from enum import Enum

import numpy as np
import scipy.optimize
from shapely.geometry import LineString

from squeezehelpers.errors import IntersectionNotFoundError
from squeezehelpers.helpers import sign_change_brackets, vectorized_bisection
from squeezehelpers.mathieu.params import MathieuParams, monodromy_batch
from squeezehelpers.mathieu.scan import _map_lines
from squeezehelpers.symplectic.matrix import SymplecticMatrix

logger = logging.getLogger(__name__)


class CurveKind(Enum):
    U12_ZERO = 'U12Zero'
    U21_ZERO = 'U21Zero'

    @property
    def element(self):
        """
        Index of the matrix element which vanishes along the curve.
        """
        return (0, 1) if self is CurveKind.U12_ZERO else (1, 0)


class SqueezeCurve:
    """
    Points ``(beta0, beta1, lambda)`` at which one off-diagonal element of the evolution matrix vanishes. ``lambda``
    is the upper left element at that point.

    :param kind: Which element vanishes.
    :param branches: List of arrays of shape ``(m, 3)``, each a connected piece of the curve ordered by ``beta0``.
    :param interval: Operation interval of the evolution matrices.
    """

    def __init__(self, kind, branches, interval):
        self.kind = kind
        self.branches = [np.asarray(b, dtype=float).reshape(-1, 3) for b in branches]
        self.interval = tuple(interval)

    @property
    def points(self):
        """
        All points of all branches, ordered by ``beta0`` and then ``beta1``.
        """
        if not self.branches:
            return np.zeros((0, 3))
        points = np.concatenate(self.branches)
        return points[np.lexsort((points[:, 1], points[:, 0]))]

    def __len__(self):
        return sum(len(b) for b in self.branches)

    @property
    def is_empty(self):
        return len(self) == 0

    def rows(self):
        for beta0, beta1, lam in self.points:
            yield self.kind.value, beta0, beta1, lam


def _trace_line(beta0, beta1_values, interval, step, element, tol):
    i, j = element
    values = monodromy_batch(beta0, beta1_values, interval, step)[:, i, j]
    lo, hi, f_lo, _ = sign_change_brackets(beta1_values, values)

    def evaluate(beta1):
        matrices = monodromy_batch(beta0, beta1, interval, step)
        return matrices[:, i, j], matrices[:, 0, 0]

    roots, lam = vectorized_bisection(evaluate, lo, hi, f_lo, tol)
    if not len(roots):
        return np.zeros((0, 3))
    return np.column_stack([np.full(len(roots), beta0), roots, lam])


def _link_branches(lines, max_jump):
    branches = []
    open_branches = []
    for roots in lines:
        available = list(open_branches)
        next_open = []
        for root in roots:
            best = None
            if available:
                jumps = [abs(branches[b][-1][1] - root[1]) for b in available]
                k = int(np.argmin(jumps))
                if jumps[k] <= max_jump:
                    best = available.pop(k)
            if best is None:
                branches.append([root])
                best = len(branches) - 1
            else:
                branches[best].append(root)
            next_open.append(best)
        open_branches = next_open
    return [np.array(b) for b in branches]


def trace_curve(kind, grid, step=None, tol=None, max_jump=None, parallel=None, max_workers=None):
    """
    Trace the zero set of one off-diagonal element of the evolution matrix.

    Every line of constant ``beta0`` of the grid is sampled in ``beta1``; each sign change of the element is refined
    by bisection. Roots on neighbouring lines are linked into branches when their ``beta1`` differ by at most
    ``max_jump``.

    :param kind: Element to trace.
    :type kind: CurveKind
    :param grid: Grid whose lines are scanned.
    :type grid: ScanGrid
    :param step: Maximum RK4 step, defaults to ``configuration.scan_step``.
    :param tol: Bisection tolerance in ``beta1``, defaults to ``configuration.root_tolerance``.
    :param max_jump: Largest ``beta1`` distance of linked roots, defaults to a quarter of the ``beta1`` range.
    :param parallel: Use a process pool, defaults to ``configuration.parallel``.
    :param max_workers: Limit of worker processes.
    :return: The curve, empty if no line has a sign change.
    :rtype: SqueezeCurve
    """
    from squeezehelpers import configuration

    kind = CurveKind(kind)
    step = configuration.scan_step if step is None else step
    tol = configuration.root_tolerance if tol is None else tol
    if max_jump is None:
        max_jump = 0.25 * (grid.beta1_range[1] - grid.beta1_range[0])

    worker = functools.partial(_trace_line, element=kind.element, tol=tol)
    lines = _map_lines(worker, grid.beta0_values, grid.beta1_values, grid.interval, step, parallel, max_workers)

    curve = SqueezeCurve(kind, _link_branches(lines, max_jump), grid.interval)
    logger.info('%s: %d points in %d branches', kind.value, len(curve), len(curve.branches))
    return curve


def _crossings(c1, c2):
    candidates = []
    for b1 in c1.branches:
        for b2 in c2.branches:
            if len(b1) < 2 or len(b2) < 2:
                continue
            intersection = LineString(b1[:, :2]).intersection(LineString(b2[:, :2]))
            if intersection.is_empty:
                continue
            for geom in getattr(intersection, 'geoms', [intersection]):
                candidates.append((geom.centroid.x, geom.centroid.y))
    return candidates


def find_intersection(c1, c2, step=None, tol=1e-6):
    """
    Find the parameters at which both off-diagonal elements vanish, i.e. the evolution matrix is a pure coordinate
    squeezing ``diag(lambda, 1/lambda)``.

    The crossing of the piecewise linear curves is polished by a two dimensional root search.

    :param c1: First curve.
    :param c2: Second curve, traced over the same operation interval.
    :param step: Maximum RK4 step of the polishing, defaults to ``configuration.step``.
    :param tol: Largest accepted modulus of the off-diagonal elements.
    :return: Tuple ``(params, matrix)``; if several crossings exist the one with smallest ``beta0``.
    :rtype: tuple
    :raises IntersectionNotFoundError: If the curves do not cross or the polishing fails.
    """
    from squeezehelpers import configuration

    assert c1.interval == c2.interval, 'Curves were traced over different intervals'
    step = configuration.step if step is None else step
    interval = c1.interval

    candidates = _crossings(c1, c2)
    if not candidates:
        raise IntersectionNotFoundError('%s and %s do not cross' % (c1.kind.value, c2.kind.value))

    def off_diagonal(x):
        m = monodromy_batch(x[0], x[1], interval, step)
        return [m[0, 1], m[1, 0]]

    results = []
    for x0 in candidates:
        solution = scipy.optimize.root(off_diagonal, x0, method='hybr', options={'xtol': 1e-12})
        residual = np.max(np.abs(off_diagonal(solution.x)))
        logger.debug('Polished crossing %s -> %s, residual %.3g', x0, solution.x, residual)
        if solution.success and residual <= tol:
            results.append(solution.x)

    if not results:
        raise IntersectionNotFoundError('Root polishing of %d crossing(s) did not converge' % len(candidates))

    beta0, beta1 = min(results, key=lambda x: (x[0], x[1]))
    params = MathieuParams(beta0, beta1)
    matrix = SymplecticMatrix.from_array(monodromy_batch(beta0, beta1, interval, step))
    logger.info('Intersection at %r, lambda = %.6g', params, matrix.u11)
    return params, matrix
