import logging
import warnings

import numpy as np

from squeezehelpers.mathieu.params import OPERATION_INTERVAL, MathieuParams, monodromy_batch
from squeezehelpers.symplectic.classification import Regime, classify
from squeezehelpers.symplectic.matrix import SymplecticMatrix

logger = logging.getLogger(__name__)

FLAGGED = 'Flagged'


class ScanGrid:
    """
    Rectangular grid of Mathieu parameters.

    :param beta0_range: ``(lo, hi)`` of the constant part.
    :param beta1_range: ``(lo, hi)`` of the half amplitude.
    :param shape: Number of nodes ``(n0, n1)`` along both axes, each at least 2.
    :param interval: Operation interval ``(tau0, tau1)``.
    """

    def __init__(self, beta0_range, beta1_range, shape, interval=OPERATION_INTERVAL):
        if not (len(beta0_range) == 2 and beta0_range[0] < beta0_range[1]):
            raise ValueError('beta0 range must satisfy lo < hi, got %s' % (beta0_range,))
        if not (len(beta1_range) == 2 and beta1_range[0] < beta1_range[1]):
            raise ValueError('beta1 range must satisfy lo < hi, got %s' % (beta1_range,))
        if not (len(shape) == 2 and int(shape[0]) >= 2 and int(shape[1]) >= 2):
            raise ValueError('Grid needs at least 2 x 2 nodes, got %s' % (shape,))
        if not (len(interval) == 2 and interval[0] != interval[1]):
            raise ValueError('Operation interval must have non-zero length')

        self.beta0_range = tuple(float(x) for x in beta0_range)
        self.beta1_range = tuple(float(x) for x in beta1_range)
        self.shape = (int(shape[0]), int(shape[1]))
        self.interval = tuple(float(x) for x in interval)

    @classmethod
    def default(cls):
        """
        The region around the second squeezing area used for reproduction runs.
        """
        return cls((0.9, 2.0), (0.5, 1.6), (221, 221))

    @property
    def beta0_values(self):
        return np.linspace(self.beta0_range[0], self.beta0_range[1], self.shape[0])

    @property
    def beta1_values(self):
        return np.linspace(self.beta1_range[0], self.beta1_range[1], self.shape[1])

    def as_dict(self):
        return {'beta0_range': list(self.beta0_range), 'beta1_range': list(self.beta1_range),
                'shape': list(self.shape), 'interval': list(self.interval)}


class StruttMap:
    """
    Raster of evolution matrices over a :class:`ScanGrid`.

    Nodes at which the integration became non-finite are flagged instead of classified.

    :param grid: The scanned grid.
    :param matrices: Array of shape ``(n0, n1, 2, 2)``.
    """

    def __init__(self, grid, matrices):
        self.grid = grid
        self.matrices = np.asarray(matrices, dtype=float)
        assert self.matrices.shape == grid.shape + (2, 2)
        self.traces = self.matrices[..., 0, 0] + self.matrices[..., 1, 1]
        self.flagged = ~np.all(np.isfinite(self.matrices), axis=(-2, -1))

    @property
    def flagged_count(self):
        return int(np.count_nonzero(self.flagged))

    def regime(self, i, j):
        """
        Regime of node ``(i, j)``, ``None`` for flagged nodes.

        :rtype: Regime
        """
        if self.flagged[i, j]:
            return None
        return Regime.from_trace(self.traces[i, j])

    def regime_names(self):
        """
        :return: Array of regime names, ``'Flagged'`` for flagged nodes.
        :rtype: numpy.ndarray
        """
        names = np.empty(self.grid.shape, dtype=object)
        for i in range(self.grid.shape[0]):
            for j in range(self.grid.shape[1]):
                regime = self.regime(i, j)
                names[i, j] = FLAGGED if regime is None else regime.value
        return names

    def params(self, i, j):
        return MathieuParams(self.grid.beta0_values[i], self.grid.beta1_values[j])

    def matrix(self, i, j):
        return SymplecticMatrix.from_array(self.matrices[i, j])

    def report(self, i, j, tol=None):
        """
        Full classification of node ``(i, j)`` including eigenvalues and eigen rows.

        :rtype: RegimeReport
        """
        if self.flagged[i, j]:
            raise ValueError('Node (%d, %d) is flagged' % (i, j))
        return classify(self.matrix(i, j), tol)

    def rows(self):
        """
        Iterate over ``(beta0, beta1, trace, regime_name)`` in grid order.
        """
        names = self.regime_names()
        for i, beta0 in enumerate(self.grid.beta0_values):
            for j, beta1 in enumerate(self.grid.beta1_values):
                yield beta0, beta1, self.traces[i, j], names[i, j]

    def counts(self):
        """
        :return: Number of nodes per regime name.
        :rtype: dict
        """
        names, counts = np.unique(self.regime_names().astype(str), return_counts=True)
        return dict(zip(names.tolist(), counts.tolist()))


def _scan_line(beta0, beta1_values, interval, step):
    return monodromy_batch(beta0, beta1_values, interval, step)


def _map_lines(func, beta0_values, beta1_values, interval, step, parallel, max_workers):
    from squeezehelpers import configuration

    parallel = configuration.parallel if parallel is None else parallel
    max_workers = configuration.max_workers if max_workers is None else max_workers
    num = len(beta0_values)

    if parallel:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(func, beta0_values, (beta1_values,) * num, (interval,) * num, (step,) * num))
    else:
        return [func(beta0, beta1_values, interval, step) for beta0 in beta0_values]


def strutt_map(grid, step=None, parallel=None, max_workers=None):
    """
    Integrate every node of the grid and collect the evolution matrices over the operation interval.

    The lines of constant ``beta0`` are integrated as vectorised batches, optionally distributed over worker
    processes. The result does not depend on ``parallel``.

    :param grid: Grid to scan.
    :type grid: ScanGrid
    :param step: Maximum RK4 step, defaults to ``configuration.scan_step``.
    :param parallel: Use a process pool, defaults to ``configuration.parallel``.
    :param max_workers: Limit of worker processes, defaults to ``configuration.max_workers``.
    :rtype: StruttMap
    """
    if step is None:
        from squeezehelpers import configuration
        step = configuration.scan_step

    logger.info('Scanning %d x %d nodes over [%g, %g] with step %g', grid.shape[0], grid.shape[1],
                grid.interval[0], grid.interval[1], step)
    lines = _map_lines(_scan_line, grid.beta0_values, grid.beta1_values, grid.interval, step, parallel, max_workers)
    result = StruttMap(grid, np.stack(lines))

    if result.flagged_count:
        message = '%d of %d nodes became non-finite and are flagged' % (result.flagged_count, result.flagged.size)
        logger.warning(message)
        warnings.warn(message)
    return result
