"""
CSV writers for scans, curves, amplitude profiles, trajectories and shadow bands.

All files carry a header row and floats are written with 12 significant digits, so identical results give
byte-identical files.
"""
import csv
import logging
import os
import shutil
from tempfile import NamedTemporaryFile

import numpy as np

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.12g'


def format_value(value):
    """
    Format a single CSV cell.

    :param value: Number, string or enum member.
    :rtype: str
    """
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return FLOAT_FORMAT % value
    return str(getattr(value, 'value', value))


def atomic_write(filename, write, mode='w'):
    """
    Write a file through a temporary file which is moved into place afterwards, so readers never see a partial file.

    :param filename: Target file name.
    :param write: Callable taking the open temporary file.
    :param mode: File mode of the temporary file.
    :return: The target file name.
    """
    directory = os.path.dirname(os.path.abspath(filename))
    os.makedirs(directory, exist_ok=True)
    kwargs = {'newline': '', 'encoding': 'utf-8'} if 'b' not in mode else {}
    with NamedTemporaryFile(mode, delete=False, dir=directory, suffix='.tmp', **kwargs) as tmp:
        write(tmp)
    shutil.move(tmp.name, filename)
    return filename


def write_csv(filename, header, rows):
    """
    :param filename: Target file name.
    :param header: Column names.
    :param rows: Iterable of row tuples.
    :return: The target file name.
    """
    counter = [0]

    def write(f):
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            assert len(row) == len(header), 'Row %r does not match header %r' % (row, header)
            writer.writerow([format_value(x) for x in row])
            counter[0] += 1

    atomic_write(filename, write)
    logger.debug('Wrote %d rows to %s', counter[0], filename)
    return filename


def read_csv(filename):
    """
    Read a file written by :func:`write_csv`.

    :return: Tuple ``(header, rows)`` with rows as lists of strings.
    """
    with open(filename, newline='', encoding='utf-8') as f:
        reader = csv.reader(f)
        header = next(reader)
        return header, [row for row in reader]


def write_raster(filename, strutt_map):
    """
    Raster rows ``beta0,beta1,trace,regime`` in grid order.

    :type strutt_map: squeezehelpers.mathieu.StruttMap
    """
    return write_csv(filename, ('beta0', 'beta1', 'trace', 'regime'), strutt_map.rows())


def write_curves(filename, curves):
    """
    Curve rows ``kind,beta0,beta1,lambda`` of several squeeze curves.

    :param curves: List of :class:`squeezehelpers.mathieu.SqueezeCurve`.
    """
    return write_csv(filename, ('kind', 'beta0', 'beta1', 'lambda'), (row for c in curves for row in c.rows()))


def write_profile(filename, taus, beta, gamma, theta=None):
    """
    Samples ``tau,beta,gamma,theta`` of an amplitude profile. Without a theta function the column stays empty.

    :param theta: Optional sampled theta values.
    """
    taus = np.asarray(taus, dtype=float)
    columns = [taus, np.broadcast_to(beta, taus.shape), np.broadcast_to(gamma, taus.shape)]
    if theta is None:
        rows = ((t, b, g, '') for t, b, g in zip(*columns))
    else:
        rows = zip(*columns, np.broadcast_to(theta, taus.shape))
    return write_csv(filename, ('tau', 'beta', 'gamma', 'theta'), rows)


def write_trajectories(filename, congruence):
    """
    Centre trajectories ``packet,tau,q,p`` of all packets of a congruence.

    :type congruence: squeezehelpers.packets.Congruence
    """

    def rows():
        for k, (taus, q, p) in enumerate(congruence):
            for row in zip(taus, q, p):
                yield (k,) + row

    return write_csv(filename, ('packet', 'tau', 'q', 'p'), rows())


def write_shadow(filename, band):
    """
    Shadow band rows ``tau,qmean,dq,lo,hi``.

    :type band: squeezehelpers.packets.ShadowBand
    """
    return write_csv(filename, ('tau', 'qmean', 'dq', 'lo', 'hi'), band.rows())
