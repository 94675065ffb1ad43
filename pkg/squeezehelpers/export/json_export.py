"""
JSON documents: design descriptors, matrices, reports and run manifests.
"""
import hashlib
import json
import logging
import math

import numpy as np

from squeezehelpers.export.csv_export import atomic_write

logger = logging.getLogger(__name__)


def _default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if hasattr(obj, 'as_dict'):
        return obj.as_dict()
    if hasattr(obj, 'to_dict'):
        return obj.to_dict()
    if hasattr(obj, 'value'):
        return obj.value
    raise TypeError('Object of type %s is not JSON serializable' % type(obj).__name__)


def _sanitize(obj):
    # json would emit NaN/Infinity, which is not valid JSON
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def dumps(obj):
    """
    Deterministic JSON text: sorted keys, two space indentation, trailing newline.
    """
    normalized = json.loads(json.dumps(obj, default=_default))
    return json.dumps(_sanitize(normalized), indent=2, sort_keys=True, allow_nan=False) + '\n'


def write_json(filename, obj):
    """
    :param filename: Target file name.
    :param obj: Object made of dicts, lists, numbers, numpy values or objects with ``as_dict``/``to_dict``.
    :return: The target file name.
    """
    text = dumps(obj)
    atomic_write(filename, lambda f: f.write(text))
    logger.debug('Wrote %s', filename)
    return filename


def read_json(filename):
    """
    :raises ValueError: If the file is not valid JSON.
    """
    with open(filename, encoding='utf-8') as f:
        return json.load(f)


def sha256_file(filename):
    """
    Hex digest of the file contents.
    """
    h = hashlib.sha256()
    with open(filename, 'rb') as f:
        for chunk in iter(lambda: f.read(1 << 20), b''):
            h.update(chunk)
    return h.hexdigest()
