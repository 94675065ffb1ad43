# noinspection PyProtectedMember
from squeezehelpers._global_configuration import _Configuration
import sys

if sys.version_info < (3, 7, 0):
    import warnings

    warnings.warn(
        'The installed Python version reached its end-of-life. Please upgrade to a newer Python version for receiving '
        'further squeezehelpers updates.', Warning)

configuration = _Configuration()

__version__ = '0.3.0'
