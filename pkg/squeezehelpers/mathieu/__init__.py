from .params import OPERATION_INTERVAL, MathieuParams, mathieu_profile, monodromy, monodromy_batch
from .scan import ScanGrid, StruttMap, strutt_map
from .curves import CurveKind, SqueezeCurve, trace_curve, find_intersection

__all__ = ['OPERATION_INTERVAL', 'MathieuParams', 'mathieu_profile', 'monodromy', 'monodromy_batch', 'ScanGrid',
           'StruttMap', 'strutt_map', 'CurveKind', 'SqueezeCurve', 'trace_curve', 'find_intersection']
