from .csv_export import atomic_write, format_value, write_csv, read_csv, write_raster, write_curves, write_profile, \
    write_trajectories, write_shadow
from .json_export import dumps, write_json, read_json, sha256_file

__all__ = ['atomic_write', 'format_value', 'write_csv', 'read_csv', 'write_raster', 'write_curves', 'write_profile',
           'write_trajectories', 'write_shadow', 'dumps', 'write_json', 'read_json', 'sha256_file']
