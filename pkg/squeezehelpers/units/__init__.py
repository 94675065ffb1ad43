from .physical import PhysicalContext, TrapDrive, trap_to_dimensionless, required_voltages, magnetic_beta, \
    required_magnetic_field, PROTON_MASS, ELEMENTARY_CHARGE, SPEED_OF_LIGHT, HBAR

__all__ = ['PhysicalContext', 'TrapDrive', 'trap_to_dimensionless', 'required_voltages', 'magnetic_beta',
           'required_magnetic_field', 'PROTON_MASS', 'ELEMENTARY_CHARGE', 'SPEED_OF_LIGHT', 'HBAR']
