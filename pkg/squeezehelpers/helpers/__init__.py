from .numeric import normalize_phase, sign_change_brackets, vectorized_bisection

__all__ = ['normalize_phase', 'sign_change_brackets', 'vectorized_bisection']
