from .theta import GammaFunction, Theta, SineSeriesTheta, LinearTheta
from .toeplitz import ThetaDesign, CoefficientAudit, solve_coefficients, closed_form_coefficients, coefficient_audit, \
    theta_eval
from .synthesis import beta_from_theta, design_profile, PulseSequence
from .validation import DesignReport, Eigentrajectories, SuitabilityDiagnostics, validate_design, eigentrajectories, \
    suitability, count_sign_changes

__all__ = ['GammaFunction', 'Theta', 'SineSeriesTheta', 'LinearTheta', 'ThetaDesign', 'CoefficientAudit',
           'solve_coefficients', 'closed_form_coefficients', 'coefficient_audit', 'theta_eval', 'beta_from_theta',
           'design_profile', 'PulseSequence', 'DesignReport', 'Eigentrajectories', 'SuitabilityDiagnostics',
           'validate_design', 'eigentrajectories', 'suitability', 'count_sign_changes']
