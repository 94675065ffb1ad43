from .gaussian import GaussianPacket, Congruence, ShadowBand, shadow_multiplier, evolve_center, covariance, \
    uncertainty_q, uncertainty_p, probability_density, monte_carlo_uncertainty, trajectory_congruence, \
    uncertainty_shadow

__all__ = ['GaussianPacket', 'Congruence', 'ShadowBand', 'shadow_multiplier', 'evolve_center', 'covariance',
           'uncertainty_q', 'uncertainty_p', 'probability_density', 'monte_carlo_uncertainty',
           'trajectory_congruence', 'uncertainty_shadow']
