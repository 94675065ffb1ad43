class DomainError(ValueError):
    """
    Raised when an amplitude profile is evaluated outside of its domain.
    """
    pass


class PreconditionError(ValueError):
    """
    Raised when an input violates a structural requirement, e.g. an asymmetric profile where a symmetric one is
    needed or a non-equidiagonal matrix in a symmetric product.
    """
    pass


class NonSymplecticError(ValueError):
    """
    Raised when a matrix expected to be symplectic has a determinant outside of the tolerance.
    """

    def __init__(self, det, tol):
        super().__init__('Matrix is not symplectic: det = %.15g deviates from 1 by more than %g' % (det, tol))
        self.det = det
        self.tol = tol


class MalformedDesignError(ValueError):
    """
    Raised when theta has a zero at which its derivative is not +-2, so that the synthesized amplitude is
    genuinely singular.
    """

    def __init__(self, tau, derivative):
        super().__init__('theta vanishes at tau = %.12g with theta\' = %.12g, expected +-2' % (tau, derivative))
        self.tau = tau
        self.derivative = derivative


class IntegrationError(ArithmeticError):
    """
    Raised when the propagation produces non-finite matrix entries.

    :param last_valid_tau: Last checkpoint up to which the propagation was finite.
    """

    def __init__(self, last_valid_tau):
        super().__init__('Propagation became non-finite after tau = %.12g' % last_valid_tau)
        self.last_valid_tau = last_valid_tau


class IntersectionNotFoundError(RuntimeError):
    """
    Raised when two squeeze curves do not cross inside their common parameter range.
    """
    pass
