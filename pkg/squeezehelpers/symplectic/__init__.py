from .matrix import SymplecticMatrix, rotation, squeezed_fourier, compose, symmetric_product, anticommutator, \
    is_equidiagonal
from .profile import AmplitudeProfile
from .propagator import EvolutionFamily, ConvergenceReport, generator, propagate, propagate_family, propagate_batch, \
    propagate_symmetric, convergence_check
from .classification import Regime, RegimeReport, classify

__all__ = ['SymplecticMatrix', 'rotation', 'squeezed_fourier', 'compose', 'symmetric_product', 'anticommutator',
           'is_equidiagonal', 'AmplitudeProfile', 'EvolutionFamily', 'ConvergenceReport', 'generator', 'propagate',
           'propagate_family', 'propagate_batch', 'propagate_symmetric', 'convergence_check', 'Regime',
           'RegimeReport', 'classify']
