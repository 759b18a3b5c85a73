"""ferrojet: solitary waves on a ferrofluid jet around a current-carrying wire.

Computes the spectral picture of the linearised axisymmetric travelling-wave
problem, traces the critical curves in the (beta0, gamma0) parameter plane,
evaluates the closed-form normal-form coefficients for arbitrary
magnetisation laws, solves the reduced homoclinic-orbit problems of the
three bifurcation regions, reconstructs leading-order surface profiles and
independently verifies the coefficient formulas by numerical Taylor
extraction of the explicit energy functional.
"""

__version__ = "0.1.0"

from . import (coefficients, errors, magnetisation, profiles, reduced,  # noqa: F401
               specfun, spectrum, verify)
