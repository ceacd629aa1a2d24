"""Scattering pipeline for the half-line Schrodinger operator -u'' + V u
with Robin boundary condition u'(0) = gamma u(0).

Submodules
----------
potentials   analytic catalog of decaying potentials
waves        regular and Jost solutions, two methods each
jost         Jost function, perturbation determinant, phase table
spectrum     negative eigenvalues, finite-difference oracle, Levinson count
asymptotics  high-energy expansion coefficients
traces       trace identities and the Levinson formula
cli          command-line front end
"""

from .potentials import (DecayClass, Moments, Potential, RobinParameter,
                         add, make_compact_bump, make_exponential,
                         make_gaussian, parse_potential, scale)

__all__ = [
    "DecayClass", "Moments", "Potential", "RobinParameter",
    "make_exponential", "make_gaussian", "make_compact_bump",
    "scale", "add", "parse_potential",
]

__version__ = "0.1.0"
