# =========================================================================== #
#                           ENERGIES AND GRADIENTS                            #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \energy.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Tuesday August 4th 2026, 7:11:35 pm                            #
# Last Modified: Thursday August 27th 2026, 6:48:57 pm                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Site evaluation, total energy, gradient and Cauchy-Born value.

F_eps(u, A) = sum over the sites i of A of eps^N phi_i(u). Sums run in
enumeration order through math.fsum so repeated evaluations agree bitwise.
"""
import logging
import math

import numpy as np

from lattice_studio.lattice.domain import ExtensionPolicy, LatticeDomain
from lattice_studio.lattice.field import LatticeField
from lattice_studio.lattice.stencil import Stencil
from lattice_studio.utils.exceptions import DifferentiabilityError

logger = logging.getLogger(__name__)

def _sites(u, A):
    if A is None:
        return u.domain
    if not u.domain.same_sites(A) and A.size:
        return u.domain.subdomain(A.lower, A.shape)
    return A

def site_densities(potential, u, A=None, policy=None):
    """phi_i for every site of A, shape A.shape."""
    stencil = Stencil.from_field(u, potential.reach, policy, _sites(u, A))
    return potential.density(stencil)

def evaluate(potential, i, u, policy=None):
    """phi_i at the site with integer coordinates i."""
    i = np.asarray(i, dtype=int)
    sites = u.domain.subdomain(i, (1,) * u.N)
    return float(site_densities(potential, u, sites, policy).ravel()[0])

def energy(potential, u, A=None, policy=None):
    """eps^N-weighted sum of the site densities over A (default all sites)."""
    densities = site_densities(potential, u, A, policy)
    return u.epsilon ** u.N * math.fsum(densities.ravel())

def _crop(grad, sites, reach, domain):
    """Restricts a padded gradient array to the sites of ``domain``."""
    out = np.zeros(domain.shape + (domain.n,))
    lower = sites.lower - reach
    upper = lower + np.array(grad.shape[:-1]) - 1
    lo = np.maximum(lower, domain.lower)
    hi = np.minimum(upper, domain.upper)
    if np.all(hi >= lo):
        src = tuple(slice(a - l, b - l + 1) for a, b, l in zip(lo, hi, lower))
        dst = tuple(slice(a - l, b - l + 1) for a, b, l in zip(lo, hi, domain.lower))
        out[dst] = grad[src]
    return out

def _finite_difference(potential, u, A, policy, h):
    values = np.array(u.values)
    grad = np.zeros_like(values)
    for index in np.ndindex(values.shape):
        step = h * max(1.0, abs(values[index]))
        saved = values[index]
        values[index] = saved + step
        up = energy(potential, u.with_values(values), A, policy)
        values[index] = saved - step
        down = energy(potential, u.with_values(values), A, policy)
        values[index] = saved
        grad[index] = (up - down) / (2 * step)
    return grad

def gradient(potential, u, A=None, policy=None, h=1e-5, strict=False):
    """Gradient of energy(potential, u, A) with respect to the values of u.

    Analytic partials are used when every term provides them; otherwise
    central differences with relative step h.

    Parameters
    ----------
    strict : bool, optional (default=False)
        Raise DifferentiabilityError at non-differentiable configurations.

    Returns
    -------
    LatticeField
    """
    sites = _sites(u, A)
    stencil = Stencil.from_field(u, potential.reach, policy, sites)
    if strict and potential.singular(stencil).any():
        raise DifferentiabilityError("energy is not differentiable at this field.")
    if not potential.has_gradient:
        logger.debug("%s has no analytic gradient, using central differences",
                     potential.name)
        return u.with_values(_finite_difference(potential, u, A, policy, h))
    _, partials = potential.density_and_partials(stencil)
    padded = stencil.accumulate(partials) * u.epsilon ** u.N
    return u.with_values(_crop(padded, sites, potential.reach, u.domain))

def cauchy_born(potential, M):
    """Per-site density of the affine field u(i) = M i, averaged over a period."""
    potential = potential.bulk()
    M = np.array(M, dtype=float, ndmin=2)
    if M.shape != (potential.n, potential.N):
        raise ValueError("M has shape %s, expected (%d, %d)."
                         % (M.shape, potential.n, potential.N))
    T = potential.period or 1
    domain = LatticeDomain.cell(T, potential.N, potential.n)
    u = LatticeField.affine(domain, M)
    densities = site_densities(potential, u, policy=ExtensionPolicy.affine(M))
    return math.fsum(densities.ravel()) / densities.size
